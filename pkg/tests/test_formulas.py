import json

import pytest
from hypothesis import given, strategies as st

from efsynth import FormulaParseError, deserialize, expand, qr_core, qr_macro, render, serialize
from efsynth.formulas import (
    FALSE, MAX, MIN, TRUE, And, Between, DistCmp, Equal, Exists, Forall, GammaCmp, Label,
    LeftOf, Not, Or, PrefCmp, RightOf, SigmaCmp, Succ, SuffCmp, Var, bound_paths_unique,
    build_boundary, build_centered, build_dist, build_gamma_ge, build_infix, build_sigma_ge,
    clog2, conj, disj, expanded_size, free_vars, size_core,
)


def leaf_grid():
    for n in range(0, 65):
        for cmp in ("<=", "<", ">=", ">", "="):
            yield DistCmp(cmp, n)
    for k in range(1, 17):
        s = ("ab" * 9)[:k]
        for cmp in ("=", "!="):
            yield PrefCmp(cmp, k, s)
            yield SuffCmp(cmp, k, s)
    for alpha in ("a", "aba", "abababa"):
        for n in range(1, 5):
            for cmp in (">=", "<", "="):
                yield GammaCmp(cmp, alpha, n)
                yield SigmaCmp(cmp, alpha, n)


leaves = st.one_of(
    st.builds(DistCmp, st.sampled_from(["<=", "<", ">=", ">", "="]), st.integers(0, 20)),
    st.builds(lambda c, s: PrefCmp(c, len(s), s), st.sampled_from(["=", "!="]),
              st.text("ab", min_size=1, max_size=6)),
    st.builds(lambda c, s: SuffCmp(c, len(s), s), st.sampled_from(["=", "!="]),
              st.text("ab", min_size=1, max_size=6)),
    st.builds(GammaCmp, st.sampled_from([">=", "<", "="]), st.sampled_from(["a", "b", "aba"]),
              st.integers(1, 3)),
    st.builds(SigmaCmp, st.sampled_from([">=", "<", "="]), st.sampled_from(["a", "b", "aba"]),
              st.integers(1, 3)),
)
macros = st.recursive(
    leaves | st.just(TRUE) | st.just(FALSE),
    lambda kids: st.one_of(
        st.builds(Not, kids),
        st.builds(lambda xs: And(tuple(xs)), st.lists(kids, min_size=2, max_size=3)),
        st.builds(lambda xs: Or(tuple(xs)), st.lists(kids, min_size=2, max_size=3)),
    ),
    max_leaves=5,
)


def test_dist_builder():
    assert build_dist(MIN, MAX, 1) == Or((Equal(MIN, MAX), Succ(MIN, MAX)))
    assert build_dist("x", "y", 0) == Equal(Var("x"), Var("y"))
    assert qr_core(build_dist(MIN, MAX, 8)) == 3
    with pytest.raises(ValueError):
        build_dist(MIN, MAX, -1)


def test_infix_builder():
    z = Var("z1")
    assert build_infix("a", Between("t1", "t2")) == Exists(
        "z1", And((Label("a", z), Succ(Var("t1"), z), Succ(z, Var("t2")))))
    assert qr_core(build_infix("abc", RightOf("t"))) == 2
    assert qr_core(build_infix("a", LeftOf("t"))) == 1
    for k in range(1, 12):
        for place in (Between(MIN, MAX), RightOf(MIN), LeftOf(MAX)):
            assert qr_core(build_infix("a" * k, place)) == clog2(k + 1)


def test_boundary_builder():
    assert build_boundary("pref", 1, "s") == Label("s", MIN)
    assert build_boundary("suff", 1, "e") == Label("e", MAX)
    assert qr_core(build_boundary("pref", 4, "aaac")) == 2
    with pytest.raises(ValueError):
        build_boundary("pref", 2, "abc")


def test_centered_builder_abc():
    x, y = Var("x"), Var("y1")
    want = And((
        Label("b", x),
        Exists("y1", And((Succ(y, x), Label("a", y)))),
        Exists("y1", And((Label("c", y), Succ(x, y)))),
    ))
    assert build_centered("abc") == want
    assert render(want, "ascii") == (
        "(P_b(x) & exists y1 (S(y1, x) & P_a(y1)) & exists y1 (P_c(y1) & S(x, y1)))")
    assert build_centered("a") == Label("a", x)
    assert qr_core(build_centered("abcdefg")) == 2
    assert free_vars(build_centered("abcdefg")) == {"x"}


def test_gamma_builder_shape():
    f = build_gamma_ge("abc", 2)
    assert isinstance(f, Exists) and isinstance(f.body, Exists)
    body = f.body.body
    assert Not(Equal(Var("x1"), Var("x2"))) in body.args
    assert qr_core(f) == 3
    assert qr_core(build_gamma_ge("c", 1)) == 1


def test_sigma_builder_shape():
    f = build_sigma_ge("aaa", 2)
    assert isinstance(f, Forall) and isinstance(f.body, Exists)
    assert qr_core(f) == 3
    assert build_sigma_ge("aaa", 1) == build_gamma_ge("aaa", 1)


def test_expand_definitions():
    assert expand(DistCmp("=", 5)) == And((build_dist(MIN, MAX, 5), Not(build_dist(MIN, MAX, 4))))
    assert expand(PrefCmp("!=", 4, "aaab")) == Not(build_boundary("pref", 4, "aaab"))
    assert expand(TRUE) == TRUE


def test_rank_examples():
    assert qr_macro(DistCmp("<=", 8)) == 3
    assert qr_macro(GammaCmp(">=", "c", 1)) == 1
    assert qr_macro(PrefCmp("=", 4, "aaac")) == 2
    assert qr_macro(And((PrefCmp("=", 1, "s"), SuffCmp("!=", 1, "e")))) == 0
    assert qr_core(Label("a", MIN)) == 0
    intro = Exists("x1", Exists("x2", Exists("x3", And((
        Label("s", Var("x1")), Succ(Var("x1"), Var("x2")), Label("t", Var("x2")),
        Succ(Var("x2"), Var("x3")), Label("v", Var("x3")))))))
    assert qr_core(intro) == 3


def test_rank_closed_forms_on_grid():
    for leaf in leaf_grid():
        core = expand(leaf)
        assert qr_core(core) == qr_macro(leaf), leaf
        assert free_vars(core) == frozenset()
        assert bound_paths_unique(core)
        assert size_core(core) == expanded_size(leaf)


def test_leaf_validation():
    with pytest.raises(ValueError):
        DistCmp("<>", 3)
    with pytest.raises(ValueError):
        PrefCmp("=", 2, "a")
    with pytest.raises(ValueError):
        GammaCmp(">=", "ab", 1)
    with pytest.raises(ValueError):
        SigmaCmp(">=", "a", 0)


def test_render_styles():
    assert render(DistCmp("<=", 8)) == "d(min,max) <= 8"
    assert render(Label("a", MIN), "ascii") == "P_a(min)"
    assert render(PrefCmp("=", 1, "s")) == 'pref_1 = "s"'
    assert render(And((Label("a", MIN), Label("b", MAX))), "ascii") == "(P_a(min) & P_b(max))"
    assert "∃" in render(DistCmp("<=", 4), "unicode")
    with pytest.raises(ValueError):
        render(TRUE, "latex")


def test_conj_disj_collapse():
    assert conj() == TRUE and disj() == FALSE
    assert conj(TRUE) == TRUE
    assert And((And((TRUE, FALSE)), TRUE)).args == (TRUE, FALSE, TRUE)


def test_serialization_basics():
    g = GammaCmp(">=", "aba", 2)
    assert deserialize(serialize(g)) == g
    assert serialize(g) == '{"kind":"gamma","alpha":"aba","cmp":">=","n":2}'
    with pytest.raises(FormulaParseError):
        deserialize("{bad")
    with pytest.raises(FormulaParseError) as err:
        deserialize('{"kind":"and","args":[{"kind":"true"},{"kind":"dist","cmp":"<=","n":"x"}]}')
    assert err.value.position == "$.args[1].n"
    with pytest.raises(FormulaParseError):
        deserialize('{"kind":"wat"}')
    env = json.dumps({"formula": {"kind": "true"}, "rank": 0})
    assert deserialize(env) == TRUE


@given(macros)
def test_serialization_round_trip(f):
    text = serialize(f)
    assert deserialize(text) == f
    assert serialize(deserialize(text)) == text
    core = expand(f)
    assert deserialize(serialize(core)) == core


@given(macros)
def test_rank_of_expansion(f):
    assert qr_core(expand(f)) == qr_macro(f)
    assert qr_core(Not(expand(f))) == qr_core(expand(f))
