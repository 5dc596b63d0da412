"""Acceptance criteria, one test each.

Every test prints ``criterion N: PASS|FAIL (detail)``; the lines are
repeated in the pytest terminal summary.  Run this file directly to get
just those lines.
"""
import itertools
import random
import time
from functools import lru_cache

from efsynth import (
    DUPLICATOR, SPOILER, Alphabet, CapacityError, Sample, check_consistent, duplicator_wins,
    efsim, eval_core, eval_macro, expand, free_occurrences, game_efsim, game_winner, gamma,
    l_segmentation, minimize_ddf, phi_set, qr_core, qr_macro, r_type, sigma,
    synthesize,
)
from efsynth.cli import main as cli_main
from efsynth.formulas import And, DistCmp, GammaCmp, PrefCmp, SigmaCmp, SuffCmp
from efsynth.strings import _free_occurrences, _sigma

from conftest import LEXICON_N, LEXICON_P, words
from oracles import min_groups, min_maximal_cover
from test_formulas import leaf_grid
from test_synthesis import random_sample

RESULTS = []


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def core_holds(w, f):
    return eval_core(w, expand(f))


def test_criterion_1_scattering_of_aba():
    w, alpha = "ababababbababaaba", "aba"
    _free_occurrences.cache_clear()
    _sigma.cache_clear()
    t = time.perf_counter()
    occ = list(free_occurrences(w, alpha))
    g = gamma(w, alpha)
    segs = [sorted(s) for s in l_segmentation(occ, 4)]
    s = sigma(w, alpha)
    ms = (time.perf_counter() - t) * 1000
    ok = occ == [4, 6, 11, 13] and g == 4 and segs == [[4, 6], [11, 13]] and s == 2 and ms < 1
    report(1, ok, f"occurrences={occ} gamma={g} segments={segs} sigma={s} in {ms:.3f} ms")


def test_criterion_2_lexicon_sample():
    t = time.perf_counter()
    S = Sample(LEXICON_P, LEXICON_N)
    r = max(efsim(u, v) for u in LEXICON_P for v in LEXICON_N)
    h = synthesize(S)
    rep = check_consistent(S, h, cross_check=True)
    members = [
        PrefCmp("=", 1, "s") in phi_set("stviil", "ktvive", 1),
        SuffCmp("!=", 1, "e") in phi_set("stviil", "stpiie", 1),
        PrefCmp("=", 1, "s") in phi_set("stviie", "ktvive", 1),
        SigmaCmp("<", "p", 1) in phi_set("stviie", "stpiie", 1),
    ]
    m = minimize_ddf(S, 20)
    m_ok = m.m == 1 and check_consistent(S, m, cross_check=True).consistent
    known = And((PrefCmp("=", 1, "s"), GammaCmp(">=", "v", 1)))
    known_ok = check_consistent(S, known, cross_check=True).consistent
    secs = time.perf_counter() - t
    ok = (r == 1 and h.qr == 1 and rep.consistent and not rep.disagreements and all(members)
          and m_ok and known_ok and secs < 1)
    report(2, ok, f"r={r} synth consistent={rep.consistent} memberships={members} "
                  f"minimized m={m.m} pref_1=s & gamma(v)>=1 consistent={known_ok} in {secs:.3f} s")


def test_criterion_3_listed_set_members():
    p3 = phi_set("aaacbbb", "aaabbbbb", 2)
    inside = [PrefCmp("=", 4, "aaac"), PrefCmp("!=", 4, "aaab"),
              GammaCmp(">=", "c", 1), GammaCmp("<", "bbb", 1)]
    outside = [PrefCmp("=", 3, "aaa"), PrefCmp("!=", 3, "aaa")]
    p4 = phi_set("bbaaaaaaaabb", "bbaaaaaabb", 4)
    ok = (all(f in p3 for f in inside) and not any(f in p3 for f in outside)
          and p3.family("length") == () and SigmaCmp(">=", "aaa", 2) in p4
          and DistCmp(">=", 10) in p4)
    report(3, ok, f"|phi(aaacbbb,aaabbbbb,2)|={len(p3)} length family empty={not p3.family('length')} "
                  f"|phi(bbaaaaaaaabb,bbaaaaaabb,4)|={len(p4)}")


def test_criterion_4_closed_form_against_minimax():
    t = time.perf_counter()
    ws = list(words("ab", 6))
    mismatches = checked = 0
    for u, v in itertools.permutations(ws, 2):
        e = efsim(u, v)
        if e != game_efsim(u, v):
            mismatches += 1
        for r in range(e + 2):
            checked += 1
            if duplicator_wins(u, v, r) != (game_winner(u, v, r) == DUPLICATOR):
                mismatches += 1
    secs = time.perf_counter() - t
    report(4, mismatches == 0 and secs <= 600,
           f"{len(ws) * (len(ws) - 1)} ordered pairs, {checked} games, "
           f"{mismatches} mismatches in {secs:.1f} s")


def test_criterion_5_separation_and_rank_bounds():
    ws = list(words("ab", 5))
    bad = formulas = 0
    for u, v in itertools.permutations(ws, 2):
        e = efsim(u, v)
        for r in range(4):
            phis = phi_set(u, v, r)
            if bool(phis) != (game_winner(u, v, r) == SPOILER):
                bad += 1
            for f in phis:
                formulas += 1
                if not (eval_macro(u, f) and not eval_macro(v, f)):
                    bad += 1
                if not (core_holds(u, f) and not core_holds(v, f)):
                    bad += 1
                if not e <= qr_macro(f) <= r:
                    bad += 1
    report(5, bad == 0, f"{formulas} formulas over {len(ws) * (len(ws) - 1)} pairs, {bad} failures")


def test_criterion_6_rank_closed_forms():
    bad = [leaf for leaf in leaf_grid() if qr_core(expand(leaf)) != qr_macro(leaf)]
    spots = (qr_core(expand(DistCmp("<=", 8))), qr_core(expand(PrefCmp("=", 4, "aaac"))))
    n = sum(1 for _ in leaf_grid())
    report(6, not bad and spots == (3, 2),
           f"{n} leaves, {len(bad)} mismatches, qr(dist<=8)={spots[0]} qr(pref=aaac)={spots[1]}")


def test_criterion_7_r_type():
    t = time.perf_counter()
    A = Alphabet(("a", "b"))
    vs = list(words("ab", 7))
    bad = checked = 0
    for r in (0, 1, 2):
        for w in words("ab", 5):
            ty = r_type(w, r, alphabet=A)
            for v in vs:
                checked += 1
                if eval_macro(v, ty) != (game_winner(w, v, r) == DUPLICATOR):
                    bad += 1
    secs = time.perf_counter() - t
    report(7, bad == 0 and secs <= 600, f"{checked} checks, {bad} mismatches in {secs:.1f} s")


def test_criterion_8_random_samples():
    rng = random.Random(2024)
    inconsistent = uncertified = skipped = ddf_bad = strictly_smaller = 0
    for _ in range(200):
        S = random_sample(rng)
        h = synthesize(S)
        rep = check_consistent(S, h, cross_check=True)
        if not rep.consistent or rep.disagreements:
            inconsistent += 1
        r = h.rank
        if r > 0:
            u, v = h.metadata["argmax_pair"]
            try:
                if game_winner(u, v, r - 1) != DUPLICATOR:
                    uncertified += 1
            except CapacityError:
                skipped += 1
        cover_opt = min_maximal_cover(S)
        groups_opt = min_groups(S)
        if minimize_ddf(S, mode="maximal").m != cover_opt:
            ddf_bad += 1
        if minimize_ddf(S, mode="groups").m != groups_opt:
            ddf_bad += 1
        strictly_smaller += groups_opt < cover_opt
    ok = inconsistent == uncertified == ddf_bad == 0
    report(8, ok, f"200 samples: {inconsistent} inconsistent, {uncertified} uncertified ranks "
                  f"({skipped} over capacity), {ddf_bad} minimization mismatches; "
                  f"grouped optimum below the single-string cover optimum in {strictly_smaller}")


def test_criterion_9_performance(tmp_path, capsys):
    rng = random.Random(9)
    pool = set()
    while len(pool) < 40:
        pool.add("".join(rng.choice("ab") for _ in range(25)))
    pool = sorted(pool)
    rng.shuffle(pool)
    lines = [f"+ {w}" for w in pool[:20]] + [f"- {w}" for w in pool[20:]]
    path = tmp_path / "big.sample"
    path.write_text("\n".join(lines) + "\n")
    t = time.perf_counter()
    code = cli_main(["synth", str(path)])
    secs = time.perf_counter() - t
    out = capsys.readouterr().out
    with capsys.disabled():
        report(9, code == 0 and secs < 60,
               f"|S|=1000, |P|=|N|=20, synth exit {code} in {secs:.2f} s, {out.splitlines()[0]}")


if __name__ == "__main__":
    import sys
    import pytest
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
