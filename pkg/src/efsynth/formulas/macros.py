"""Macro leaves: closed-form quantifier rank and expansion to core formulas."""
from __future__ import annotations

from functools import lru_cache

from .ast import (
    FALSE, MAX, MIN, TRUE, And, DistCmp, Exists, FalseConst, Forall, GammaCmp,
    Not, Or, PrefCmp, SigmaCmp, SuffCmp, TrueConst, Equal, Succ, Label,
    size_core,
)
from .builders import (
    build_boundary, build_dist, build_gamma_ge, build_sigma_ge,
)

__all__ = ["expand", "qr_macro", "expanded_size", "clog2"]


def clog2(n: int) -> int:
    """``ceil(log2 n)`` for ``n >= 1``; 0 for ``n <= 1``."""
    return 0 if n <= 1 else (n - 1).bit_length()


def _dist_ge(n):
    # d >= n  :=  d > n - 1  :=  not d <= n - 1
    if n == 0:
        return TRUE
    return Not(build_dist(MIN, MAX, n - 1))


@lru_cache(maxsize=4096)
def _expand_leaf(leaf):
    if isinstance(leaf, DistCmp):
        n = leaf.n
        if leaf.cmp == "<=":
            return build_dist(MIN, MAX, n)
        if leaf.cmp == ">":
            return Not(build_dist(MIN, MAX, n))
        if leaf.cmp == ">=":
            return _dist_ge(n)
        if leaf.cmp == "<":
            return FALSE if n == 0 else Not(_dist_ge(n))
        if n == 0:
            return build_dist(MIN, MAX, 0)
        return And((build_dist(MIN, MAX, n), _dist_ge(n)))
    if isinstance(leaf, (PrefCmp, SuffCmp)):
        end = "pref" if isinstance(leaf, PrefCmp) else "suff"
        f = build_boundary(end, leaf.k, leaf.s)
        return f if leaf.cmp == "=" else Not(f)
    if isinstance(leaf, (GammaCmp, SigmaCmp)):
        build = build_gamma_ge if isinstance(leaf, GammaCmp) else build_sigma_ge
        ge = build(leaf.alpha, leaf.n)
        if leaf.cmp == ">=":
            return ge
        if leaf.cmp == "<":
            return Not(ge)
        return And((ge, Not(build(leaf.alpha, leaf.n + 1))))
    raise TypeError(f"not a macro leaf: {leaf!r}")


def expand(m):
    """Replace every macro leaf by its first-order definition.

    Connectives are kept as they are; core subformulas pass through
    unchanged, so mixed formulas expand to pure core formulas.
    """
    if isinstance(m, (DistCmp, PrefCmp, SuffCmp, GammaCmp, SigmaCmp)):
        return _expand_leaf(m)
    if isinstance(m, Not):
        return Not(expand(m.arg))
    if isinstance(m, And):
        return And(tuple(expand(a) for a in m.args))
    if isinstance(m, Or):
        return Or(tuple(expand(a) for a in m.args))
    if isinstance(m, (Exists, Forall)):
        return type(m)(m.var, expand(m.body))
    if isinstance(m, (TrueConst, FalseConst, Equal, Succ, Label)):
        return m
    raise TypeError(f"not a formula: {m!r}")


def _qr_leaf(leaf):
    if isinstance(leaf, DistCmp):
        n = leaf.n
        if leaf.cmp in ("<=", ">"):
            return clog2(n)
        if leaf.cmp in (">=", "<"):
            return clog2(n - 1)
        return clog2(n)
    if isinstance(leaf, (PrefCmp, SuffCmp)):
        return clog2(leaf.k)
    if leaf.cmp == "=":
        return leaf.q + leaf.n
    return leaf.q + leaf.n - 1


def qr_macro(m) -> int:
    """Quantifier rank from the closed forms of the leaves."""
    if isinstance(m, (DistCmp, PrefCmp, SuffCmp, GammaCmp, SigmaCmp)):
        return _qr_leaf(m)
    if isinstance(m, (TrueConst, FalseConst, Equal, Succ, Label)):
        return 0
    if isinstance(m, Not):
        return qr_macro(m.arg)
    if isinstance(m, (And, Or)):
        return max((qr_macro(a) for a in m.args), default=0)
    if isinstance(m, (Exists, Forall)):
        return qr_macro(m.body) + 1
    raise TypeError(f"not a formula: {m!r}")


@lru_cache(maxsize=1 << 14)
def _leaf_size(leaf):
    return size_core(_expand_leaf(leaf))


def expanded_size(m) -> int:
    """``size_core(expand(m))`` with per-leaf caching."""
    if isinstance(m, (DistCmp, PrefCmp, SuffCmp, GammaCmp, SigmaCmp)):
        return _leaf_size(m)
    if isinstance(m, Not):
        return 1 + expanded_size(m.arg)
    if isinstance(m, (And, Or)):
        return max(len(m.args) - 1, 0) + sum(expanded_size(a) for a in m.args)
    if isinstance(m, (Exists, Forall)):
        return 2 + expanded_size(m.body)
    return size_core(m)
