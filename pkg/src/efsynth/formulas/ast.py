"""Formula syntax: terms, first-order nodes, macro leaves and connectives.

Core first-order formulas and macro formulas share the connective nodes
(``Not``, ``And``, ``Or``, ``TrueConst``, ``FalseConst``).  A formula whose
leaves are all macro leaves is a *macro formula*; one without macro leaves
is a *core formula*.  All nodes are immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import InvalidAlphaError
from ..strings import alpha_level

__all__ = [
    "Var", "Const", "MIN", "MAX", "Term",
    "Equal", "Succ", "Label", "Exists", "Forall",
    "Not", "And", "Or", "TrueConst", "FalseConst", "TRUE", "FALSE",
    "DistCmp", "PrefCmp", "SuffCmp", "GammaCmp", "SigmaCmp",
    "MACRO_LEAVES", "CORE_NODES",
    "conj", "disj", "is_macro", "is_core",
    "qr_core", "size_core", "free_vars", "bound_paths_unique", "subformulas",
]


# terms

@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name.isidentifier():
            raise ValueError(f"variable names must be identifiers, got {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str  # "min" or "max"

    def __post_init__(self):
        if self.name not in ("min", "max"):
            raise ValueError(f"unknown constant {self.name!r}")

    def __str__(self):
        return self.name


MIN = Const("min")
MAX = Const("max")
Term = Union[Var, Const]


def _term(t):
    if isinstance(t, (Var, Const)):
        return t
    if t in ("min", "max"):
        return Const(t)
    if isinstance(t, str):
        return Var(t)
    raise TypeError(f"not a term: {t!r}")


# first-order atoms and quantifiers

@dataclass(frozen=True)
class Equal:
    t1: Term
    t2: Term

    def __post_init__(self):
        object.__setattr__(self, "t1", _term(self.t1))
        object.__setattr__(self, "t2", _term(self.t2))


@dataclass(frozen=True)
class Succ:
    t1: Term
    t2: Term

    def __post_init__(self):
        object.__setattr__(self, "t1", _term(self.t1))
        object.__setattr__(self, "t2", _term(self.t2))


@dataclass(frozen=True)
class Label:
    symbol: str
    t: Term

    def __post_init__(self):
        if not isinstance(self.symbol, str) or len(self.symbol) != 1:
            raise ValueError(f"labels are single symbols, got {self.symbol!r}")
        object.__setattr__(self, "t", _term(self.t))


@dataclass(frozen=True)
class Exists:
    var: str
    body: object

    def __post_init__(self):
        Var(self.var)


@dataclass(frozen=True)
class Forall:
    var: str
    body: object

    def __post_init__(self):
        Var(self.var)


# connectives

@dataclass(frozen=True)
class Not:
    arg: object


def _flatten(cls, args):
    out = []
    for a in args:
        if isinstance(a, cls):
            out.extend(a.args)
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class And:
    """n-ary conjunction; nested conjunctions are flattened."""

    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", _flatten(And, self.args))


@dataclass(frozen=True)
class Or:
    """n-ary disjunction; nested disjunctions are flattened."""

    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", _flatten(Or, self.args))


@dataclass(frozen=True)
class TrueConst:
    pass


@dataclass(frozen=True)
class FalseConst:
    pass


TRUE = TrueConst()
FALSE = FalseConst()


def conj(*args):
    """Conjunction that collapses the empty and singleton cases."""
    if not args:
        return TRUE
    if len(args) == 1:
        return args[0]
    return And(args)


def disj(*args):
    """Disjunction that collapses the empty and singleton cases."""
    if not args:
        return FALSE
    if len(args) == 1:
        return args[0]
    return Or(args)


# macro leaves

DIST_CMPS = ("<=", "<", ">=", ">", "=")
BOUNDARY_CMPS = ("=", "!=")
COUNT_CMPS = (">=", "<", "=")


def _check_cmp(cmp, allowed, kind):
    if cmp not in allowed:
        raise ValueError(f"{kind} comparison must be one of {allowed}, got {cmp!r}")


@dataclass(frozen=True)
class DistCmp:
    """``d(min, max) cmp n``; holds on ``w`` iff ``|w| cmp n + 1``."""

    cmp: str
    n: int

    def __post_init__(self):
        _check_cmp(self.cmp, DIST_CMPS, "distance")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"distance bound must be a natural number, got {self.n!r}")


@dataclass(frozen=True)
class _BoundaryCmp:
    cmp: str
    k: int
    s: str

    def __post_init__(self):
        _check_cmp(self.cmp, BOUNDARY_CMPS, "boundary")
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"boundary length must be at least 1, got {self.k!r}")
        if not isinstance(self.s, str) or len(self.s) != self.k:
            raise ValueError(f"boundary word {self.s!r} does not have length {self.k}")


class PrefCmp(_BoundaryCmp):
    """``pref_k cmp s``; false (for ``=``) when the string is shorter than k."""


class SuffCmp(_BoundaryCmp):
    """``suff_k cmp s``; false (for ``=``) when the string is shorter than k."""


@dataclass(frozen=True)
class _CountCmp:
    cmp: str
    alpha: str
    n: int

    def __post_init__(self):
        _check_cmp(self.cmp, COUNT_CMPS, "count")
        if not isinstance(self.alpha, str):
            raise InvalidAlphaError(f"alpha must be a string, got {self.alpha!r}")
        alpha_level(self.alpha)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"count threshold must be at least 1, got {self.n!r}")

    @property
    def q(self):
        return alpha_level(self.alpha)


class GammaCmp(_CountCmp):
    """Free multiplicity of alpha compared with n."""


class SigmaCmp(_CountCmp):
    """Free scattering of alpha compared with n."""


MACRO_LEAVES = (DistCmp, PrefCmp, SuffCmp, GammaCmp, SigmaCmp)
CORE_NODES = (Equal, Succ, Label, Exists, Forall)
CONNECTIVES = (Not, And, Or, TrueConst, FalseConst)


def subformulas(f):
    """Pre-order iterator over all formula nodes of ``f``."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or)):
            stack.extend(reversed(g.args))
        elif isinstance(g, (Exists, Forall)):
            stack.append(g.body)


def is_macro(f) -> bool:
    return all(not isinstance(g, CORE_NODES) for g in subformulas(f))


def is_core(f) -> bool:
    return all(not isinstance(g, MACRO_LEAVES) for g in subformulas(f))


def qr_core(f) -> int:
    """Nesting depth of quantifiers."""
    if isinstance(f, (Equal, Succ, Label, TrueConst, FalseConst)):
        return 0
    if isinstance(f, Not):
        return qr_core(f.arg)
    if isinstance(f, (And, Or)):
        return max((qr_core(a) for a in f.args), default=0)
    if isinstance(f, (Exists, Forall)):
        return qr_core(f.body) + 1
    raise TypeError(f"not a core formula node: {f!r}")


def size_core(f) -> int:
    """Number of symbols: predicates, terms, quantifiers, variables and connectives."""
    if isinstance(f, (Equal, Succ)):
        return 3
    if isinstance(f, Label):
        return 2
    if isinstance(f, (TrueConst, FalseConst)):
        return 1
    if isinstance(f, Not):
        return 1 + size_core(f.arg)
    if isinstance(f, (And, Or)):
        return max(len(f.args) - 1, 0) + sum(size_core(a) for a in f.args)
    if isinstance(f, (Exists, Forall)):
        return 2 + size_core(f.body)
    raise TypeError(f"not a core formula node: {f!r}")


def _term_vars(*terms):
    return {t.name for t in terms if isinstance(t, Var)}


def free_vars(f) -> frozenset:
    if isinstance(f, (Equal, Succ)):
        return frozenset(_term_vars(f.t1, f.t2))
    if isinstance(f, Label):
        return frozenset(_term_vars(f.t))
    if isinstance(f, Not):
        return free_vars(f.arg)
    if isinstance(f, (And, Or)):
        return frozenset().union(*(free_vars(a) for a in f.args))
    if isinstance(f, (Exists, Forall)):
        return free_vars(f.body) - {f.var}
    return frozenset()


def bound_paths_unique(f, _above=None) -> bool:
    """True when no variable is re-bound below a quantifier binding it,
    and no bound variable shadows a free variable of the whole formula."""
    if _above is None:
        _above = free_vars(f)
    if isinstance(f, (Exists, Forall)):
        if f.var in _above:
            return False
        return bound_paths_unique(f.body, _above | {f.var})
    if isinstance(f, Not):
        return bound_paths_unique(f.arg, _above)
    if isinstance(f, (And, Or)):
        return all(bound_paths_unique(a, _above) for a in f.args)
    return True
