"""Constructors for the first-order formulas behind every macro leaf.

Each builder splits its pattern at a midpoint so that the quantifier rank
grows logarithmically in the pattern length.  Bound variables get the
smallest indexed name (``y1``, ``z2``, ``x3``...) not already in scope, so
names repeat across sibling subformulas but never along a root-to-leaf path.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..strings import alpha_level
from .ast import (
    MAX, MIN, And, Equal, Exists, Forall, Label, Not, Or, Succ, Var, _term,
)

__all__ = [
    "Between", "RightOf", "LeftOf",
    "build_dist", "build_infix", "build_boundary", "build_centered",
    "build_gamma_ge", "build_sigma_ge",
]


@dataclass(frozen=True)
class Between:
    """The pattern fills the gap strictly between ``t1`` and ``t2``."""
    t1: object
    t2: object


@dataclass(frozen=True)
class RightOf:
    """The pattern starts immediately to the right of ``t``."""
    t: object


@dataclass(frozen=True)
class LeftOf:
    """The pattern ends immediately to the left of ``t``."""
    t: object


def _fresh(prefix, scope):
    i = 1
    while f"{prefix}{i}" in scope:
        i += 1
    return f"{prefix}{i}"


def _scope_of(*terms):
    return frozenset(t.name for t in terms if isinstance(t, Var))


# distance

def _dist_le(t1, t2, n, scope):
    if n == 0:
        return Equal(t1, t2)
    if n == 1:
        return Or((Equal(t1, t2), Succ(t1, t2)))
    y = _fresh("y", scope)
    inner = scope | {y}
    return Exists(y, And((
        _dist_le(t1, Var(y), n // 2, inner),
        _dist_le(Var(y), t2, n - n // 2, inner),
    )))


def build_dist(t1, t2, n: int):
    """``pos(t2) - pos(t1)`` lies in ``[0, n]``; rank ``ceil(log2 n)``.

    ``n == 0`` yields the rank-0 formula ``t1 = t2``.
    """
    if n < 0:
        raise ValueError("distance bound must be a natural number")
    t1, t2 = _term(t1), _term(t2)
    return _dist_le(t1, t2, n, _scope_of(t1, t2))


# infixes

def _between(t1, alpha, t2, scope):
    k = len(alpha)
    z = _fresh("z", scope)
    inner = scope | {z}
    vz = Var(z)
    if k == 1:
        return Exists(z, And((Label(alpha[0], vz), Succ(t1, vz), Succ(vz, t2))))
    if k == 2:
        return Exists(z, And((Label(alpha[0], vz), Succ(t1, vz),
                              _between(vz, alpha[1:], t2, inner))))
    c = (k + 1) // 2
    return Exists(z, And((
        Label(alpha[c - 1], vz),
        _between(t1, alpha[:c - 1], vz, inner),
        _between(vz, alpha[c:], t2, inner),
    )))


def _right(t, alpha, scope):
    k = len(alpha)
    y = _fresh("y", scope)
    inner = scope | {y}
    vy = Var(y)
    if k == 1:
        return Exists(y, And((Label(alpha[0], vy), Succ(t, vy))))
    if k == 2:
        return Exists(y, And((Label(alpha[0], vy), Succ(t, vy),
                              _right(vy, alpha[1:], inner))))
    c = (k + 1) // 2
    return Exists(y, And((
        Label(alpha[c - 1], vy),
        _between(t, alpha[:c - 1], vy, inner),
        _right(vy, alpha[c:], inner),
    )))


def _left(alpha, t, scope):
    k = len(alpha)
    y = _fresh("y", scope)
    inner = scope | {y}
    vy = Var(y)
    if k == 1:
        return Exists(y, And((Succ(vy, t), Label(alpha[0], vy))))
    if k == 2:
        return Exists(y, And((Label(alpha[0], vy), _between(vy, alpha[1:], t, inner))))
    c = (k + 1) // 2
    return Exists(y, And((
        Label(alpha[c - 1], vy),
        _left(alpha[:c - 1], vy, inner),
        _between(vy, alpha[c:], t, inner),
    )))


def build_infix(alpha: str, placement):
    """Pattern ``alpha`` placed relative to one or two terms.

    ``placement`` is ``Between(t1, t2)``, ``RightOf(t)`` or ``LeftOf(t)``.
    The rank is ``ceil(log2(len(alpha) + 1))``.
    """
    if not alpha:
        raise ValueError("infix pattern must be nonempty")
    if isinstance(placement, Between):
        t1, t2 = _term(placement.t1), _term(placement.t2)
        return _between(t1, alpha, t2, _scope_of(t1, t2))
    if isinstance(placement, RightOf):
        t = _term(placement.t)
        return _right(t, alpha, _scope_of(t))
    if isinstance(placement, LeftOf):
        t = _term(placement.t)
        return _left(alpha, t, _scope_of(t))
    raise TypeError(f"unknown placement {placement!r}")


# prefixes and suffixes

def _prefix(s, scope):
    k = len(s)
    head = Label(s[0], MIN)
    if k == 1:
        return head
    if k <= 3:
        return And((head, _right(MIN, s[1:], scope)))
    c = (k + 2) // 2  # ceil((k + 1) / 2)
    x = _fresh("x", scope)
    inner = scope | {x}
    vx = Var(x)
    return And((head, Exists(x, And((
        Label(s[c - 1], vx),
        _between(MIN, s[1:c - 1], vx, inner),
        _right(vx, s[c:], inner),
    )))))


def _suffix(s, scope):
    k = len(s)
    tail = Label(s[-1], MAX)
    if k == 1:
        return tail
    if k <= 3:
        return And((tail, _left(s[:-1], MAX, scope)))
    f = k // 2
    x = _fresh("x", scope)
    inner = scope | {x}
    vx = Var(x)
    return And((tail, Exists(x, And((
        Label(s[f - 1], vx),
        _left(s[:f - 1], vx, inner),
        _between(vx, s[f:k - 1], MAX, inner),
    )))))


def build_boundary(end: str, k: int, s: str):
    """``pref_k = s`` (``end="pref"``) or ``suff_k = s`` (``end="suff"``)."""
    if k < 1:
        raise ValueError("boundary length must be at least 1")
    if len(s) != k:
        raise ValueError(f"boundary word {s!r} does not have length {k}")
    if end == "pref":
        return _prefix(s, frozenset())
    if end == "suff":
        return _suffix(s, frozenset())
    raise ValueError(f"end must be 'pref' or 'suff', got {end!r}")


# centered occurrences and counting

def _centered(alpha, x, scope):
    k = len(alpha)
    if k == 1:
        return Label(alpha[0], x)
    c = (k + 1) // 2
    return And((
        Label(alpha[c - 1], x),
        _left(alpha[:c - 1], x, scope),
        _right(x, alpha[c:], scope),
    ))


def build_centered(alpha: str, x="x"):
    """``alpha`` occurs centered on the free variable ``x``; rank ``q - 1``."""
    alpha_level(alpha)
    x = _term(x)
    return _centered(alpha, x, _scope_of(x))


def _far_from_ends(x, margin, scope):
    return And((
        Not(_dist_le(MIN, x, margin, scope)),
        Not(_dist_le(x, MAX, margin, scope)),
    ))


def build_gamma_ge(alpha: str, n: int):
    """At least ``n`` free occurrences of ``alpha``; rank ``q + n - 1``."""
    if n < 1:
        raise ValueError("count threshold must be at least 1")
    q = alpha_level(alpha)
    margin = 1 << (q - 1)
    names = [f"x{i}" for i in range(1, n + 1)]
    scope = frozenset(names)
    xs = [Var(v) for v in names]
    distinct = [Not(Equal(xs[i], xs[j])) for i in range(n) for j in range(i + 1, n)]
    body = And((
        *distinct,
        *(_centered(alpha, x, scope) for x in xs),
        *(_far_from_ends(x, margin, scope) for x in xs),
    ))
    for v in reversed(names):
        body = Exists(v, body)
    return body


def build_sigma_ge(alpha: str, n: int):
    """Free scattering of ``alpha`` is at least ``n``; rank ``q + n - 1``.

    With ``m = 2**(q-1)``: for every choice of ``n - 1`` anchor positions
    there is a free occurrence farther than ``m`` from all of them.  The
    free occurrences fit in ``n - 1`` windows of width ``2m`` exactly when
    the scattering is below ``n``.  For ``n == 1`` this is the ``gamma >= 1``
    formula.
    """
    if n < 1:
        raise ValueError("count threshold must be at least 1")
    if n == 1:
        return build_gamma_ge(alpha, 1)
    q = alpha_level(alpha)
    margin = 1 << (q - 1)
    names = [f"x{i}" for i in range(1, n + 1)]
    scope = frozenset(names)
    anchors = [Var(v) for v in names[:-1]]
    last = Var(names[-1])
    separated = []
    for a in anchors:
        separated.append(Not(_dist_le(a, last, margin, scope)))
        separated.append(Not(_dist_le(last, a, margin, scope)))
    body = Exists(names[-1], And((
        _centered(alpha, last, scope),
        _far_from_ends(last, margin, scope),
        *separated,
    )))
    for v in reversed(names[:-1]):
        body = Forall(v, body)
    return body
