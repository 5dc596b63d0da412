"""Distinguishability sets: macro sentences of rank at most r true on u and false on v.

Four families are generated: length thresholds, prefix and suffix words,
and threshold counts of free infix occurrences.  Each element keeps a
provenance record so that listings and hypotheses can say where a
conjunct came from.
"""
from __future__ import annotations

from dataclasses import dataclass

from .efgame import efsim
from .errors import InconsistentSampleError, UndefinedSimilarityError
from .formulas.ast import DistCmp, GammaCmp, PrefCmp, SigmaCmp, SuffCmp
from .strings import alpha_level, candidate_alphas, gamma, sigma, text_of

__all__ = ["FAMILIES", "Entry", "DistinguishabilitySet", "phi_set", "phi_union", "sample_rank"]

FAMILIES = ("length", "pref", "suff", "sub")


@dataclass(frozen=True)
class Entry:
    """One distinguishability formula with where it came from.

    ``params`` is a tuple of ``(name, value)`` pairs; ``pair`` is the
    ``(u, v)`` that produced it.
    """

    formula: object
    family: str
    params: tuple
    pair: tuple = None

    def describe(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"


class DistinguishabilitySet:
    """Ordered, duplicate-free collection of :class:`Entry` objects."""

    def __init__(self, entries=()):
        self._entries = []
        self._index = {}
        for e in entries:
            self.add(e)

    def add(self, entry):
        if entry.formula not in self._index:
            self._index[entry.formula] = len(self._entries)
            self._entries.append(entry)

    @property
    def entries(self):
        return tuple(self._entries)

    @property
    def formulas(self):
        return tuple(e.formula for e in self._entries)

    def family(self, name):
        return tuple(e.formula for e in self._entries if e.family == name)

    def entry_for(self, formula):
        return self._entries[self._index[formula]]

    def __contains__(self, formula):
        return formula in self._index

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __repr__(self):
        return f"DistinguishabilitySet({len(self)} formulas)"


def _length_family(s, t, r):
    span = 1 << r
    if len(s) < len(t):
        for n in range(len(s) - 1, min(span, len(t) - 2) + 1):
            yield DistCmp("<=", n), (("cmp", "<="), ("n", n))
    elif len(s) > len(t):
        for n in range(len(t), min(span + 1, len(s) - 1) + 1):
            yield DistCmp(">=", n), (("cmp", ">="), ("n", n))


def _boundary_family(s, t, r, cls):
    top = min(1 << r, len(s), len(t))
    for k in range(1, top + 1):
        if cls is PrefCmp:
            a, b = s[:k], t[:k]
        else:
            a, b = s[-k:], t[-k:]
        if a != b:
            yield cls("=", k, a), (("cmp", "="), ("k", k))
            yield cls("!=", k, b), (("cmp", "!="), ("k", k))


def _sub_family(s, t, r):
    for alpha in sorted(candidate_alphas(s, t), key=lambda a: (len(a), a)):
        q = alpha_level(alpha)
        if q > r:
            continue
        cap = r - q + 1
        for name, cls, count in (("sigma", SigmaCmp, sigma), ("gamma", GammaCmp, gamma)):
            cu, cv = count(s, alpha), count(t, alpha)
            if cu > cv:
                for n in range(cv + 1, min(cap, cu) + 1):
                    yield cls(">=", alpha, n), (("count", name), ("alpha", alpha), ("cmp", ">="), ("n", n))
            elif cu < cv:
                for n in range(cu + 1, min(cap, cv) + 1):
                    yield cls("<", alpha, n), (("count", name), ("alpha", alpha), ("cmp", "<"), ("n", n))


def phi_set(u, v, r: int) -> DistinguishabilitySet:
    """All distinguishability formulas of rank at most ``r`` for ``u`` against ``v``.

    Nonempty exactly when ``r >= efsim(u, v)``.
    """
    s, t = text_of(u), text_of(v)
    if not s or not t:
        raise ValueError("string structures must be nonempty")
    if s == t:
        raise UndefinedSimilarityError(f"no formula separates {s!r} from itself")
    if r < 0:
        raise ValueError("rank must be nonnegative")
    out = DistinguishabilitySet()
    families = (
        ("length", _length_family(s, t, r)),
        ("pref", _boundary_family(s, t, r, PrefCmp)),
        ("suff", _boundary_family(s, t, r, SuffCmp)),
        ("sub", _sub_family(s, t, r)),
    )
    for family, items in families:
        for formula, params in items:
            out.add(Entry(formula, family, params, (s, t)))
    return out


def _pairs(sample_or_p, negative=None):
    if negative is None:
        positive, negative = sample_or_p.positive, sample_or_p.negative
    else:
        positive = sample_or_p
    positive = [text_of(u) for u in positive]
    negative = [text_of(v) for v in negative]
    clash = set(positive) & set(negative)
    if clash:
        raise InconsistentSampleError(f"strings labelled both ways: {sorted(clash)}")
    return [(u, v) for u in positive for v in negative]


def sample_rank(sample_or_p, negative=None) -> int:
    """Largest EF-similarity over positive/negative pairs (0 when there are none)."""
    return max((efsim(u, v) for u, v in _pairs(sample_or_p, negative)), default=0)


def phi_union(sample_or_p, negative=None) -> DistinguishabilitySet:
    """Union of ``phi_set(u, v, r)`` over all pairs, at the sample rank ``r``.

    Accepts a :class:`~efsynth.synthesis.Sample` or the two string lists.
    """
    pairs = _pairs(sample_or_p, negative)
    r = max((efsim(u, v) for u, v in pairs), default=0)
    out = DistinguishabilitySet()
    for u, v in pairs:
        for e in phi_set(u, v, r).entries:
            out.add(e)
    return out
