"""Closed-form answers to EF games on strings.

On successor strings the Duplicator wins the r-round game exactly when
lengths, the boundary words of length ``2**r``, and the free scatterings of
every infix alpha of level ``q`` agree up to what ``r`` rounds can see.
This module evaluates those conditions directly, derives EF-similarity
from them, and writes the rank-r type of a string as a macro conjunction.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import CapacityError, UndefinedSimilarityError
from .formulas.ast import DistCmp, GammaCmp, PrefCmp, SigmaCmp, SuffCmp, conj
from .formulas.macros import clog2
from .strings import (
    Alphabet, StringStructure, alpha_level, candidate_alphas, gamma, sigma, text_of,
)

__all__ = [
    "INF", "SimComponents", "sim_components", "efsim", "duplicator_wins", "r_type",
]

INF = math.inf


@dataclass(frozen=True)
class SimComponents:
    """The four similarity measures; ``INF`` marks an inapplicable one."""

    sim_length: float
    sim_pref: float
    sim_suff: float
    sim_sub: float

    @property
    def efsim(self) -> int:
        return int(min(self.sim_length, self.sim_pref, self.sim_suff, self.sim_sub))

    def as_dict(self):
        return {
            "simLength": self.sim_length,
            "simPref": self.sim_pref,
            "simSuff": self.sim_suff,
            "simSub": self.sim_sub,
        }


def _first_difference(s, t):
    """Least k with ``s[:k] != t[:k]`` (clamped prefixes), or None."""
    for k, (a, b) in enumerate(zip(s, t), start=1):
        if a != b:
            return k
    if len(s) != len(t):
        return min(len(s), len(t)) + 1
    return None


def _distinct_texts(u, v):
    s, t = text_of(u), text_of(v)
    if not s or not t:
        raise ValueError("string structures must be nonempty")
    if s == t:
        raise UndefinedSimilarityError(f"EF-similarity of {s!r} with itself is undefined")
    return s, t


def sim_components(u, v) -> SimComponents:
    s, t = _distinct_texts(u, v)

    if len(s) == len(t):
        sim_length = INF
    else:
        shortest = min(len(s), len(t))
        sim_length = 0 if shortest == 1 else clog2(shortest - 1)

    k = _first_difference(s, t)
    sim_pref = INF if k is None else clog2(k)
    k = _first_difference(s[::-1], t[::-1])
    sim_suff = INF if k is None else clog2(k)

    sim_sub = INF
    for alpha in candidate_alphas(s, t):
        su, sv = sigma(s, alpha), sigma(t, alpha)
        if su != sv or gamma(s, alpha) != gamma(t, alpha):
            sim_sub = min(sim_sub, alpha_level(alpha) + min(su, sv))
    return SimComponents(sim_length, sim_pref, sim_suff, sim_sub)


def efsim(u, v) -> int:
    """Least number of rounds in which the Spoiler wins on ``u`` and ``v``."""
    return sim_components(u, v).efsim


def duplicator_wins(u, v, r: int) -> bool:
    """Whether the Duplicator wins the r-round game, from the three string conditions."""
    if r < 0:
        raise ValueError("number of rounds must be nonnegative")
    s, t = text_of(u), text_of(v)
    if s == t:
        return True
    span = 1 << r
    if len(s) != len(t) and not (len(s) - 1 > span and len(t) - 1 > span):
        return False
    if s[:span] != t[:span] or s[-span:] != t[-span:]:
        return False
    for alpha in candidate_alphas(s, t):
        su, sv = sigma(s, alpha), sigma(t, alpha)
        if su != sv or gamma(s, alpha) != gamma(t, alpha):
            q = alpha_level(alpha)
            if su + q <= r or sv + q <= r:
                return False
    return True


def r_type(w, r: int, sigma_cap: int = 4096, alphabet: Alphabet | None = None):
    """Macro conjunction satisfied by exactly the strings r-equivalent to ``w``.

    Infixes range over every word of length ``2**q - 1`` (``q <= r``) on the
    alphabet, taken from ``alphabet``, from ``w`` when it is a
    :class:`StringStructure`, or else from the symbols of ``w``.
    """
    if r < 0:
        raise ValueError("rank must be nonnegative")
    if alphabet is None:
        alphabet = w.alphabet if isinstance(w, StringStructure) else Alphabet.from_strings([w])
    s = text_of(w)
    if not s:
        raise ValueError("string structures must be nonempty")
    longest = (1 << r) - 1
    if r > 0 and (longest > 64 or len(alphabet) ** longest > sigma_cap):
        raise CapacityError(
            f"r-type enumerates {len(alphabet)}**{longest} infixes, above cap {sigma_cap}")

    span = 1 << r
    parts = []
    if len(s) <= span + 1:
        parts.append(DistCmp("=", len(s) - 1))
    else:
        parts.append(DistCmp(">", span))
    k = min(span, len(s))
    parts.append(PrefCmp("=", k, s[:k]))
    parts.append(SuffCmp("=", k, s[-k:]))

    for q in range(1, r + 1):
        for letters in itertools.product(alphabet.symbols, repeat=(1 << q) - 1):
            alpha = "".join(letters)
            sc = sigma(s, alpha)
            if q + sc <= r:
                if sc == 0:
                    parts.append(SigmaCmp("<", alpha, 1))
                    parts.append(GammaCmp("<", alpha, 1))
                else:
                    parts.append(SigmaCmp("=", alpha, sc))
                    parts.append(GammaCmp("=", alpha, gamma(s, alpha)))
            else:
                parts.append(SigmaCmp(">=", alpha, r - q + 1))
    return conj(*parts)
