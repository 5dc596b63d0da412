"""Strings as successor structures, and the occurrence statistics of infixes.

Positions are 1-based throughout, matching the domain ``{1, ..., n}`` of a
string structure.  An *alpha* is an infix pattern whose length is
``2**q - 1`` for some ``q >= 1``; ``q`` is its *level*.  An occurrence of
alpha centered on position ``i`` is *free* when it keeps a margin of more
than ``2**(q-1)`` positions to both ``min`` and ``max``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .errors import InvalidAlphaError

__all__ = [
    "Alphabet",
    "StringStructure",
    "as_structure",
    "text_of",
    "alpha_level",
    "prefix",
    "suffix",
    "free_occurrences",
    "gamma",
    "l_segmentation",
    "sigma",
    "candidate_alphas",
]


@dataclass(frozen=True)
class Alphabet:
    """A finite, totally ordered set of one-character symbols."""

    symbols: tuple

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("alphabet must be nonempty")
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"alphabet symbols must be single characters, got {s!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet has duplicate symbols")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Alphabet":
        """Sorted set of all characters observed in ``strings``."""
        return cls(tuple(sorted(set("".join(text_of(s) for s in strings)))))

    def __contains__(self, symbol):
        return symbol in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return "".join(self.symbols)


@dataclass(frozen=True)
class StringStructure:
    """A nonempty string seen as a structure over ``{S, (P_a), min, max}``."""

    symbols: str
    alphabet: Alphabet

    def __post_init__(self):
        if not isinstance(self.symbols, str):
            raise TypeError("symbols must be a str")
        if not self.symbols:
            raise ValueError("string structures must be nonempty")
        bad = sorted(set(self.symbols) - set(self.alphabet.symbols))
        if bad:
            raise ValueError(f"symbols {bad} are not in the alphabet {self.alphabet}")

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return self.symbols

    def label(self, i: int) -> str:
        """Symbol at 1-based position ``i``."""
        if not 1 <= i <= len(self.symbols):
            raise IndexError(i)
        return self.symbols[i - 1]

    @property
    def min(self) -> int:
        return 1

    @property
    def max(self) -> int:
        return len(self.symbols)

    def successor(self, i: int, j: int) -> bool:
        return j == i + 1 and 1 <= i < len(self.symbols)

    def distance(self, i: int, j: int) -> int:
        return abs(i - j)


Word = Union[str, StringStructure]


def as_structure(w: Word, alphabet: Alphabet | None = None) -> StringStructure:
    if isinstance(w, StringStructure):
        return w
    if alphabet is None:
        alphabet = Alphabet.from_strings([w])
    return StringStructure(w, alphabet)


def text_of(w: Word) -> str:
    return w.symbols if isinstance(w, StringStructure) else w


def _nonempty_text(w: Word) -> str:
    s = text_of(w)
    if not s:
        raise ValueError("string structures must be nonempty")
    return s


def alpha_level(alpha: str) -> int:
    """The level ``q`` of an infix pattern with ``len(alpha) == 2**q - 1``."""
    k = len(alpha)
    if k < 1 or (k + 1) & k:
        raise InvalidAlphaError(f"infix length must be 2**q - 1, got {k} for {alpha!r}")
    return (k + 1).bit_length() - 1


def prefix(w: Word, k: int) -> str:
    """First ``min(k, |w|)`` symbols of ``w``."""
    if k < 1:
        raise ValueError("prefix length must be at least 1")
    return _nonempty_text(w)[:k]


def suffix(w: Word, k: int) -> str:
    """Last ``min(k, |w|)`` symbols of ``w``."""
    if k < 1:
        raise ValueError("suffix length must be at least 1")
    return _nonempty_text(w)[-k:]


@lru_cache(maxsize=1 << 16)
def _free_occurrences(s: str, alpha: str) -> tuple:
    q = alpha_level(alpha)
    margin = 1 << (q - 1)
    half = margin - 1
    n = len(s)
    # i - 1 > margin and n - i > margin
    return tuple(
        i for i in range(margin + 2, n - margin)
        if s[i - 1 - half:i + half] == alpha
    )


def free_occurrences(w: Word, alpha: str) -> tuple:
    """Sorted 1-based centers of the free occurrences of ``alpha`` in ``w``."""
    return _free_occurrences(_nonempty_text(w), alpha)


def gamma(w: Word, alpha: str) -> int:
    """Free multiplicity: the number of free occurrences of ``alpha``."""
    return len(free_occurrences(w, alpha))


def l_segmentation(positions: Iterable[int], l: int) -> list:
    """Split sorted ``positions`` into the fewest runs of width at most ``l``.

    A new segment opens whenever the next position lies more than ``l``
    beyond the start of the current segment.
    """
    if l < 1:
        raise ValueError("segment width must be at least 1")
    segments = []
    current = []
    for p in sorted(positions):
        if current and p - current[0] > l:
            segments.append(tuple(current))
            current = []
        current.append(p)
    if current:
        segments.append(tuple(current))
    return segments


@lru_cache(maxsize=1 << 16)
def _sigma(s: str, alpha: str) -> int:
    occ = _free_occurrences(s, alpha)
    width = 1 << alpha_level(alpha)
    count = 0
    start = None
    for p in occ:
        if start is None or p - start > width:
            count += 1
            start = p
    return count


def sigma(w: Word, alpha: str) -> int:
    """Free scattering: segments in the ``2**q``-segmentation of free occurrences."""
    return _sigma(_nonempty_text(w), alpha)


def _centered_alphas(s: str) -> set:
    found = set()
    n = len(s)
    q = 1
    while (1 << q) - 1 <= n:
        margin = 1 << (q - 1)
        half = margin - 1
        for i in range(margin + 2, n - margin):
            found.add(s[i - 1 - half:i + half])
        q += 1
    return found


def candidate_alphas(u: Word, v: Word) -> set:
    """Every alpha with at least one free occurrence in ``u`` or in ``v``.

    Any other alpha has ``gamma == sigma == 0`` on both strings.
    """
    return _centered_alphas(text_of(u)) | _centered_alphas(text_of(v))
