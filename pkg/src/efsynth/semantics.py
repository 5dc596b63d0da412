"""Satisfaction of formulas on strings, and an exhaustive EF-game solver.

``eval_core`` is plain Tarskian evaluation with quantifiers ranging over
positions; it costs ``O(|w| ** qr)`` and is meant as an oracle.
``eval_macro`` decides macro leaves directly from occurrence statistics
in polynomial time.  ``game_winner`` plays the r-round game by minimax.
"""
from __future__ import annotations

import enum

from .errors import CapacityError, UnboundVariableError
from .formulas.ast import (
    And, Const, DistCmp, Equal, Exists, FalseConst, Forall, GammaCmp, Label,
    Not, Or, PrefCmp, SigmaCmp, Succ, SuffCmp, TrueConst, is_macro,
)
from .formulas.macros import expand
from .strings import gamma, sigma, text_of

__all__ = [
    "eval_core", "eval_macro", "holds",
    "Winner", "GameResult", "SPOILER", "DUPLICATOR",
    "game_winner", "game_efsim",
]


# Tarskian evaluation

def _pos(t, n, env):
    if isinstance(t, Const):
        return 1 if t.name == "min" else n
    try:
        return env[t.name]
    except KeyError:
        raise UnboundVariableError(t.name) from None


def _sat(s, n, f, env):
    if isinstance(f, Label):
        return s[_pos(f.t, n, env) - 1] == f.symbol
    if isinstance(f, Succ):
        return _pos(f.t2, n, env) == _pos(f.t1, n, env) + 1
    if isinstance(f, Equal):
        return _pos(f.t1, n, env) == _pos(f.t2, n, env)
    if isinstance(f, And):
        return all(_sat(s, n, g, env) for g in f.args)
    if isinstance(f, Or):
        return any(_sat(s, n, g, env) for g in f.args)
    if isinstance(f, Not):
        return not _sat(s, n, f.arg, env)
    if isinstance(f, Exists):
        inner = dict(env)
        for i in range(1, n + 1):
            inner[f.var] = i
            if _sat(s, n, f.body, inner):
                return True
        return False
    if isinstance(f, Forall):
        inner = dict(env)
        for i in range(1, n + 1):
            inner[f.var] = i
            if not _sat(s, n, f.body, inner):
                return False
        return True
    if isinstance(f, TrueConst):
        return True
    if isinstance(f, FalseConst):
        return False
    raise TypeError(f"not a core formula node: {f!r}")


def eval_core(w, f, env=None) -> bool:
    """``w |= f[env]`` for a core formula; ``env`` maps variable names to positions."""
    s = text_of(w)
    n = len(s)
    env = dict(env or {})
    for name, i in env.items():
        if not 1 <= i <= n:
            raise ValueError(f"position {i} of {name!r} is outside 1..{n}")
    return _sat(s, n, f, env)


# macro evaluation

_CMP = {
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
    "=": lambda a, b: a == b,
}


def _eval_macro(s, m):
    if isinstance(m, DistCmp):
        return _CMP[m.cmp](len(s), m.n + 1)
    if isinstance(m, PrefCmp):
        hit = m.k <= len(s) and s[:m.k] == m.s
        return hit if m.cmp == "=" else not hit
    if isinstance(m, SuffCmp):
        hit = m.k <= len(s) and s[-m.k:] == m.s
        return hit if m.cmp == "=" else not hit
    if isinstance(m, GammaCmp):
        return _CMP[m.cmp](gamma(s, m.alpha), m.n)
    if isinstance(m, SigmaCmp):
        return _CMP[m.cmp](sigma(s, m.alpha), m.n)
    if isinstance(m, And):
        return all(_eval_macro(s, g) for g in m.args)
    if isinstance(m, Or):
        return any(_eval_macro(s, g) for g in m.args)
    if isinstance(m, Not):
        return not _eval_macro(s, m.arg)
    if isinstance(m, TrueConst):
        return True
    if isinstance(m, FalseConst):
        return False
    raise TypeError(f"not a macro formula node: {m!r}")


def eval_macro(w, m) -> bool:
    """``w |= m`` for a macro formula, in polynomial time."""
    return _eval_macro(text_of(w), m)


def holds(w, f) -> bool:
    """Evaluate any sentence: macro formulas directly, others after expansion."""
    if is_macro(f):
        return eval_macro(w, f)
    return eval_core(w, expand(f))


# Ehrenfeucht-Fraisse games

class Winner(enum.Enum):
    SPOILER = "Spoiler"
    DUPLICATOR = "Duplicator"

    def __str__(self):
        return self.value


GameResult = Winner
SPOILER = Winner.SPOILER
DUPLICATOR = Winner.DUPLICATOR


class _Game:
    """Minimax over partial maps between positions of ``s`` and ``t``.

    The constants contribute the fixed pairs ``(1, 1)`` and
    ``(|s|, |t|)``; a play is lost by the Duplicator as soon as the pairs
    picked so far stop being a partial isomorphism.
    """

    def __init__(self, s, t, max_states):
        self.s, self.t = s, t
        self.n, self.m = len(s), len(t)
        self.max_states = max_states
        self.memo = {}
        base = []
        self.base_ok = True
        for pair in ((1, 1), (self.n, self.m)):
            if not self._compatible(base, *pair):
                self.base_ok = False
            base.append(pair)
        self.base = tuple(base)

    def _compatible(self, pairs, a, b):
        if self.s[a - 1] != self.t[b - 1]:
            return False
        for a2, b2 in pairs:
            if (a == a2) != (b == b2):
                return False
            if (a + 1 == a2) != (b + 1 == b2):
                return False
            if (a2 + 1 == a) != (b2 + 1 == b):
                return False
        return True

    def duplicator_wins(self, rounds):
        if not self.base_ok:
            return False
        return self._dup(frozenset(), rounds)

    def _dup(self, picked, k):
        if k == 0:
            return True
        key = (picked, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(self.memo) >= self.max_states:
            raise CapacityError(
                f"EF game on {self.s!r}/{self.t!r} exceeded {self.max_states} states")
        pairs = self.base + tuple(picked)
        left = {a for a, _ in pairs}
        right = {b for _, b in pairs}
        result = True
        for a in range(1, self.n + 1):
            if a in left:
                continue
            if not any(self._compatible(pairs, a, b) and self._dup(picked | {(a, b)}, k - 1)
                       for b in range(1, self.m + 1)):
                result = False
                break
        if result:
            for b in range(1, self.m + 1):
                if b in right:
                    continue
                if not any(self._compatible(pairs, a, b) and self._dup(picked | {(a, b)}, k - 1)
                           for a in range(1, self.n + 1)):
                    result = False
                    break
        self.memo[key] = result
        return result


def _ordered(u, v):
    s, t = text_of(u), text_of(v)
    if not s or not t:
        raise ValueError("string structures must be nonempty")
    # the game is symmetric in its boards; fix one orientation
    if (len(s), s) > (len(t), t):
        s, t = t, s
    return s, t


def game_winner(u, v, r: int, max_states: int = 2_000_000) -> Winner:
    """Winner of the r-round EF game on ``u`` and ``v`` by exhaustive minimax.

    Raises :class:`CapacityError` when more than ``max_states`` positions
    would have to be memoized.
    """
    if r < 0:
        raise ValueError("number of rounds must be nonnegative")
    s, t = _ordered(u, v)
    return DUPLICATOR if _Game(s, t, max_states).duplicator_wins(r) else SPOILER


def game_efsim(u, v, max_rounds: int | None = None, max_states: int = 2_000_000) -> int:
    """Least r for which the Spoiler wins, found by playing r = 0, 1, ...

    ``max_rounds`` defaults to ``|u| + |v|``, where the Spoiler always wins
    on distinct strings.
    """
    s, t = _ordered(u, v)
    if s == t:
        raise ValueError("identical strings are never separated")
    game = _Game(s, t, max_states)
    limit = len(s) + len(t) if max_rounds is None else max_rounds
    for r in range(limit + 1):
        if not game.duplicator_wins(r):
            return r
    raise CapacityError(f"Spoiler did not win within {limit} rounds")
