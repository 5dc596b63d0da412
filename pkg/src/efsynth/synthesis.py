"""Learning first-order sentences of minimal quantifier rank from labelled strings.

``synthesize`` builds one conjunction per positive string, each conjunct
separating it from one negative string at the sample rank.
``minimize_ddf`` then looks for an equivalent hypothesis with as few
disjuncts as possible.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .distinguish import phi_set, phi_union
from .efgame import efsim
from .errors import CapacityError, EmptySetError, InconsistentSampleError
from .formulas.ast import conj, disj
from .formulas.macros import expand, expanded_size, qr_macro
from .formulas.text import serialize
from .semantics import eval_core, eval_macro
from .strings import Alphabet, text_of

__all__ = [
    "Sample", "Hypothesis", "ConsistencyReport",
    "choose_formula", "synthesize", "check_consistent", "minimize_ddf",
]


def _unique(items):
    seen = set()
    out = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Sample:
    """Positive and negative strings over a shared alphabet.

    Duplicates are dropped, first occurrence wins.  A string in both lists
    raises :class:`InconsistentSampleError`.
    """

    positive: tuple
    negative: tuple
    alphabet: Alphabet = None

    def __post_init__(self):
        pos = _unique(text_of(u) for u in self.positive)
        neg = _unique(text_of(v) for v in self.negative)
        if any(not w for w in pos + neg):
            raise ValueError("sample strings must be nonempty")
        clash = set(pos) & set(neg)
        if clash:
            raise InconsistentSampleError(f"strings labelled both ways: {sorted(clash)}")
        alphabet = self.alphabet
        if alphabet is None:
            alphabet = Alphabet.from_strings(pos + neg)
        elif not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        for w in pos + neg:
            for ch in w:
                if ch not in alphabet:
                    raise ValueError(f"symbol {ch!r} of {w!r} is not in the alphabet {alphabet}")
        object.__setattr__(self, "positive", pos)
        object.__setattr__(self, "negative", neg)
        object.__setattr__(self, "alphabet", alphabet)

    @property
    def size(self) -> int:
        """Total number of symbols."""
        return sum(map(len, self.positive + self.negative))

    def __len__(self):
        return len(self.positive) + len(self.negative)


@dataclass(frozen=True)
class Hypothesis:
    """A disjunction of conjunctions of macro formulas.

    ``provenance[i][j]`` says which pair and family produced conjunct
    ``disjuncts[i][j]``.
    """

    disjuncts: tuple
    rank: int
    provenance: tuple = ()
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def formula(self):
        return disj(*(conj(*c) for c in self.disjuncts))

    @property
    def m(self) -> int:
        return len(self.disjuncts)

    @property
    def qr(self) -> int:
        return qr_macro(self.formula)


def _policy_key(f):
    return (qr_macro(f), expanded_size(f), serialize(f))


def choose_formula(candidates):
    """Deterministic pick: least rank, then least expanded size, then least serialization."""
    formulas = list(candidates)
    if not formulas:
        raise EmptySetError("cannot choose from an empty distinguishability set")
    return min(formulas, key=_policy_key)


def synthesize(sample: Sample, choose=choose_formula) -> Hypothesis:
    """Sentence of minimal quantifier rank consistent with ``sample``.

    ``choose`` picks one formula from each distinguishability set; any
    choice gives a consistent hypothesis of the same rank.
    """
    P, N = sample.positive, sample.negative
    if not P:
        return Hypothesis((), 0, (), {"method": "algorithm1", "r": 0})
    if not N:
        return Hypothesis(((),), 0, ((),), {"method": "algorithm1", "r": 0})
    sims = {(u, v): efsim(u, v) for u in P for v in N}
    r = max(sims.values())
    disjuncts, provenance = [], []
    for u in P:
        chosen, notes = [], []
        for v in N:
            options = phi_set(u, v, r)
            f = choose(options)
            if f not in chosen:
                chosen.append(f)
                e = options.entry_for(f)
                notes.append({"u": u, "v": v, "family": e.family, "params": dict(e.params)})
        disjuncts.append(tuple(chosen))
        provenance.append(tuple(notes))
    argmax = max(sims, key=lambda p: (sims[p], p))
    meta = {"method": "algorithm1", "r": r, "argmax_pair": argmax}
    return Hypothesis(tuple(disjuncts), r, tuple(provenance), meta)


@dataclass(frozen=True)
class ConsistencyReport:
    false_negatives: tuple
    false_positives: tuple
    disagreements: tuple = ()

    @property
    def consistent(self) -> bool:
        return not self.false_negatives and not self.false_positives

    @property
    def violations(self):
        return self.false_negatives + self.false_positives


def check_consistent(sample: Sample, h, cross_check: bool = False) -> ConsistencyReport:
    """Positives rejected and negatives accepted by ``h``.

    With ``cross_check`` every verdict is recomputed by first-order
    evaluation of the expanded formula; strings where the two evaluators
    differ are listed in ``disagreements``.
    """
    f = h.formula if isinstance(h, Hypothesis) else h
    core = expand(f) if cross_check else None
    fn, fp, mismatch = [], [], []
    for strings, want, bucket in ((sample.positive, True, fn), (sample.negative, False, fp)):
        for w in strings:
            got = eval_macro(w, f)
            if got != want:
                bucket.append(w)
            if cross_check and eval_core(w, core) != got:
                mismatch.append(w)
    return ConsistencyReport(tuple(fn), tuple(fp), tuple(mismatch))


# minimum disjunctive distinguishability form

class _Budget:
    def __init__(self, limit):
        self.left = limit

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise CapacityError("exact cover search exceeded its node budget")


def _popcount(x):
    return bin(x).count("1")


def _exact_partition(P_count, feasible, budget):
    """Fewest feasible blocks partitioning range(P_count), by iterative deepening."""
    for m in range(1, P_count + 1):
        blocks = []

        def place(i):
            budget.tick()
            if i == P_count:
                return True
            for b in range(len(blocks)):
                cand = blocks[b] | (1 << i)
                if feasible(cand):
                    blocks[b] = cand
                    if place(i + 1):
                        return True
                    blocks[b] ^= 1 << i
            if len(blocks) < m:
                blocks.append(1 << i)
                if place(i + 1):
                    return True
                blocks.pop()
            return False

        if place(0):
            return list(blocks)
    raise AssertionError("singleton blocks are always feasible")


def _greedy_partition(P_count, feasible):
    # grow a block from every uncovered seed and keep the largest
    left = list(range(P_count))
    blocks = []
    while left:
        best = None
        for seed in left:
            block = 1 << seed
            for i in left:
                if i != seed and feasible(block | (1 << i)):
                    block |= 1 << i
            if best is None or _popcount(block) > _popcount(best):
                best = block
        blocks.append(best)
        left = [i for i in left if not best >> i & 1]
    return blocks


def _exact_cover(covers, universe, budget):
    n = len(covers)
    for m in range(1, n + 1):
        for combo in itertools.combinations(range(n), m):
            budget.tick()
            got = 0
            for i in combo:
                got |= covers[i]
            if got == universe:
                return list(combo)
    raise AssertionError("every positive covers itself")


def _greedy_cover(covers, universe):
    chosen, got = [], 0
    while got != universe:
        best = max(range(len(covers)), key=lambda i: (_popcount(covers[i] & ~got), -i))
        chosen.append(best)
        got |= covers[best]
    return chosen


def minimize_ddf(sample: Sample, exact_limit: int = 16, mode: str = "groups",
                 max_nodes: int = 2_000_000) -> Hypothesis:
    """Consistent disjunction of conjunctions over ``phi_union(sample)`` with few disjuncts.

    ``mode="groups"`` partitions the positives into as few groups as
    possible such that the formulas true on a whole group still exclude
    every negative; each group yields one conjunction, so this is the
    least number of disjuncts of any such form.  ``mode="maximal"``
    restricts the conjunctions to the full sets ``C_u`` of formulas true
    on a single positive and solves the set cover they induce.

    Search is exact for at most ``exact_limit`` positives and greedy
    beyond.  The exact search falls back to greedy when it visits more
    than ``max_nodes`` nodes; ``metadata["fallback"]`` records that.
    Each conjunction is then pruned, dropping the highest-rank conjuncts
    first while the negatives stay excluded.
    """
    if mode not in ("groups", "maximal"):
        raise ValueError(f"mode must be 'groups' or 'maximal', got {mode!r}")
    P, N = sample.positive, sample.negative
    if not P:
        return Hypothesis((), 0, (), {"method": "exact", "mode": mode, "m": 0})
    if not N:
        return Hypothesis(((),), 0, ((),), {"method": "exact", "mode": mode, "m": 1})

    phis = phi_union(sample)
    entries = phis.entries
    keys = [_policy_key(e.formula) for e in entries]
    sat = [sum(1 << i for i, e in enumerate(entries) if eval_macro(u, e.formula)) for u in P]
    excl = [sum(1 << i for i, e in enumerate(entries) if not eval_macro(v, e.formula)) for v in N]

    def excludes_all(mask):
        return all(mask & x for x in excl)

    for j, u in enumerate(P):
        assert excludes_all(sat[j]), f"formulas true on {u!r} fail to exclude a negative"

    def common(block):
        mask = -1
        for j in range(len(P)):
            if block >> j & 1:
                mask &= sat[j]
        return mask

    universe = (1 << len(P)) - 1
    method, fallback = ("exact" if len(P) <= exact_limit else "greedy"), False
    if mode == "groups":
        cache = {}

        def feasible(block):
            if block not in cache:
                cache[block] = excludes_all(common(block))
            return cache[block]

        if method == "exact":
            try:
                blocks = _exact_partition(len(P), feasible, _Budget(max_nodes))
            except CapacityError:
                method, fallback = "greedy", True
        if method == "greedy":
            blocks = _greedy_partition(len(P), feasible)
        groups = [(b, common(b)) for b in blocks]
    else:
        covers = []
        for j in range(len(P)):
            covers.append(sum(1 << i for i in range(len(P)) if sat[j] & ~sat[i] == 0))
        if method == "exact":
            try:
                picked = _exact_cover(covers, universe, _Budget(max_nodes))
            except CapacityError:
                method, fallback = "greedy", True
        if method == "greedy":
            picked = _greedy_cover(covers, universe)
        groups = [(covers[j], sat[j]) for j in picked]

    worst_first = sorted(range(len(entries)), key=lambda i: keys[i], reverse=True)
    disjuncts, provenance = [], []
    for block, mask in groups:
        for i in worst_first:
            if mask >> i & 1 and excludes_all(mask & ~(1 << i)):
                mask &= ~(1 << i)
        kept = sorted((i for i in range(len(entries)) if mask >> i & 1), key=lambda i: keys[i])
        disjuncts.append(tuple(entries[i].formula for i in kept))
        covered = tuple(P[j] for j in range(len(P)) if block >> j & 1)
        provenance.append(tuple(
            {"covers": covered, "family": entries[i].family, "params": dict(entries[i].params),
             "pair": entries[i].pair}
            for i in kept))

    meta = {
        "method": method, "mode": mode, "fallback": fallback, "m": len(disjuncts),
        "candidates": len(entries),
    }
    if method == "greedy" and mode == "maximal":
        meta["approximation"] = f"greedy set cover, within a factor {1 + math.log(len(P)):.2f} of optimal"
    elif method == "greedy":
        meta["approximation"] = "greedy grouping, no optimality guarantee"
    h = Hypothesis(tuple(disjuncts), 0, tuple(provenance), meta)
    h = Hypothesis(h.disjuncts, qr_macro(h.formula), h.provenance, meta)
    assert check_consistent(sample, h).consistent
    return h
