"""Brute-force references for the minimization tests."""
import itertools

from efsynth import eval_macro, phi_union


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _true_on_all(phis, block):
    return [f for f in phis if all(eval_macro(u, f) for u in block)]


def _excludes(conjuncts, negatives):
    return all(any(not eval_macro(v, f) for f in conjuncts) for v in negatives)


def min_groups(sample):
    """Fewest blocks of positives whose shared formulas each exclude every negative."""
    phis = list(phi_union(sample))
    best = None
    for part in set_partitions(list(sample.positive)):
        if best is not None and len(part) >= best:
            continue
        if all(_excludes(_true_on_all(phis, block), sample.negative) for block in part):
            best = len(part)
    return best


def min_maximal_cover(sample):
    """Fewest positives u whose full conjunctions C_u together accept every positive."""
    phis = list(phi_union(sample))
    P = list(sample.positive)
    accepted = {}
    for u in P:
        c_u = _true_on_all(phis, [u])
        accepted[u] = {w for w in P if all(eval_macro(w, f) for f in c_u)}
    for m in range(1, len(P) + 1):
        for combo in itertools.combinations(P, m):
            if set().union(*(accepted[u] for u in combo)) == set(P):
                return m
