"""
Learning a sentence from labelled strings
=========================================

Each positive string is separated from each negative string by one
distinguishability formula, at the largest EF-similarity in the sample.
The result has the least quantifier rank any consistent sentence can have.
Minimization then merges positives into as few disjuncts as possible.
"""

from efsynth import Sample, check_consistent, minimize_ddf, render, synthesize

sample = Sample(positive=["stviil", "stviie"], negative=["ktvive", "stpiie"])

h = synthesize(sample)
print("rank", h.rank, ":", render(h.formula))
for notes in h.provenance:
    for n in notes:
        print("   ", n["u"], "vs", n["v"], "->", n["family"], n["params"])

m = minimize_ddf(sample)
print("minimized to", m.m, "disjunct:", render(m.formula))
print("consistent:", check_consistent(sample, m, cross_check=True).consistent)

# only single-string conjunctions: two disjuncts are needed here
print("single-string covers:", render(minimize_ddf(sample, mode="maximal").formula))

# pure first-order form of the minimized sentence
print(render(m.formula, "unicode"))
