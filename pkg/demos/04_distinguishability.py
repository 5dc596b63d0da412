"""
Distinguishability formulas
===========================

For two strings u and v and a rank r, every formula of the set holds on u,
fails on v and has quantifier rank at most r.  The set is empty exactly
when r is below the EF-similarity of the pair.
"""

from efsynth import efsim, phi_set, qr_macro, render

u, v = "aaacbbb", "aaabbbbb"
print("efsim =", efsim(u, v))
for e in phi_set(u, v, 2).entries:
    print(f"  rank {qr_macro(e.formula)}  {e.describe():45} {render(e.formula)}")

# one round less than the similarity and nothing separates the strings
u, v = "bbaaaaaaaabb", "bbaaaaaabb"
r = efsim(u, v)
print(u, v, "efsim", r, "| sizes at r-1, r:", len(phi_set(u, v, r - 1)), len(phi_set(u, v, r)))
