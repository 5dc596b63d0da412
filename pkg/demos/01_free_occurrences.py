"""
Free occurrences and scattering
===============================

An infix of length 2**q - 1 occurs *free* at position i when it is
centered on i and both ends of the string are more than 2**(q-1) away.
The free occurrences are then cut into windows of width 2**q; the number
of windows is the scattering.
"""

from efsynth import free_occurrences, gamma, l_segmentation, sigma

w = "ababababbababaaba"
alpha = "aba"

# centers of the free occurrences, 1-based
occ = free_occurrences(w, alpha)
print("free occurrences of", alpha, "in", w, ":", list(occ))
print("multiplicity:", gamma(w, alpha))

# greedy windows of width 4 give the minimum number of segments
print("segments:", [sorted(s) for s in l_segmentation(occ, 4)])
print("scattering:", sigma(w, alpha))

# runs of a single letter: six free "aaa" but only two windows
for s in ("bbaaaaaaaabb", "bbaaaaaabb"):
    print(s, "gamma =", gamma(s, "aaa"), "sigma =", sigma(s, "aaa"))
