"""
Macro formulas and their first-order expansion
==============================================

Sentences are built from a handful of macro leaves: length bounds,
prefix and suffix words, and threshold counts of free infixes.  Each leaf
expands to a plain first-order sentence whose quantifier rank is known in
closed form.
"""

from efsynth import expand, expanded_size, qr_core, qr_macro, render, serialize, deserialize
from efsynth.formulas import DistCmp, GammaCmp, PrefCmp, build_centered

leaves = [DistCmp("<=", 8), PrefCmp("=", 4, "aaac"), GammaCmp(">=", "c", 1)]
for f in leaves:
    print(f"{render(f):24} rank {qr_macro(f)}  expanded size {expanded_size(f)}")

# the expansion really has the advertised rank
assert all(qr_core(expand(f)) == qr_macro(f) for f in leaves)

# a centered occurrence of "abc" around the free variable x
print(render(build_centered("abc"), "unicode"))

# pure first-order text for a short prefix test
print(render(PrefCmp("=", 2, "ab"), "ascii"))

# canonical JSON round trip
text = serialize(GammaCmp(">=", "aba", 2))
print(text)
assert deserialize(text) == GammaCmp(">=", "aba", 2)
