"""
Ehrenfeucht-Fraisse games on strings
====================================

The r-round game can be solved by brute force, which is exponential in r,
or read off three conditions on lengths, boundary words and scattering.
Both answers are compared here, and the EF-similarity of a pair is the
first round count at which the Spoiler wins.
"""

import itertools

from efsynth import Alphabet, duplicator_wins, efsim, eval_macro, game_winner, r_type, render
from efsynth import sim_components

print("aaa vs aaaa:", game_winner("aaa", "aaaa", 0), "at r=0,", game_winner("aaa", "aaaa", 1), "at r=1")

c = sim_components("a" * 9, "a" * 12)
print("similarity components of a^9 / a^12:", c.as_dict(), "-> efsim", c.efsim)

# closed form against minimax over every pair up to length 5
words = ["".join(p) for n in range(1, 6) for p in itertools.product("ab", repeat=n)]
agree = sum(
    duplicator_wins(u, v, r) == (str(game_winner(u, v, r)) == "Duplicator")
    for u, v in itertools.combinations(words, 2) for r in range(3))
print(f"agreement on {agree} of {len(words) * (len(words) - 1) // 2 * 3} games")

# the rank-1 type of "abab" accepts exactly the strings the Duplicator cannot tell apart
t = r_type("abab", 1, alphabet=Alphabet(("a", "b")))
print("1-type of abab:", render(t))
print("equivalent words up to length 6:",
      [v for v in words if eval_macro(v, t)])
print("efsim(abab, ababab) =", efsim("abab", "ababab"))
