"""Minimal-quantifier-rank synthesis of first-order sentences over strings.

Strings are successor structures with labels and the constants min and
max.  The package decides EF games on them in polynomial time, builds the
sentences that separate one string from another, and learns a sentence
of least quantifier rank consistent with a labelled sample.
"""
from .distinguish import DistinguishabilitySet, Entry, phi_set, phi_union, sample_rank
from .efgame import INF, SimComponents, duplicator_wins, efsim, r_type, sim_components
from .errors import (
    CapacityError, EFSynthError, EmptySetError, FormulaParseError, InconsistentSampleError,
    InvalidAlphaError, SampleParseError, UnboundVariableError, UndefinedSimilarityError,
)
from .formulas import (
    deserialize, expand, expanded_size, qr_macro, render, serialize,
)
from .formulas.ast import qr_core, size_core
from .semantics import (
    DUPLICATOR, SPOILER, Winner, eval_core, eval_macro, game_efsim, game_winner, holds,
)
from .strings import (
    Alphabet, StringStructure, alpha_level, candidate_alphas, free_occurrences, gamma,
    l_segmentation, prefix, sigma, suffix,
)
from .synthesis import (
    ConsistencyReport, Hypothesis, Sample, check_consistent, choose_formula, minimize_ddf,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "StringStructure", "alpha_level", "candidate_alphas", "free_occurrences",
    "gamma", "l_segmentation", "prefix", "sigma", "suffix",
    "deserialize", "expand", "expanded_size", "qr_core", "qr_macro", "render", "serialize",
    "size_core",
    "DUPLICATOR", "SPOILER", "Winner", "eval_core", "eval_macro", "game_efsim",
    "game_winner", "holds",
    "INF", "SimComponents", "duplicator_wins", "efsim", "r_type", "sim_components",
    "DistinguishabilitySet", "Entry", "phi_set", "phi_union", "sample_rank",
    "ConsistencyReport", "Hypothesis", "Sample", "check_consistent", "choose_formula",
    "minimize_ddf", "synthesize",
    "CapacityError", "EFSynthError", "EmptySetError", "FormulaParseError",
    "InconsistentSampleError", "InvalidAlphaError", "SampleParseError",
    "UnboundVariableError", "UndefinedSimilarityError",
]
