"""Exact solver for generalized Frobenius numbers g_j and f_j."""
from .core import (
    FrobeniusError,
    GcdNotOne,
    GeneratorTuple,
    HardLimitExceeded,
    JFrobeniusValue,
    RepVector,
    make_tuple,
    tuple_sum,
)
from .denumerant import denumerant, denumerant_table, positive_denumerant
from .jfrobenius import f_j, g_j, g_sequence
from .reduction import corollary_triple, f_j_reduced, find_reduction, g_j_reduced, reduce_fully

__all__ = [
    "FrobeniusError",
    "GcdNotOne",
    "GeneratorTuple",
    "HardLimitExceeded",
    "JFrobeniusValue",
    "RepVector",
    "corollary_triple",
    "denumerant",
    "denumerant_table",
    "f_j",
    "f_j_reduced",
    "find_reduction",
    "g_j",
    "g_j_reduced",
    "g_sequence",
    "make_tuple",
    "positive_denumerant",
    "reduce_fully",
    "tuple_sum",
]
