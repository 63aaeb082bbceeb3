"""Exact classification engine for bounded highest weight modules over q(n)."""

from .scalars import Scalar, integer_diff, parse_scalar, succ
from .weights import (
    Comparison,
    Weight,
    apply_word,
    compare,
    dot,
    iota,
    is_finite_dimensional,
    is_integral,
    leq,
    maximal_info,
    parse_weight,
    parse_word,
    reflect,
    star,
    zero_stats,
)
from .orbits import IncreasingString, OrbitGraph, chain_bound, increasing_strings, orbit
from .classify import (
    BoundedEntry,
    CuspidalParams,
    Family,
    TypeTag,
    Verdict,
    classify,
    enumerate_bounded,
    families,
    validate_cuspidal,
)
from .glside import GlVerdict, gl_arrow, gl_classify, gl_families, gl_family
from .decomp import (
    JHEntry,
    JHRow,
    degree_top_type,
    jh_axis,
    jh_axis_table,
    levi_dim,
    propagate_jh,
)
from . import fock

__version__ = "0.1.0"

__all__ = [
    "Scalar", "succ", "integer_diff", "parse_scalar",
    "Weight", "Comparison", "parse_weight", "parse_word", "apply_word",
    "reflect", "dot", "star", "compare", "leq", "iota", "is_integral",
    "maximal_info", "zero_stats", "is_finite_dimensional",
    "OrbitGraph", "IncreasingString", "orbit", "increasing_strings", "chain_bound",
    "Verdict", "TypeTag", "BoundedEntry", "Family", "CuspidalParams",
    "classify", "enumerate_bounded", "families", "validate_cuspidal",
    "GlVerdict", "gl_classify", "gl_family", "gl_families", "gl_arrow",
    "JHRow", "JHEntry", "levi_dim", "degree_top_type", "jh_axis",
    "jh_axis_table", "propagate_jh", "fock",
]
