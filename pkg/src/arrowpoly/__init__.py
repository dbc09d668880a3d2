"""Arrow polynomials, odd writhe and checkerboard colorability of virtual
links given by signed Gauss codes."""

from .arrow import KERNEL, arrow_bracket, arrow_normalized, as_set, reduce_word, trace_state
from .colorability import criteria_verdict, diagram_colorable, verify_witness
from .gauss import GaussCode, mirror, parse_code, serialize, writhe
from .parity import is_odd, odd_writhe
from .poly import ArrowPoly, k_degree, k_degree_set, parse_poly, print_poly, substitute_K_one

__version__ = "0.1.0"

__all__ = [
    "KERNEL",
    "ArrowPoly",
    "GaussCode",
    "arrow_bracket",
    "arrow_normalized",
    "as_set",
    "criteria_verdict",
    "diagram_colorable",
    "is_odd",
    "k_degree",
    "k_degree_set",
    "mirror",
    "odd_writhe",
    "parse_code",
    "parse_poly",
    "print_poly",
    "reduce_word",
    "serialize",
    "substitute_K_one",
    "trace_state",
    "verify_witness",
    "writhe",
]
