"""b-colorings of Kneser graphs: construction, verification and exact search."""

from .coloring import Coloring, ColorLabel, SubsetLabel, SyntheticLabel
from .construction import build, g_map
from .kneser import KneserParams, adjacent, chromatic_number, max_degree, neighbors, standard_proper_coloring
from .solver import bounds, exact_b_chromatic, extract_b_coloring, theorem_a_formula
from .verify import VerificationReport, dominating_vertices, is_b_coloring, is_proper

__all__ = [
    "Coloring",
    "ColorLabel",
    "KneserParams",
    "SubsetLabel",
    "SyntheticLabel",
    "VerificationReport",
    "adjacent",
    "bounds",
    "build",
    "chromatic_number",
    "dominating_vertices",
    "exact_b_chromatic",
    "extract_b_coloring",
    "g_map",
    "is_b_coloring",
    "is_proper",
    "max_degree",
    "neighbors",
    "standard_proper_coloring",
    "theorem_a_formula",
]
