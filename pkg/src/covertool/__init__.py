"""Symbolic powers of cover ideals: exact computation and verification tooling."""

__version__ = "0.1.0"

from .betti import BettiTable, betti, has_linear_presentation, has_linear_resolution, hochster_betti
from .errors import SizeError
from .gk import build_gk
from .graph import Graph, classify, find_cm_vwc_labeling, find_vwc_labeling
from .ideal import Monomial, MonomialIdeal, cover_ideal, edge_ideal, polarize, symbolic_power
from .linalg import QQ, Field
from .report import VerificationReport

__all__ = [
    "BettiTable", "Field", "Graph", "Monomial", "MonomialIdeal", "QQ", "SizeError", "VerificationReport",
    "betti", "build_gk", "classify", "cover_ideal", "edge_ideal", "find_cm_vwc_labeling", "find_vwc_labeling",
    "has_linear_presentation", "has_linear_resolution", "hochster_betti", "polarize", "symbolic_power",
]
