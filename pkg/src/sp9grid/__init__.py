"""Signified grid colourings into the signed Paley graph SP_9."""

from .colorist import GridColoring, InvariantError, color_grid, color_path, propagate_sets, select_backward, \
    verify_homomorphism
from .field_gf9 import Gf9Element
from .oracle import SignedTargetGraph, exhaustive_signature_sweep, find_homomorphism
from .signed_grid import GridVertex, SignedGrid, make_grid, random_signature
from .signed_paley import MINUS, PLUS, Sign, SignedPaleyGraph, build_sp, sp9

__all__ = [
    "Gf9Element", "GridColoring", "GridVertex", "InvariantError", "MINUS", "PLUS", "Sign",
    "SignedGrid", "SignedPaleyGraph", "SignedTargetGraph", "build_sp", "color_grid", "color_path",
    "exhaustive_signature_sweep", "find_homomorphism", "make_grid", "propagate_sets",
    "random_signature", "select_backward", "sp9", "verify_homomorphism",
]
