"""Combinatorial certificates for the NCCR of the affine cone over Gr(k, n)."""

__version__ = "0.1.0"

from .algebra import GradedHom, Quiver, build_quiver, compare_sides, emit_dot, graded_hom
from .bwb import bwb, dot_action, tilting_vanishing
from .cm import certify_cm, is_cm_safe, maximality_witness
from .schur import lr_decompose, weyl_dim
from .staircase import resolve, staircase_bwb, staircase_geometric
from .young import GrContext, d_upp, enumerate_up, from_binary, in_up, rotate, to_binary

__all__ = [
    "GradedHom", "GrContext", "Quiver", "build_quiver", "bwb", "certify_cm", "compare_sides",
    "d_upp", "dot_action", "emit_dot", "enumerate_up", "from_binary", "graded_hom", "in_up",
    "is_cm_safe", "lr_decompose", "maximality_witness", "resolve", "rotate", "staircase_bwb",
    "staircase_geometric", "tilting_vanishing", "to_binary", "weyl_dim",
]
