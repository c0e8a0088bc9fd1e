"""Stanley-Reisner ring invariants, Buchsbaum classification and Cohen-Macaulay covers."""

from __future__ import annotations

__version__ = "0.1.0"

from .complex import SimplicialComplex, format_sc, parse_sc
from .errors import SRError
from .field import QQ, ExactMatrix, FieldSpec, rank, select_independent_rows
from .homology import boundary_matrix, reduced_homology
from .hochster import (
    BettiTable,
    GradedDims,
    a_invariant,
    betti_table,
    depth,
    is_q_linear,
    local_cohomology_dims,
)
from .props import PropertyReport, is_buchsbaum, is_cohen_macaulay, property_report

__all__ = [
    "BettiTable",
    "ExactMatrix",
    "FieldSpec",
    "GradedDims",
    "PropertyReport",
    "QQ",
    "SRError",
    "SimplicialComplex",
    "a_invariant",
    "betti_table",
    "boundary_matrix",
    "depth",
    "format_sc",
    "is_buchsbaum",
    "is_cohen_macaulay",
    "is_q_linear",
    "local_cohomology_dims",
    "parse_sc",
    "property_report",
    "rank",
    "reduced_homology",
    "select_independent_rows",
]
