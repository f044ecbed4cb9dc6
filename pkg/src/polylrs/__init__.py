"""Lexicographic reverse search for pointed polyhedra.

Vertex/ray enumeration of ``{x : Hx <= b}``, facet enumeration of
``conv(V) + cone(R)``, and a lexicographic simplex solver, in exact rational
or floating-point arithmetic.
"""

from . import kernels
from .dictionary import DictionaryState, build_initial_dictionary, check_invariants, pivot, pivot_in_place
from .enumeration import EnumerationOutput, EventKind, lrs
from .errors import (
    DuplicateRayError,
    DuplicateVertexError,
    EmptyInputError,
    EmptyPolyhedronError,
    InvariantViolation,
    NonUniqueLexMinError,
    NotFullDimensionalError,
    NoVertexError,
    ParseError,
    PolyLRSError,
    SingularBlockError,
    ZeroInequalityError,
    ZeroPivotElementError,
    ZeroRayError,
)
from .io import parse_hrep, parse_vrep, serialize_hrep, serialize_vrep
from .lp import LPResult, LPStatus, maximize, solve_lp
from .model import HRep, InitialVertex, VRRep, canonicalize_inequality, canonicalize_ray, hrep_equivalent
from .numerics import FLOAT, RATIONAL, Mode, TolerancePolicy
from .oracle import oracle_facets, oracle_rays, oracle_vertices
from .pivoting import is_lexmin_basis, lex_min_ratio, reverse_step, select_pivot
from .subsets import next_subset
from .transforms import h_to_vr, vr_to_h
from .vertex_search import SearchStatus, VertexSearchConfig, VertexSearchResult, find_initial_vertex

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
