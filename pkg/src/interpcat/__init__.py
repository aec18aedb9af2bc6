"""Exact computations in the interpolation category T(Mod(F_q), K).

Quick start::

    >>> from interpcat import InterpCategory, gen
    >>> C = InterpCategory(2)            # t stays symbolic
    >>> C.hom_dim(gen(1), gen(1))
    5
    >>> str(C.trace(C.identity(gen(2))))
    't^2/1'
"""

from __future__ import annotations

from .category import CutObject, InterpCategory, LatticeIdempotents, Morphism, SumObject, UNIT, as_object, gen
from .errors import InterpCatError, LimitExceeded, MismatchError, ParameterError, PoleError
from .exact import Poly, Scalar, format_scalar, parse_scalar
from .gfq import GF, FqField, FqMatrix, Subspace
from .lattice import LatticeIndex, delta_factored, enumerate_subspaces, gram_unit_determinant, mobius, p_poly
from .semisimple import ParamStatus, center_dim, conj_class_count, is_singular, radical, radical_dim
from .specialization import GLGroup, PermModule, orbit_count, quotient_check, s_morphism, s_object

__version__ = "0.1.0"

__all__ = [
    "CutObject",
    "FqField",
    "FqMatrix",
    "GF",
    "GLGroup",
    "InterpCatError",
    "InterpCategory",
    "LatticeIdempotents",
    "LatticeIndex",
    "LimitExceeded",
    "MismatchError",
    "Morphism",
    "ParamStatus",
    "ParameterError",
    "PermModule",
    "PoleError",
    "Poly",
    "Scalar",
    "Subspace",
    "SumObject",
    "UNIT",
    "as_object",
    "center_dim",
    "conj_class_count",
    "delta_factored",
    "enumerate_subspaces",
    "format_scalar",
    "gen",
    "gram_unit_determinant",
    "is_singular",
    "mobius",
    "orbit_count",
    "p_poly",
    "parse_scalar",
    "quotient_check",
    "radical",
    "radical_dim",
    "s_morphism",
    "s_object",
]
