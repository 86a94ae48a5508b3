"""Exact enumeration and classification of ideals of 3-dimensional algebras.

The package takes the 27 structure constants of a 3-dimensional algebra over
the rationals or the Gaussian rationals, enumerates every 1- and 2-dimensional
two-sided ideal exactly, classifies the 2-dimensional ones into four plane
types, and reports finite solution sets and infinite parametric families.
"""

from .errors import (
    BoundViolation,
    DegenerateInput,
    DegreeTooLarge,
    DependentVectors,
    Ideals3Error,
    IncompatibleExtensions,
    InconsistencyDetected,
    InvalidParameters,
    NotAnIdeal,
    ParseError,
)
from .scalar import FieldMode, GaussianRational
from .algebra import StructureTensor
from .subspace import Line, PlaneDescriptor, PlaneKind, is_ideal_line, is_ideal_plane
from .onedim import enumerate_onedim, onedim_census
from .twodim import enumerate_twodim
from .families import FamilySpec, FAMILY_NAMES, build, family_spec

__all__ = [
    "BoundViolation",
    "DegenerateInput",
    "DegreeTooLarge",
    "DependentVectors",
    "FAMILY_NAMES",
    "FamilySpec",
    "FieldMode",
    "GaussianRational",
    "Ideals3Error",
    "IncompatibleExtensions",
    "InconsistencyDetected",
    "InvalidParameters",
    "Line",
    "NotAnIdeal",
    "ParseError",
    "PlaneDescriptor",
    "PlaneKind",
    "StructureTensor",
    "build",
    "enumerate_onedim",
    "enumerate_twodim",
    "family_spec",
    "is_ideal_line",
    "is_ideal_plane",
    "onedim_census",
]

__version__ = "0.1.0"
