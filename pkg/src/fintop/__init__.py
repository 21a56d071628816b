"""Computation with finite topological spaces."""

from .bits import PointSet
from .errors import FinTopError, PathDisagreement
from .space import (
    Preorder,
    Space,
    minimal_base,
    space_from_minbase,
    space_from_preorder,
    specialization_order,
    subspace,
    validate_topology,
)

__all__ = [
    "FinTopError",
    "PathDisagreement",
    "PointSet",
    "Preorder",
    "Space",
    "minimal_base",
    "space_from_minbase",
    "space_from_preorder",
    "specialization_order",
    "subspace",
    "validate_topology",
]

__version__ = "0.1.0"
