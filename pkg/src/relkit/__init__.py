"""Quantale-valued relations and spans between finite algebras, with law checks."""
from .errors import (
    ClassMismatch, QuantaleMismatch, RelkitError, ResourceError, StructureError, TypeChainError,
    UnknownName,
)
from .quantale import INF, builtin

__version__ = "0.1.0"

__all__ = [
    "INF", "builtin", "RelkitError", "QuantaleMismatch", "UnknownName", "StructureError",
    "TypeChainError", "ResourceError", "ClassMismatch", "__version__",
]
