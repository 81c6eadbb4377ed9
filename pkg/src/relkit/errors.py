"""Exception types shared across relkit."""


class RelkitError(Exception):
    """Base class for all relkit errors."""


class QuantaleMismatch(RelkitError, TypeError):
    """A value or structure does not belong to the expected quantale."""


class UnknownName(RelkitError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class StructureError(RelkitError, ValueError):
    """Malformed term, table, algebra or morphism."""


class TypeChainError(RelkitError, TypeError):
    """Domain/codomain of composed morphisms do not line up."""


class ResourceError(RelkitError):
    """An exhaustive check would exceed its configured enumeration cap."""


class ClassMismatch(RelkitError, ValueError):
    """A functor was applied outside the subcategory it is defined on."""
