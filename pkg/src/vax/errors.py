"""Exception types shared across the package."""


class StructureError(ValueError):
    """Operands live over mismatched point sets, ring kinds, or lattices."""


class DomainError(ValueError):
    """An operation left the ring it is defined on, e.g. a pole collapsed."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
