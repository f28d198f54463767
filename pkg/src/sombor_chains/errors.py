class DomainError(ValueError):
    """Parameter outside the domain where a construction or formula is defined."""


class GraphStructureError(ValueError):
    """Edge list that is not a simple connected graph."""


class UnsupportedCensusError(ValueError):
    """Census holds a degree pair other than (2,2), (2,3), (3,3)."""


class ResourceGuardError(RuntimeError):
    """Requested enumeration exceeds the configured cap."""
