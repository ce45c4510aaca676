"""Exception types raised by elastinv."""


class ElastinvError(Exception):
    """Base class for all library errors."""


class ModeError(ElastinvError, TypeError):
    """Exact and floating-point values were mixed in one computation."""


class SymmetryError(ElastinvError, ValueError):
    """A tensor or matrix violates a required index symmetry or trace condition."""


class InvalidRotationError(ElastinvError, ValueError):
    """A matrix is not in SO(3) (or SL(2) for spinor inputs)."""


class IncompleteSearchError(ElastinvError, RuntimeError):
    """A Hilbert-basis search hit its cap before reaching closure."""
