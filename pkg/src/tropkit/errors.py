"""Exception hierarchy shared by all tropkit modules."""


class TropkitError(Exception):
    """Base class for all domain errors raised by tropkit."""


class TagMismatch(TropkitError):
    """Operands carry different semiring tags."""


class DimensionMismatch(TropkitError):
    """Matrix/vector shapes are incompatible."""


class DivisionByBottom(TropkitError):
    """Residuation with a zero (bottom) denominator."""


class Divergent(TropkitError):
    """A star series is unbounded (scalar above unit, or positive cycle)."""


class ZeroColumn(TropkitError):
    """A residuated matrix has an all-zero column."""


class NoCycle(TropkitError):
    """The digraph of finite entries is acyclic; no cycle mean exists."""


class Unbounded(TropkitError):
    """Collatz-Wielandt infimum is unbounded below (a row is all zero)."""


class EmptySupport(TropkitError):
    """A vector residual was requested against an empty support."""


class Infeasible(TropkitError):
    """A system admits only the trivial zero solution."""


class TooLarge(TropkitError):
    """Instance exceeds the cap of the exact enumeration path."""


class ImprovingCycle(TropkitError):
    """The supplied bijection is not optimal: an improving cycle exists."""


class CertificateInvalid(TropkitError):
    """A regularity certificate fails its strict inequalities."""


class NoFlow(TropkitError):
    """No normal flow meets the divergence constraints."""


class Inconsistent(TropkitError):
    """Reconstructed subset function violates the defining relations."""


class BadConfig(TropkitError):
    """A simulation configuration is invalid (e.g. overlapping cars)."""


class Diverged(TropkitError):
    """A trajectory exploded beyond the configured spread bound."""
