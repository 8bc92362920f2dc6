"""Exception types shared across the package."""

from __future__ import annotations


class FlipShiftError(Exception):
    """Base class for every error raised by this package."""


class MatrixShapeError(FlipShiftError, ValueError):
    """Dimension or label mismatch in an exact linear-algebra operation."""


class OrderMismatchError(FlipShiftError, ValueError):
    """Two truncated series with different orders were combined."""


class FlipPairError(FlipShiftError, ValueError):
    """A candidate flip pair violates one of its axioms.

    ``axiom`` is a short machine-readable tag: one of ``A_zero_one``,
    ``J_zero_one``, ``shape``, ``labels``, ``J_involution``, ``flip_symmetry``.
    """

    def __init__(self, axiom: str, message: str):
        super().__init__(message)
        self.axiom = axiom


class CertificateError(FlipShiftError, ValueError):
    """An equivalence certificate fails one of its defining identities.

    ``identity`` names the first violated identity, e.g. ``"A == R*S"``.
    """

    def __init__(self, identity: str, message: str):
        super().__init__(message)
        self.identity = identity


class SpecError(FlipShiftError, ValueError):
    """A block-flip or conjugacy specification failed validation.

    ``reason`` is a short machine-readable tag naming the violated invariant.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class BudgetError(FlipShiftError, ValueError):
    """A bounded search was asked to explore more than its configured budget."""


class SchemaError(FlipShiftError, ValueError):
    """A JSON document does not match its schema; ``path`` locates the field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
