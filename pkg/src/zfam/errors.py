"""Exception hierarchy shared across the package.

UsageError covers malformed input (exit code 2 in the CLI), BudgetExceededError
covers exhausted enumeration budgets (exit code 1), CapacityError covers
requests that are structurally too large to attempt.
"""

from __future__ import annotations


class ZfamError(Exception):
    """Base class for package errors."""


class UsageError(ZfamError):
    """Malformed or out-of-contract input."""


class GroupMismatchError(UsageError):
    """Two objects that must share a parent group do not."""


class ProductNotIdentityError(UsageError):
    """The left-to-right product of the entries is not the identity."""


class NotGeneratingError(UsageError):
    """The entries do not generate the whole group."""


class NotDisjointError(UsageError):
    """Branch loci of the two systems intersect beyond the identity."""


class GenusNotIntegralError(UsageError):
    """The Riemann-Hurwitz genus of a side is not an integer."""


class GenusBelowTwoError(UsageError):
    """The Riemann-Hurwitz genus of a side is below two."""


class SizeBelowThreeError(UsageError):
    """A ramification structure side has fewer than three entries."""


class CapacityError(ZfamError):
    """The request exceeds a hard structural cap."""


class BudgetExceededError(ZfamError):
    """An enumeration budget ran out before the computation finished.

    ``partial`` carries whatever was completed, when anything was.
    """

    def __init__(self, message: str, partial: object = None):
        super().__init__(message)
        self.partial = partial
