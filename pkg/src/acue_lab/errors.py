"""Exception hierarchy for acue_lab.

Every library-raised error derives from AcueLabError so callers (and the
CLI) can distinguish mathematical precondition failures from programming
bugs.  The CLI maps AcueLabError to exit code 2 and verification failures
to exit code 3; argparse handles usage errors with exit code 1.
"""

from __future__ import annotations


class AcueLabError(Exception):
    """Base class for all acue_lab mathematical/configuration errors."""


class DimensionError(AcueLabError):
    """Mismatched sizes: non-square matrix, wrong shift count, and so on."""


class DomainError(AcueLabError):
    """Input outside the mathematical domain of an operation."""


class PoleError(AcueLabError):
    """Evaluation requested at (or too close to) a pole or an excluded
    coincidence.  Messages name the offending value or index pair."""


class ConditioningError(AcueLabError):
    """Shifts are nearly coincident: the raw alternant ratio would lose
    too many bits and confluent mode was not requested."""


class CapacityError(AcueLabError):
    """Exact enumeration was asked to exceed its configured size cap."""


class ContourError(AcueLabError):
    """A quadrature contour passes too close to a pole of the integrand."""
