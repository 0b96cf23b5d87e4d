"""Exact orbit calculus for finite Coxeter groups.

Points are sequences of scalar strings such as ``["1", "t", "-1/2"]`` where
``t`` is the golden ratio.
"""

from ._core import (
    DomainError,
    Group,
    OrbitkitError,
    ParseError,
    SizeGuardError,
    normalize_scalar,
)


def point(text):
    """Split "1,t,0" into ["1", "t", "0"]."""
    return [c.strip() for c in text.split(",")]


__all__ = [
    "DomainError",
    "Group",
    "OrbitkitError",
    "ParseError",
    "SizeGuardError",
    "normalize_scalar",
    "point",
]
