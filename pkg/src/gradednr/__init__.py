"""Finite monoid-graded near-rings: ideals, graded (weakly/almost) prime classification, claim sweeps."""

__version__ = "0.1.0"

from .core import FiniteMonoid, FiniteNearRing, validate_monoid, validate_nearring  # noqa: E402
from .grading import GradedNearRing, enumerate_gradings, validate_grading  # noqa: E402
from .ideals import enumerate_ideals, ideal_closure, ideal_product  # noqa: E402
from .classification import (  # noqa: E402
    classify_all,
    is_graded_almost_prime,
    is_graded_prime,
    is_graded_weakly_prime,
)
from .io import load_structure, save_structure  # noqa: E402

__all__ = [
    "FiniteMonoid", "FiniteNearRing", "GradedNearRing",
    "validate_monoid", "validate_nearring", "validate_grading", "enumerate_gradings",
    "enumerate_ideals", "ideal_closure", "ideal_product",
    "classify_all", "is_graded_prime", "is_graded_weakly_prime", "is_graded_almost_prime",
    "load_structure", "save_structure",
]
