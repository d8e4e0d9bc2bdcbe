"""Graded prime, weakly prime and almost prime predicates with witnesses.

For a graded ideal P and ideals I, J ranging over the quantifier domain
(graded ideals unless asked otherwise):

* prime:   IJ in P forces I in P or J in P;
* weakly:  the same, but only when IJ != {0};
* almost:  the same, but only when IJ is not inside P*P.

A refuted predicate comes with the lexicographically smallest (I, J) pair
by bitmask. P = N is accepted and is vacuously all three.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .analysis import Analysis
from .core import MAX_ORDER, elements_of, is_subset
from .errors import BoundExceeded, NotGradedIdeal
from .grading import GradedNearRing
from .ideals import IdealSet, _bits


@dataclass(frozen=True)
class Classification:
    ideal: IdealSet
    is_graded_prime: bool
    is_graded_weakly_prime: bool
    is_graded_almost_prime: bool
    witnesses: dict = field(default_factory=dict)
    improper: bool = False
    square: int = 0

    def row(self) -> dict:
        return {
            "ideal": self.ideal.elements,
            "bits": self.ideal.bits,
            "prime": self.is_graded_prime,
            "weakly_prime": self.is_graded_weakly_prime,
            "almost_prime": self.is_graded_almost_prime,
            "improper": self.improper,
            "square": elements_of(self.square),
            "witnesses": {k: (None if v is None else [elements_of(v[0]), elements_of(v[1])])
                          for k, v in sorted(self.witnesses.items())},
        }


def _analysis(gnr, domain="graded", ideal_generated=False) -> Analysis:
    if isinstance(gnr, Analysis):
        return gnr
    return Analysis(gnr, domain, ideal_generated)


def _checked(an: Analysis, P) -> int:
    p = _bits(P)
    if p not in set(an.graded):
        raise NotGradedIdeal(f"{elements_of(p)} is not a graded ideal", elements_of(p))
    return p


def is_graded_prime(gnr: GradedNearRing | Analysis, P) -> tuple[bool, Optional[tuple[int, int]]]:
    an = _analysis(gnr)
    v = an.verdict(_checked(an, P))
    return v.prime, v.prime_witness


def is_graded_weakly_prime(gnr: GradedNearRing | Analysis, P) -> tuple[bool, Optional[tuple[int, int]]]:
    an = _analysis(gnr)
    v = an.verdict(_checked(an, P))
    return v.weakly, v.weakly_witness


def is_graded_almost_prime(gnr: GradedNearRing | Analysis, P) -> tuple[bool, Optional[tuple[int, int]]]:
    an = _analysis(gnr)
    v = an.verdict(_checked(an, P))
    return v.almost, v.almost_witness


def verify_witness(an: Analysis, P: int, kind: str, pair: tuple[int, int]) -> bool:
    """Re-check a refuting pair from scratch (product recomputed, not cached)."""
    from .ideals import product_mask

    I, J = pair
    if is_subset(I, P) or is_subset(J, P):
        return False
    prod = product_mask(an.ring, I, J, an.ideal_generated)
    if not is_subset(prod, P):
        return False
    if kind == "weakly":
        return prod != an.zero
    if kind == "almost":
        sq = product_mask(an.ring, P, P, an.ideal_generated)
        return not is_subset(prod, sq)
    return True


def classify_all(gnr: GradedNearRing | Analysis, domain: str = "graded",
                 ideal_generated: bool = False, max_order: int = MAX_ORDER) -> list[Classification]:
    an = _analysis(gnr, domain, ideal_generated)
    if an.order > max_order:
        raise BoundExceeded(f"order {an.order} exceeds {max_order}", an.order)
    rows = []
    for P in an.graded:
        v = an.verdict(P)
        # implication chain prime => weakly => almost must hold on every row
        if (v.prime and not v.weakly) or (v.weakly and not v.almost):
            raise AssertionError(f"implication chain broken at {elements_of(P)}")
        rows.append(Classification(
            IdealSet(P, True, True, True, True),
            v.prime, v.weakly, v.almost,
            {"prime": v.prime_witness, "weakly": v.weakly_witness, "almost": v.almost_witness},
            improper=P == an.full,
            square=an.sq(P),
        ))
    return rows
