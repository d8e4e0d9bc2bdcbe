"""Per-structure cache shared by classification, constructions and claim sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import elements_of, is_subset
from .grading import GradedNearRing, is_graded_subset
from .ideals import enumerate_ideal_masks, ideal_closure_mask, product_mask, residual_mask


@dataclass(frozen=True)
class Verdict:
    prime: bool
    weakly: bool
    almost: bool
    prime_witness: Optional[tuple[int, int]]
    weakly_witness: Optional[tuple[int, int]]
    almost_witness: Optional[tuple[int, int]]


class Analysis:
    """Lazily computed ideal lattice, product table and primality verdicts.

    ``domain`` selects the ideals I, J that the primality quantifiers range
    over: "graded" (the default) or "all".
    """

    def __init__(self, gnr: GradedNearRing, domain: str = "graded", ideal_generated: bool = False):
        if domain not in ("graded", "all"):
            raise ValueError(f"unknown quantifier domain {domain!r}")
        self.gnr = gnr
        self.ring = gnr.ring
        self.domain = domain
        self.ideal_generated = ideal_generated
        self.zero = gnr.ring.zero_mask
        self.full = gnr.ring.full
        self._prod_cache: dict[tuple[int, int], int] = {}
        self._verdicts: dict[int, Verdict] = {}
        self._sq: dict[int, int] = {}
        self._quotients: dict[int, tuple] = {}
        self.products: dict[bytes, "Analysis"] = {}
        self._all = None
        self._graded = None
        self._principal = None
        self._matrix = None

    @property
    def name(self) -> str:
        return self.gnr.name

    @property
    def order(self) -> int:
        return self.ring.order

    def like(self, gnr: GradedNearRing) -> "Analysis":
        return Analysis(gnr, self.domain, self.ideal_generated)

    # -- lattice -------------------------------------------------------------

    @property
    def all_ideals(self) -> list[int]:
        if self._all is None:
            self._all = enumerate_ideal_masks(self.ring)
        return self._all

    @property
    def graded(self) -> list[int]:
        if self._graded is None:
            self._graded = [m for m in self.all_ideals if is_graded_subset(self.gnr, m)]
        return self._graded

    @property
    def domain_ideals(self) -> list[int]:
        return self.graded if self.domain == "graded" else self.all_ideals

    def principal(self, x: int) -> int:
        if self._principal is None:
            self._principal = [ideal_closure_mask(self.ring, 1 << y) for y in range(self.order)]
        return self._principal[x]

    def is_graded_ideal(self, S: int) -> bool:
        return S in set(self.graded)

    # -- arithmetic ----------------------------------------------------------

    def prod(self, a: int, b: int) -> int:
        key = (a, b)
        hit = self._prod_cache.get(key)
        if hit is None:
            hit = product_mask(self.ring, a, b, self.ideal_generated)
            self._prod_cache[key] = hit
        return hit

    def sq(self, P: int) -> int:
        hit = self._sq.get(P)
        if hit is None:
            hit = self.prod(P, P) & self.full
            self._sq[P] = hit
        return hit

    def residual(self, A: int, B: int) -> int:
        return residual_mask(self.ring, A, B)

    def _product_matrix(self):
        if self._matrix is None:
            dom = self.domain_ideals
            mat = np.array([[self.prod(a, b) for b in dom] for a in dom], dtype=np.uint64)
            self._matrix = (np.array(dom, dtype=np.uint64), mat)
        return self._matrix

    @property
    def product_matrix(self) -> np.ndarray:
        return self._product_matrix()[1]

    # -- primality -----------------------------------------------------------

    def verdict(self, P: int) -> Verdict:
        hit = self._verdicts.get(P)
        if hit is not None:
            return hit
        dom, mat = self._product_matrix()
        p = np.uint64(P)
        outside = (dom & ~p) != 0
        inside = (mat & ~p) == 0
        base = outside[:, None] & outside[None, :] & inside
        weak_bad = base & (mat != np.uint64(self.zero))
        almost_bad = base & ((mat & ~np.uint64(self.sq(P))) != 0)

        def first(bad):
            hits = np.argwhere(bad)
            if len(hits) == 0:
                return None
            i, j = hits[0]
            return int(dom[i]), int(dom[j])

        pw, ww, aw = first(base), first(weak_bad), first(almost_bad)
        v = Verdict(pw is None, ww is None, aw is None, pw, ww, aw)
        self._verdicts[P] = v
        return v

    def prime(self, P: int) -> bool:
        return self.verdict(P).prime

    def weakly(self, P: int) -> bool:
        return self.verdict(P).weakly

    def almost(self, P: int) -> bool:
        return self.verdict(P).almost

    # -- maximal ideals ------------------------------------------------------

    def maximal_ideals(self, graded_only: bool = False) -> list[int]:
        pool = [m for m in (self.graded if graded_only else self.all_ideals) if m != self.full]
        return [m for m in pool if not any(m != o and is_subset(m, o) for o in pool)]

    def describe(self, S: int) -> list[int]:
        return elements_of(S)
