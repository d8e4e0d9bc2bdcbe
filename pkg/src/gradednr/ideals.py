"""Ideals of a graded near-ring: closure, arithmetic and lattice enumeration.

Ideal here means the two-sided right near-ring notion: a normal additive
subgroup I with ``n(m + i) - nm`` in I and ``i n`` in I for all n, m in N,
i in I.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    FiniteNearRing,
    elements_of,
    is_normal_subgroup,
    is_subgroup,
    is_subset,
    mask_from_array,
    subgroup_closure,
)
from .errors import BoundExceeded, NotAnIdealInput
from .grading import GradedNearRing, is_graded_subset

IDEAL_ENUMERATION_BOUND = 64


@dataclass(frozen=True)
class IdealSet:
    bits: int
    is_subgroup: bool
    is_normal: bool
    is_ideal: bool
    is_graded: bool
    closed_from_image: bool = False

    @property
    def elements(self) -> list[int]:
        return elements_of(self.bits)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)


def is_ideal(ring: FiniteNearRing, S: int) -> bool:
    if not is_subgroup(S, ring):
        return False
    return is_subset(_absorb_mask(ring, S), S)


def describe(gnr: GradedNearRing, S: int) -> IdealSet:
    ring = gnr.ring
    sub = is_subgroup(S, ring)
    normal = sub and is_normal_subgroup(S, ring, assume_subgroup=True)
    ideal = normal and is_subset(_absorb_mask(ring, S), S)
    return IdealSet(S, sub, normal, ideal, is_graded_subset(gnr, S))


@lru_cache(maxsize=256)
def _absorption_table(ring: FiniteNearRing) -> tuple[int, ...]:
    """For each s: the elements any ideal containing s must also contain.

    Union of {n + s - n}, {n(m + s) - nm} and {s n} over all n, m.
    """
    n = ring.order
    add, mul, neg = ring.add, ring.mul, ring.neg
    idx = np.arange(n)
    conj = add[add[:, idx], neg[:, None]]                  # [n, s]
    shifted = mul[idx[:, None, None], add[None, :, :]]      # [n, m, s] = n(m + s)
    base = mul[:, :, None]                                  # [n, m, 1] = nm
    diff = add[shifted, neg[np.broadcast_to(base, shifted.shape)]]
    right = mul                                             # [s, n] = s n
    member = np.zeros((n, n), dtype=bool)
    s_axis = np.broadcast_to(idx[None, :], conj.shape)
    member[s_axis.ravel(), conj.ravel()] = True
    s_axis3 = np.broadcast_to(idx[None, None, :], diff.shape)
    member[s_axis3.ravel(), diff.ravel()] = True
    member[np.repeat(idx, n), right.ravel()] = True
    return tuple(mask_from_array(np.flatnonzero(row)) for row in member)


def _absorb_mask(ring: FiniteNearRing, S: int) -> int:
    table = _absorption_table(ring)
    out = 0
    for s in elements_of(S):
        out |= table[s]
    return out


def ideal_closure_mask(ring: FiniteNearRing, S: int) -> int:
    current = subgroup_closure(S, ring)
    while True:
        grown = subgroup_closure(current | _absorb_mask(ring, current), ring)
        if grown == current:
            return current
        current = grown


def ideal_closure(gnr: GradedNearRing, S: int) -> IdealSet:
    bits = ideal_closure_mask(gnr.ring, S)
    return IdealSet(bits, True, True, True, is_graded_subset(gnr, bits))


def principal_ideal(gnr: GradedNearRing, x: int) -> IdealSet:
    return ideal_closure(gnr, 1 << x)


def _bits(x) -> int:
    return x.bits if isinstance(x, IdealSet) else int(x)


def ideal_sum(gnr: GradedNearRing, I, J) -> IdealSet:
    ring = gnr.ring
    a, b = _bits(I), _bits(J)
    for m in (a, b):
        if not is_ideal(ring, m):
            raise NotAnIdealInput(f"{elements_of(m)} is not an ideal", elements_of(m))
    via_closure = ideal_closure_mask(ring, a | b)
    via_subgroup = subgroup_closure(a | b, ring)
    if via_closure != via_subgroup:
        raise AssertionError(f"sum of ideals is not their subgroup join: "
                             f"{elements_of(via_closure)} vs {elements_of(via_subgroup)}")
    return IdealSet(via_closure, True, True, True, is_graded_subset(gnr, via_closure))


def product_mask(ring: FiniteNearRing, a: int, b: int, ideal_generated: bool = False) -> int:
    """Additive subgroup generated by all products i*j (or the ideal, if asked)."""
    ea, eb = elements_of(a), elements_of(b)
    if not ea or not eb:
        return ring.zero_mask
    prods = mask_from_array(ring.mul[np.ix_(ea, eb)])
    if ideal_generated:
        return ideal_closure_mask(ring, prods)
    return subgroup_closure(prods, ring)


def ideal_product(gnr: GradedNearRing, I, J, ideal_generated: bool = False) -> int:
    return product_mask(gnr.ring, _bits(I), _bits(J), ideal_generated)


def ideal_square_cap(gnr: GradedNearRing, P, ideal_generated: bool = False) -> int:
    """P*P intersected with N; the intersection never removes anything."""
    p = _bits(P)
    return product_mask(gnr.ring, p, p, ideal_generated) & gnr.ring.full


def residual_mask(ring: FiniteNearRing, A: int, B: int) -> int:
    """{n : n*b in A for every b in B}."""
    eb = elements_of(B)
    if not eb:
        return ring.full
    out = 0
    for n in range(ring.order):
        row = ring.mul[n, eb]
        if is_subset(mask_from_array(row), A):
            out |= 1 << n
    return out


def residual(gnr: GradedNearRing, A, B) -> int:
    return residual_mask(gnr.ring, _bits(A), _bits(B))


def enumerate_ideal_masks(ring: FiniteNearRing, bound: int = IDEAL_ENUMERATION_BOUND) -> list[int]:
    """All ideals: principal ideals plus {0}, closed under pairwise sums."""
    if ring.order > bound:
        raise BoundExceeded(f"order {ring.order} exceeds {bound}", ring.order)
    found = {ring.zero_mask}
    for x in range(ring.order):
        found.add(ideal_closure_mask(ring, 1 << x))
    frontier = sorted(found)
    while frontier:
        fresh = []
        snapshot = sorted(found)
        for a in frontier:
            for b in snapshot:
                s = ideal_closure_mask(ring, a | b)
                if s not in found:
                    found.add(s)
                    fresh.append(s)
        frontier = fresh
    return sorted(found)


def enumerate_ideals(gnr: GradedNearRing, graded_only: bool = False,
                     bound: int = IDEAL_ENUMERATION_BOUND) -> list[IdealSet]:
    out = []
    for m in enumerate_ideal_masks(gnr.ring, bound):
        graded = is_graded_subset(gnr, m)
        if graded or not graded_only:
            out.append(IdealSet(m, True, True, True, graded))
    return out
