"""Monoid gradings of finite near-rings.

A grading assigns to every monoid element a normal additive subgroup such
that each x in N decomposes uniquely as ``x_0 + x_1 + ... + x_{k-1}`` (summed
in monoid index order, which matters when addition is not abelian) and the
parts multiply according to the monoid table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .core import (
    MAX_ORDER,
    FiniteMonoid,
    FiniteNearRing,
    elements_of,
    is_normal_subgroup,
    is_subgroup,
    is_subset,
    mask_from_array,
    normal_subgroups,
    trivial_monoid,
    two_element_semilattice,
)
from .errors import BoundExceeded, NotDirectSum, NotMultiplicative, NotNormalSubgroup

GRADING_CANDIDATE_CAP = 2_000_000


@dataclass(frozen=True, eq=False)
class Grading:
    monoid: FiniteMonoid
    parts: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class GradedNearRing:
    ring: FiniteNearRing
    grading: Grading
    component_of: np.ndarray          # shape (order, monoid.order)
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return self.ring.order

    @property
    def monoid(self) -> FiniteMonoid:
        return self.grading.monoid

    @property
    def parts(self) -> tuple[int, ...]:
        return self.grading.parts

    @cached_property
    def component_masks(self) -> tuple[int, ...]:
        return tuple(mask_from_array(row) for row in self.component_of)

    @cached_property
    def key(self) -> bytes:
        return (self.ring.key + b"|" + self.monoid.key + b"|"
                + b",".join(str(p).encode() for p in self.parts))

    def same_structure(self, other: "GradedNearRing") -> bool:
        return self.key == other.key

    def renamed(self, name: str) -> "GradedNearRing":
        return GradedNearRing(self.ring, self.grading, self.component_of, name)


def _decompose(ring: FiniteNearRing, parts: Sequence[int]):
    """Enumerate part tuples until every element is hit once or a clash appears.

    Returns (table, witness): table[x] is the tuple of components of x, or
    witness = (x, count) when x has zero or at least two decompositions.
    At most order+1 tuples are visited because any surplus forces a clash.
    """
    n = ring.order
    lists = [elements_of(p) for p in parts]
    table: dict[int, tuple[int, ...]] = {}
    for combo in itertools.product(*lists):
        s = ring.zero
        for c in combo:
            s = int(ring.add[s, c])
        if s in table:
            return None, (s, 2)
        table[s] = combo
    for x in range(n):
        if x not in table:
            return None, (x, 0)
    return table, None


def validate_grading(ring: FiniteNearRing, monoid: FiniteMonoid,
                     parts: Sequence[int] | Mapping[int, int], name: str = "") -> GradedNearRing:
    if isinstance(parts, Mapping):
        parts = [parts.get(s, ring.zero_mask) for s in range(monoid.order)]
    parts = tuple(int(p) for p in parts)
    if len(parts) != monoid.order:
        raise ValueError(f"need {monoid.order} parts, got {len(parts)}")
    for s, p in enumerate(parts):
        if not (is_subgroup(p, ring) and is_normal_subgroup(p, ring, assume_subgroup=True)):
            raise NotNormalSubgroup(f"part {s} is not a normal additive subgroup", s)
    table, witness = _decompose(ring, parts)
    if table is None:
        x, count = witness
        kind = "no" if count == 0 else "several"
        raise NotDirectSum(f"element {x} has {kind} decompositions", witness)
    lists = [elements_of(p) for p in parts]
    for s in range(monoid.order):
        for t in range(monoid.order):
            target = parts[monoid.op(s, t)]
            if not lists[s] or not lists[t]:
                continue
            prods = ring.mul[np.ix_(lists[s], lists[t])]
            if is_subset(mask_from_array(prods), target):
                continue
            pair = next((a, b) for a in lists[s] for b in lists[t]
                        if not target >> int(ring.mul[a, b]) & 1)
            raise NotMultiplicative(f"parts {s}*{t} not inside part {monoid.op(s, t)}: {pair}",
                                    (s, t, pair))
    comp = np.array([table[x] for x in range(ring.order)], dtype=np.int64).reshape(ring.order, monoid.order)
    comp.setflags(write=False)
    return GradedNearRing(ring, Grading(monoid, parts), comp, name)


def trivial_grading(ring: FiniteNearRing, monoid: FiniteMonoid | None = None, name: str = "") -> GradedNearRing:
    """Whole ring in the identity degree, zero elsewhere."""
    monoid = monoid or trivial_monoid()
    parts = [ring.zero_mask] * monoid.order
    parts[monoid.identity] = ring.full
    return validate_grading(ring, monoid, parts, name)


def paper_grading(ring: FiniteNearRing, name: str = "") -> GradedNearRing:
    """Trivial grading over the two-element monoid {0, 1} with 1*1 = 1."""
    return trivial_grading(ring, two_element_semilattice(), name)


def homogeneous_component(gnr: GradedNearRing, x: int, sigma: int) -> int:
    return int(gnr.component_of[x, sigma])


def is_graded_subset(gnr: GradedNearRing, S: int) -> bool:
    comps = gnr.component_masks
    for x in elements_of(S):
        if not is_subset(comps[x], S):
            return False
    return True


def enumerate_gradings(ring: FiniteNearRing, monoid: FiniteMonoid,
                       max_order: int = MAX_ORDER) -> list[GradedNearRing]:
    if ring.order > max_order:
        raise BoundExceeded(f"order {ring.order} exceeds {max_order}", ring.order)
    normals = normal_subgroups(ring)
    total = len(normals) ** monoid.order
    if total > GRADING_CANDIDATE_CAP:
        raise BoundExceeded(f"{total} candidate assignments", total)
    sizes = {s: bin(s).count("1") for s in normals}
    found = []
    for combo in itertools.product(normals, repeat=monoid.order):
        if int(np.prod([sizes[c] for c in combo])) != ring.order:
            continue
        try:
            found.append(validate_grading(ring, monoid, combo))
        except (NotDirectSum, NotMultiplicative):
            continue
    return found
