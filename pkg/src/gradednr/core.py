"""Finite monoids, finite (right) near-rings and additive subgroup machinery.

Elements are the integers ``0..order-1``. Subsets of a structure are Python
ints used as bitmasks (bit ``i`` set means element ``i`` is a member).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AddNotGroup,
    BadIdentity,
    BoundExceeded,
    MulNotAssociative,
    NotASubgroup,
    NotAssociative,
    NotRightDistributive,
)

MAX_ORDER = 64

_ONE = np.uint64(1)


# -- bitmask helpers ---------------------------------------------------------

def elements_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << int(e)
    return m


def mask_from_array(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(np.bitwise_or.reduce(np.left_shift(_ONE, arr.astype(np.uint64).ravel())))


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def full_mask(order: int) -> int:
    return (1 << order) - 1


# -- tables ------------------------------------------------------------------

def _as_table(table, order: int | None = None) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if order is not None and n != order:
        raise ValueError(f"table has order {n}, expected {order}")
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("table entries out of range")
    arr.setflags(write=False)
    return arr


def _first_nonassociative(t: np.ndarray):
    """First triple (a, b, c) in lexicographic order with (ab)c != a(bc)."""
    left = t[t, :]            # left[a, b, c] = (ab)c
    right = t[:, t]           # right[a, b, c] = a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    order: int
    table: np.ndarray
    identity: int

    def op(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def key(self) -> bytes:
        return self.table.tobytes() + bytes([self.identity])

    def __eq__(self, other):
        return isinstance(other, FiniteMonoid) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def to_dict(self) -> dict:
        return {"order": self.order, "table": self.table.tolist(), "identity": self.identity}


def validate_monoid(table, identity: int) -> FiniteMonoid:
    """Check associativity first, then the two-sided identity."""
    t = _as_table(table)
    n = t.shape[0]
    if not 0 <= identity < n:
        raise BadIdentity(f"identity {identity} out of range", identity)
    triple = _first_nonassociative(t)
    if triple is not None:
        raise NotAssociative(f"operation is not associative at {triple}", triple)
    idx = np.arange(n)
    bad = np.flatnonzero((t[identity] != idx) | (t[:, identity] != idx))
    if len(bad):
        x = int(bad[0])
        raise BadIdentity(f"{identity} is not an identity: fails at element {x}", x)
    return FiniteMonoid(n, t, int(identity))


def trivial_monoid() -> FiniteMonoid:
    return validate_monoid([[0]], 0)


def two_element_semilattice() -> FiniteMonoid:
    """{0, 1} with 0 the identity and 1 absorbing (1*1 = 1)."""
    return validate_monoid([[0, 1], [1, 1]], 0)


def cyclic_group_monoid(n: int) -> FiniteMonoid:
    return validate_monoid([[(a + b) % n for b in range(n)] for a in range(n)], 0)


@dataclass(frozen=True, eq=False)
class FiniteNearRing:
    order: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    neg: np.ndarray

    def plus(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def minus(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    @property
    def full(self) -> int:
        return full_mask(self.order)

    @property
    def zero_mask(self) -> int:
        return 1 << self.zero

    @cached_property
    def key(self) -> bytes:
        return self.add.tobytes() + b"|" + self.mul.tobytes()

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.add == self.add.T).all())

    def __eq__(self, other):
        return isinstance(other, FiniteNearRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


def validate_nearring(add, mul, zero: int = 0) -> FiniteNearRing:
    """Validate the three near-ring axioms in fixed order.

    (N, +) is a group, then multiplication is associative, then
    (a + b) y = a y + b y. Left distributivity is never required.
    """
    a = _as_table(add)
    n = a.shape[0]
    if n > MAX_ORDER:
        raise BoundExceeded(f"order {n} exceeds {MAX_ORDER}", n)
    m = _as_table(mul, n)
    if not 0 <= zero < n:
        raise AddNotGroup(f"zero {zero} out of range", ("identity", zero))

    triple = _first_nonassociative(a)
    if triple is not None:
        raise AddNotGroup(f"addition not associative at {triple}", ("associativity", triple))
    idx = np.arange(n)
    bad = np.flatnonzero((a[zero] != idx) | (a[:, zero] != idx))
    if len(bad):
        x = int(bad[0])
        raise AddNotGroup(f"{zero} is not an additive identity (element {x})", ("identity", x))
    neg = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        hits = np.flatnonzero((a[x] == zero) & (a[:, x] == zero))
        if len(hits) == 0:
            raise AddNotGroup(f"element {x} has no additive inverse", ("inverse", x))
        neg[x] = hits[0]
    neg.setflags(write=False)

    triple = _first_nonassociative(m)
    if triple is not None:
        raise MulNotAssociative(f"multiplication not associative at {triple}", triple)

    # lhs[a, b, y] = (a + b) y ; rhs[a, b, y] = a y + b y
    lhs = m[a, :]
    rhs = a[m[:, None, :], m[None, :, :]]
    bad3 = np.argwhere(lhs != rhs)
    if len(bad3):
        w = tuple(int(v) for v in bad3[0])
        raise NotRightDistributive(f"(a+b)y != ay+by at (a,b,y)={w}", w)
    return FiniteNearRing(n, a, m, int(zero), neg)


def is_left_distributive(ring: FiniteNearRing) -> bool:
    m, a = ring.mul, ring.add
    lhs = m[:, a]                                  # x (y + z)
    rhs = a[m[:, :, None], m[:, None, :]]          # x y + x z
    return bool((lhs == rhs).all())


def relabel(ring: FiniteNearRing, perm: Sequence[int]) -> FiniteNearRing:
    """Rename element x to perm[x] and revalidate."""
    p = np.asarray(perm, dtype=np.int64)
    n = ring.order
    inv = np.empty(n, dtype=np.int64)
    inv[p] = np.arange(n)
    add = p[ring.add[np.ix_(inv, inv)]]
    mul = p[ring.mul[np.ix_(inv, inv)]]
    return validate_nearring(add, mul, int(p[ring.zero]))


def relabel_mask(mask: int, perm: Sequence[int]) -> int:
    return mask_of(perm[e] for e in elements_of(mask))


# -- subgroups ---------------------------------------------------------------

def _bool_of(mask: int, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=bool)
    out[elements_of(mask)] = True
    return out


def subgroup_closure(S: int, ring: FiniteNearRing) -> int:
    """Smallest additive subgroup containing S (closure under + in a finite group)."""
    member = _bool_of(S | ring.zero_mask, ring.order)
    count = int(member.sum())
    add = ring.add
    while True:
        idx = np.flatnonzero(member)
        member[add[np.ix_(idx, idx)].ravel()] = True
        new = int(member.sum())
        if new == count:
            break
        count = new
    return mask_from_array(np.flatnonzero(member))


def is_subgroup(S: int, ring: FiniteNearRing) -> bool:
    if not S >> ring.zero & 1:
        return False
    idx = np.array(elements_of(S), dtype=np.int64)
    sums = ring.add[np.ix_(idx, idx)]
    return is_subset(mask_from_array(sums), S)


def is_normal_subgroup(S: int, ring: FiniteNearRing, assume_subgroup: bool = False) -> bool:
    """True iff n + s - n lies in S for all n in N and s in S."""
    if not assume_subgroup and not is_subgroup(S, ring):
        raise NotASubgroup(f"{elements_of(S)} is not an additive subgroup", elements_of(S))
    if ring.is_abelian:
        return True
    idx = np.array(elements_of(S), dtype=np.int64)
    conj = ring.add[ring.add[:, idx], ring.neg[:, None]]
    return is_subset(mask_from_array(conj), S)


def all_subgroups(ring: FiniteNearRing) -> list[int]:
    """Every additive subgroup, as joins of cyclic subgroups; ascending mask order."""
    cyclic = {subgroup_closure(1 << x, ring) for x in range(ring.order)}
    found = set(cyclic)
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for c in cyclic:
                j = subgroup_closure(a | c, ring)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found)


def normal_subgroups(ring: FiniteNearRing) -> list[int]:
    return [s for s in all_subgroups(ring) if is_normal_subgroup(s, ring, assume_subgroup=True)]


def additive_generators(ring: FiniteNearRing) -> list[int]:
    """Greedy generating set of (N, +), scanning elements in index order."""
    gens, current = [], ring.zero_mask
    for x in range(ring.order):
        if not current >> x & 1:
            gens.append(x)
            current = subgroup_closure(current | 1 << x, ring)
    return gens
