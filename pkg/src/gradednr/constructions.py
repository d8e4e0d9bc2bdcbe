"""Direct products, quotients and surjective graded homomorphisms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .core import (
    MAX_ORDER,
    additive_generators,
    elements_of,
    is_subset,
    mask_from_array,
    mask_of,
    validate_nearring,
)
from .errors import (
    BoundExceeded,
    InducedGradingInvalid,
    MonoidMismatch,
    NotAHomomorphism,
    NotDirectSum,
    NotGradedIdeal,
    NotMultiplicative,
    NotNormalSubgroup,
    NotSurjective,
)
from .grading import GradedNearRing, is_graded_subset, validate_grading
from .ideals import IdealSet, _bits, ideal_closure_mask, is_ideal

HOM_SOURCE_CAP = 16


@dataclass(frozen=True, eq=False)
class GradedHom:
    source: GradedNearRing
    target: GradedNearRing
    map: tuple[int, ...]

    @cached_property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    @cached_property
    def kernel(self) -> int:
        z = self.target.ring.zero
        return mask_of(x for x, y in enumerate(self.map) if y == z)

    def image(self, S: int) -> int:
        return mask_of(self.map[x] for x in elements_of(S))

    def preimage(self, S: int) -> int:
        return mask_of(x for x, y in enumerate(self.map) if S >> y & 1)


def check_hom(source: GradedNearRing, target: GradedNearRing, mapping: Sequence[int]) -> GradedHom:
    h = np.asarray(mapping, dtype=np.int64)
    A, B = source.ring, target.ring
    if h.shape != (A.order,) or h.min() < 0 or h.max() >= B.order:
        raise NotAHomomorphism("map has wrong length or out-of-range values")
    bad = np.argwhere(h[A.add] != B.add[h[:, None], h[None, :]])
    if len(bad):
        raise NotAHomomorphism("map is not additive", tuple(int(v) for v in bad[0]))
    bad = np.argwhere(h[A.mul] != B.mul[h[:, None], h[None, :]])
    if len(bad):
        raise NotAHomomorphism("map is not multiplicative", tuple(int(v) for v in bad[0]))
    if source.monoid != target.monoid:
        raise MonoidMismatch("source and target are graded by different monoids")
    for s, part in enumerate(source.parts):
        if not is_subset(mask_from_array(h[elements_of(part)]), target.parts[s]):
            raise NotAHomomorphism(f"part {s} is not mapped into part {s}", s)
    return GradedHom(source, target, tuple(int(v) for v in h))


def direct_product(A: GradedNearRing, B: GradedNearRing, max_order: int = MAX_ORDER,
                   name: str | None = None) -> GradedNearRing:
    """Componentwise tables; element (a, b) is encoded as a * |B| + b."""
    if A.monoid != B.monoid:
        raise MonoidMismatch("factors are graded by different monoids")
    na, nb = A.order, B.order
    if na * nb > max_order:
        raise BoundExceeded(f"product order {na * nb} exceeds {max_order}", na * nb)
    ia, ib = np.divmod(np.arange(na * nb), nb)

    def table(ta, tb):
        return ta[np.ix_(ia, ia)] * nb + tb[np.ix_(ib, ib)]

    ring = validate_nearring(table(A.ring.add, B.ring.add), table(A.ring.mul, B.ring.mul),
                             A.ring.zero * nb + B.ring.zero)
    parts = [rect_mask(pa, pb, nb) for pa, pb in zip(A.parts, B.parts)]
    return validate_grading(ring, A.monoid, parts, name if name is not None else f"{A.name}_x_{B.name}")


def rect_mask(a: int, b: int, nb: int) -> int:
    """The subset a x b of a product whose second factor has order nb."""
    return mask_of(x * nb + y for x in elements_of(a) for y in elements_of(b))


def split_mask(S: int, nb: int) -> tuple[int, int] | None:
    """(a, b) with S = a x b, or None if S is not a rectangle."""
    a = mask_of(e // nb for e in elements_of(S))
    b = mask_of(e % nb for e in elements_of(S))
    return (a, b) if rect_mask(a, b, nb) == S else None


def product_catalog_discrepancies(A: GradedNearRing, B: GradedNearRing, product_ideals: Sequence[int]) -> list[int]:
    """Ideals of A x B that are not I x J for ideals I of A and J of B."""
    out = []
    for S in product_ideals:
        split = split_mask(S, B.order)
        if split is None or not (is_ideal(A.ring, split[0]) and is_ideal(B.ring, split[1])):
            out.append(S)
    return out


def quotient(gnr: GradedNearRing, I, name: str | None = None) -> tuple[GradedNearRing, GradedHom]:
    """N / I with cosets labelled in order of their least element (coset 0 is I)."""
    ring = gnr.ring
    mask = _bits(I)
    if not (is_ideal(ring, mask) and is_graded_subset(gnr, mask)):
        raise NotGradedIdeal(f"{elements_of(mask)} is not a graded ideal", elements_of(mask))
    members = elements_of(mask)
    label = [-1] * ring.order
    reps = []
    for x in range(ring.order):
        if label[x] >= 0:
            continue
        q = len(reps)
        reps.append(x)
        for i in members:
            label[int(ring.add[x, i])] = q
    lab = np.array(label, dtype=np.int64)
    r = np.array(reps, dtype=np.int64)
    qring = validate_nearring(lab[ring.add[np.ix_(r, r)]], lab[ring.mul[np.ix_(r, r)]], 0)
    parts = [mask_of(lab[elements_of(p)]) for p in gnr.parts]
    qname = name if name is not None else f"{gnr.name}_mod_{'-'.join(map(str, members))}"
    try:
        qgnr = validate_grading(qring, gnr.monoid, parts, qname)
    except (NotDirectSum, NotMultiplicative, NotNormalSubgroup) as exc:
        raise InducedGradingInvalid(f"induced grading on quotient is invalid: {exc}", exc.witness) from exc
    return qgnr, GradedHom(gnr, qgnr, tuple(int(v) for v in lab))


def hom_image_ideal(h: GradedHom, P) -> IdealSet:
    if not h.surjective:
        raise NotSurjective("image of an ideal is only taken along surjections")
    p = _bits(P)
    img = h.image(p)
    tring = h.target.ring
    if is_subset(h.kernel, p):
        if not is_ideal(tring, img):
            raise AssertionError(f"image of an ideal containing the kernel is not an ideal: {elements_of(img)}")
        return IdealSet(img, True, True, True, is_graded_subset(h.target, img))
    closed = ideal_closure_mask(tring, img)
    return IdealSet(closed, True, True, True, is_graded_subset(h.target, closed), closed_from_image=closed != img)


def hom_preimage_ideal(h: GradedHom, Q) -> IdealSet:
    q = _bits(Q)
    pre = h.preimage(q)
    if not (is_ideal(h.source.ring, pre) and is_subset(h.kernel, pre)):
        raise AssertionError(f"preimage {elements_of(pre)} is not an ideal containing the kernel")
    return IdealSet(pre, True, True, True, is_graded_subset(h.source, pre))


def enumerate_surjective_homs(A: GradedNearRing, B: GradedNearRing, max_source: int = HOM_SOURCE_CAP) -> list[GradedHom]:
    """All surjective graded homomorphisms A -> B.

    Candidates are fixed by the images of a greedy additive generating set;
    each image must have additive order dividing the generator's. The map
    is grown along generator edges and rejected on the first clash.
    """
    if A.order > max_source:
        raise BoundExceeded(f"source order {A.order} exceeds {max_source}", A.order)
    if B.order > A.order or A.order % B.order or A.monoid != B.monoid:
        return []
    ra, rb = A.ring, B.ring
    gens = additive_generators(ra)
    order_a = [_additive_order(ra, x) for x in range(ra.order)]
    order_b = [_additive_order(rb, y) for y in range(rb.order)]
    choices = [[y for y in range(rb.order) if order_a[g] % order_b[y] == 0] for g in gens]
    found = []
    for images in itertools.product(*choices):
        h = _extend(ra, rb, gens, images)
        if h is None or len(set(h)) != rb.order:
            continue
        try:
            found.append(check_hom(A, B, h))
        except NotAHomomorphism:
            continue
    return found


def _additive_order(ring, x: int) -> int:
    k, y = 1, x
    while y != ring.zero:
        y = int(ring.add[y, x])
        k += 1
    return k


def _extend(ra, rb, gens, images):
    h = [-1] * ra.order
    h[ra.zero] = rb.zero
    stack = [ra.zero]
    while stack:
        a = stack.pop()
        for g, img in zip(gens, images):
            t = int(ra.add[a, g])
            v = int(rb.add[h[a], img])
            if h[t] < 0:
                h[t] = v
                stack.append(t)
            elif h[t] != v:
                return None
    return h
