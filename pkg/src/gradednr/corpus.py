"""The default corpus and product-pair expansion."""

from __future__ import annotations

from .builders import builder_cyclic, builder_mapping_nearring, symmetric_group_table, zero_multiplication
from .constructions import direct_product, quotient
from .errors import BoundExceeded, InducedGradingInvalid, MonoidMismatch
from .grading import GradedNearRing
from .ideals import enumerate_ideal_masks
from .grading import is_graded_subset
from .io import Entry

CYCLIC_ORDERS = (1, 2, 4, 6, 8, 12, 16, 18)


class _Builder:
    def __init__(self):
        self.entries: list[Entry] = []
        self.keys: set[bytes] = set()

    def add(self, gnr: GradedNearRing, factors=None) -> bool:
        if gnr.key in self.keys:
            return False
        self.keys.add(gnr.key)
        self.entries.append(Entry(gnr, factors))
        return True


def nontrivial_gradings(n: int) -> list[GradedNearRing]:
    """Gradings of Z_n over {0, 1} (1*1 = 1) with a nonzero degree-1 part."""
    return [g for g in builder_cyclic(n, "enumerate") if g.parts[1] != g.ring.zero_mask]


def graded_quotients(gnr: GradedNearRing) -> list[GradedNearRing]:
    out = []
    for I in enumerate_ideal_masks(gnr.ring):
        if not is_graded_subset(gnr, I):
            continue
        try:
            out.append(quotient(gnr, I)[0])
        except InducedGradingInvalid:
            continue
    return out


def default_entries() -> list[Entry]:
    b = _Builder()
    cyc = {n: builder_cyclic(n, "trivial") for n in CYCLIC_ORDERS}
    for n in CYCLIC_ORDERS:
        b.add(cyc[n])
    for n in (6, 12):
        for g in nontrivial_gradings(n):
            b.add(g)
    b.add(builder_mapping_nearring(2))
    b.add(builder_mapping_nearring(3))
    b.add(zero_multiplication(symmetric_group_table(3), "s3_zero"))
    b.add(direct_product(cyc[4], cyc[4]), ("z4", "z4"))
    b.add(direct_product(cyc[12], cyc[2]), ("z12", "z2"))
    for n in (12, 18):
        for q in graded_quotients(cyc[n]):
            b.add(q)
    return b.entries


def with_product_pairs(entries: list[Entry], max_order: int = 64) -> list[Entry]:
    """Append N x M for every ordered pair of non-product members sharing a monoid.

    Factors of order 1 are skipped since N x {0} is N again.
    """
    b = _Builder()
    for e in entries:
        b.add(e.gnr, e.factors)
    # an existing member equal to a formed product keeps its name but learns its factors
    by_key = {e.gnr.key: i for i, e in enumerate(b.entries)}
    base = [e for e in entries if e.factors is None and e.gnr.order > 1]
    for A in base:
        for B in base:
            if A.gnr.order * B.gnr.order > max_order:
                continue
            try:
                P = direct_product(A.gnr, B.gnr, max_order)
            except (MonoidMismatch, BoundExceeded):
                continue
            if not b.add(P, (A.name, B.name)):
                i = by_key[P.key]
                if b.entries[i].factors is None:
                    b.entries[i] = Entry(b.entries[i].gnr, (A.name, B.name))
            else:
                by_key[P.key] = len(b.entries) - 1
    return b.entries


def manifest(entries: list[Entry]) -> list[dict]:
    from .io import structure_hash

    return [{"name": e.name, "order": e.gnr.order, "hash": structure_hash(e.gnr),
             **({"factors": list(e.factors)} if e.factors else {})} for e in entries]
