"""Concrete near-rings: Z_n, mapping near-rings M(Z_k), zero-multiplication near-rings."""

from __future__ import annotations

import itertools

from .core import FiniteMonoid, MAX_ORDER, validate_nearring, two_element_semilattice
from .errors import BoundExceeded
from .grading import GradedNearRing, enumerate_gradings, paper_grading, trivial_grading


def cyclic_ring(n: int):
    if not 1 <= n <= MAX_ORDER:
        raise BoundExceeded(f"Z_{n} outside 1..{MAX_ORDER}", n)
    r = range(n)
    return validate_nearring([[(a + b) % n for b in r] for a in r],
                             [[(a * b) % n for b in r] for a in r])


def builder_cyclic(n: int, grading_mode: str = "trivial", monoid: FiniteMonoid | None = None):
    """Z_n over the two-element monoid {0, 1} with 1*1 = 1 (or ``monoid``).

    ``trivial`` returns one structure (all of Z_n in degree 0); ``enumerate``
    returns every grading over the monoid.
    """
    ring = cyclic_ring(n)
    monoid = monoid or two_element_semilattice()
    if grading_mode == "trivial":
        return trivial_grading(ring, monoid, f"z{n}")
    if grading_mode == "enumerate":
        out = []
        for i, g in enumerate(enumerate_gradings(ring, monoid)):
            out.append(g.renamed(f"z{n}_g{i}"))
        return out
    raise ValueError(f"unknown grading mode {grading_mode!r}")


def mapping_nearring_tables(k: int):
    """All self-maps of Z_k, pointwise addition, composition f*g = f after g.

    Maps are listed in lexicographic order of (f(0), ..., f(k-1)), so the
    zero map is element 0.
    """
    maps = list(itertools.product(range(k), repeat=k))
    index = {f: i for i, f in enumerate(maps)}
    add = [[index[tuple((f[x] + g[x]) % k for x in range(k))] for g in maps] for f in maps]
    mul = [[index[tuple(f[g[x]] for x in range(k))] for g in maps] for f in maps]
    return maps, add, mul


def builder_mapping_nearring(group_order: int) -> GradedNearRing:
    """M(Z_k) graded over the one-element monoid.

    Constant maps give n*0 != 0, so the near-ring is not zero-symmetric and
    N_0 * N_1 = N * {0} escapes {0}: the {0, 1} trivial grading is not a grading.
    """
    if group_order not in (1, 2, 3):
        raise BoundExceeded(f"M(Z_{group_order}) unsupported; group order must be 1, 2 or 3", group_order)
    _, add, mul = mapping_nearring_tables(group_order)
    return trivial_grading(validate_nearring(add, mul, 0), None, f"m_z{group_order}")


def symmetric_group_table(k: int = 3):
    """Composition table of S_k; permutations in lexicographic order, identity first."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]


def zero_multiplication(add_table, name: str = "") -> GradedNearRing:
    """Any group becomes a near-ring with x*y = 0."""
    n = len(add_table)
    return paper_grading(validate_nearring(add_table, [[0] * n for _ in range(n)], 0), name)
