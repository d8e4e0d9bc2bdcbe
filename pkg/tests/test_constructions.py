import itertools

import pytest

import oracles
from conftest import m
from gradednr.analysis import Analysis
from gradednr.builders import builder_cyclic, builder_mapping_nearring
from gradednr.classification import classify_all
from gradednr.constructions import (
    check_hom,
    direct_product,
    enumerate_surjective_homs,
    hom_image_ideal,
    hom_preimage_ideal,
    product_catalog_discrepancies,
    quotient,
    rect_mask,
    split_mask,
)
from gradednr.errors import (
    BoundExceeded,
    MonoidMismatch,
    NotAHomomorphism,
    NotGradedIdeal,
    NotSurjective,
)
from gradednr.ideals import enumerate_ideals, ideal_sum


def mod_map(n, k):
    return check_hom(builder_cyclic(n), builder_cyclic(k), [x % k for x in range(n)])


class TestProduct:
    def test_z2_squared(self):
        P = direct_product(builder_cyclic(2), builder_cyclic(2))
        assert P.order == 4 and P.parts == (15, 1)

    def test_z12_z2_ideals_are_rectangles(self):
        A, B = builder_cyclic(12), builder_cyclic(2)
        P = direct_product(A, B)
        ideals = [I.bits for I in enumerate_ideals(P)]
        assert product_catalog_discrepancies(A, B, ideals) == []
        expected = {rect_mask(i.bits, j.bits, 2) for i in enumerate_ideals(A) for j in enumerate_ideals(B)}
        assert set(ideals) == expected
        add, mul = oracles.tables(P)
        assert all(oracles.is_ideal_set(add, mul, oracles.to_set(x)) for x in ideals)

    def test_zero_zero_weakly_prime(self):
        P = direct_product(builder_cyclic(4), builder_cyclic(4))
        assert Analysis(P).weakly(1)

    def test_monoid_mismatch(self):
        with pytest.raises(MonoidMismatch):
            direct_product(builder_cyclic(2), builder_mapping_nearring(2))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            direct_product(builder_cyclic(12), builder_cyclic(8))

    def test_split(self):
        assert split_mask(rect_mask(m(0, 2), m(0, 1), 2), 2) == (m(0, 2), m(0, 1))
        assert split_mask(m(0, 3), 2) is None


class TestQuotient:
    def test_z18_by_zero_nine(self, z18):
        Q, pi = quotient(z18, m(0, 9))
        assert Q.order == 9 and pi.kernel == m(0, 9)
        assert pi.image(m(0, 9)) == m(0)
        assert Analysis(Q).weakly(m(0))

    def test_by_zero_is_isomorphic(self, z12):
        Q, pi = quotient(z12, m(0))
        assert list(pi.map) == list(range(12))
        assert [r.row() for r in classify_all(Q)] == [r.row() for r in classify_all(z12)]

    def test_z12_by_zero_six(self, z12):
        Q, _ = quotient(z12, m(0, 6))
        assert Q.key == builder_cyclic(6).key
        rows = {tuple(r.ideal.elements): r.is_graded_weakly_prime for r in classify_all(Q)}
        assert rows == {(0,): True, (0, 3): True, (0, 2, 4): True, tuple(range(6)): True}

    def test_order_law(self, z12):
        for I in enumerate_ideals(z12, graded_only=True):
            Q, _ = quotient(z12, I)
            assert Q.order * len(I.elements) == 12

    def test_rejects_non_ideal(self, z12):
        with pytest.raises(NotGradedIdeal):
            quotient(z12, m(0, 5))


class TestHoms:
    def test_image_of_zero_four(self):
        h = mod_map(8, 4)
        assert hom_image_ideal(h, m(0, 4)).elements == [0]

    def test_identity_image(self, z12):
        h = check_hom(z12, z12, list(range(12)))
        for I in enumerate_ideals(z12):
            assert hom_image_ideal(h, I).bits == I.bits

    def test_image_in_quotient(self, z12):
        _, pi = quotient(z12, m(0, 6))
        assert hom_image_ideal(pi, m(*range(0, 12, 2))).elements == [0, 2, 4]

    def test_image_not_containing_kernel_is_closed(self, z12):
        h = mod_map(12, 4)
        res = hom_image_ideal(h, m(0, 6))
        assert res.elements == [0, 2]

    def test_image_needs_surjection(self):
        z2, z4 = builder_cyclic(2), builder_cyclic(4)
        with pytest.raises(NotAHomomorphism):
            check_hom(z2, z4, [0, 2])  # 1*1 = 1 but 2*2 = 0
        inc = check_hom(builder_cyclic(1), z2, [0])
        with pytest.raises(NotSurjective):
            hom_image_ideal(inc, m(0))

    def test_preimages(self):
        h = mod_map(8, 4)
        assert hom_preimage_ideal(h, m(0)).elements == [0, 4]
        assert hom_preimage_ideal(h, m(0, 1, 2, 3)).elements == list(range(8))
        assert hom_preimage_ideal(h, m(0, 2)).elements == [0, 2, 4, 6]

    def test_not_additive(self):
        with pytest.raises(NotAHomomorphism):
            check_hom(builder_cyclic(4), builder_cyclic(2), [0, 1, 1, 0])

    def test_enumeration_z8_z4(self):
        maps = [h.map for h in enumerate_surjective_homs(builder_cyclic(8), builder_cyclic(4))]
        assert tuple(x % 4 for x in range(8)) in maps

    def test_enumeration_identity(self, z12):
        maps = [h.map for h in enumerate_surjective_homs(z12, z12)]
        assert tuple(range(12)) in maps

    def test_enumeration_against_brute_force(self):
        A, B = builder_cyclic(12), builder_cyclic(2)
        brute = []
        for f in itertools.product(range(2), repeat=12):
            if len(set(f)) < 2:
                continue
            if all(f[(a + b) % 12] == (f[a] + f[b]) % 2 and f[(a * b) % 12] == (f[a] * f[b]) % 2
                   for a in range(12) for b in range(12)):
                brute.append(f)
        got = [h.map for h in enumerate_surjective_homs(A, B)]
        assert sorted(got) == sorted(brute) and len(got) == 1

    def test_enumeration_bound(self, z18):
        with pytest.raises(BoundExceeded):
            enumerate_surjective_homs(z18, builder_cyclic(2))


class TestGalois:
    def test_quotient_preimage_of_image_is_sum(self, z12):
        for I in enumerate_ideals(z12):
            _, pi = quotient(z12, I)
            for P in enumerate_ideals(z12):
                assert pi.preimage(pi.image(P.bits)) == ideal_sum(z12, P, I).bits

    def test_image_of_preimage(self):
        h = mod_map(12, 4)
        for Q in enumerate_ideals(builder_cyclic(4)):
            assert h.image(h.preimage(Q.bits)) == Q.bits
