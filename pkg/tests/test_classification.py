import pytest

import oracles
from conftest import m
from gradednr.analysis import Analysis
from gradednr.builders import builder_cyclic
from gradednr.classification import (
    classify_all,
    is_graded_almost_prime,
    is_graded_prime,
    is_graded_weakly_prime,
    verify_witness,
)
from gradednr.errors import BoundExceeded, NotGradedIdeal

TWO_Z = m(*range(0, 12, 2))
THREE_Z = m(0, 3, 6, 9)


class TestPrime:
    def test_two_z(self, z12):
        assert is_graded_prime(z12, TWO_Z) == (True, None)

    def test_zero_not_prime(self, z12):
        ok, w = is_graded_prime(z12, m(0))
        assert not ok
        # smallest pair by bitmask: {0,6}*{0,6} = {0}
        assert w == (m(0, 6), m(0, 6))
        assert verify_witness(Analysis(z12), m(0), "prime", w)
        assert ideal_pair_refutes(z12, m(0), w)

    def test_zero_ring(self):
        assert is_graded_prime(builder_cyclic(1), m(0)) == (True, None)

    def test_rejects_non_graded_input(self, z12):
        with pytest.raises(NotGradedIdeal):
            is_graded_prime(z12, m(0, 5))


def ideal_pair_refutes(gnr, P, pair):
    I, J = (oracles.to_set(x) for x in pair)
    Ps = oracles.to_set(P)
    return oracles.product(gnr, I, J) <= Ps and not I <= Ps and not J <= Ps


class TestWeakly:
    def test_zero(self, z12):
        assert is_graded_weakly_prime(z12, m(0)) == (True, None)

    def test_zero_six(self, z12):
        ok, w = is_graded_weakly_prime(z12, m(0, 6))
        assert not ok and w == (THREE_Z, TWO_Z)
        assert verify_witness(Analysis(z12), m(0, 6), "weakly", w)

    def test_z8_zero_four(self, z8):
        ok, w = is_graded_weakly_prime(z8, m(0, 4))
        two_z8 = m(0, 2, 4, 6)
        assert not ok and w == (two_z8, two_z8)
        assert verify_witness(Analysis(z8), m(0, 4), "weakly", w)


class TestAlmost:
    def test_zero_four_eight(self, z12):
        assert is_graded_almost_prime(z12, m(0, 4, 8)) == (True, None)
        assert not is_graded_weakly_prime(z12, m(0, 4, 8))[0]

    def test_zero_six(self, z12):
        ok, w = is_graded_almost_prime(z12, m(0, 6))
        assert not ok and verify_witness(Analysis(z12), m(0, 6), "almost", w)

    def test_z16_maximal(self, z16):
        assert is_graded_almost_prime(z16, m(*range(0, 16, 2)))[0]


class TestClassifyAll:
    def test_z12_table(self, z12):
        rows = {tuple(r.ideal.elements): (r.is_graded_prime, r.is_graded_weakly_prime, r.is_graded_almost_prime)
                for r in classify_all(z12)}
        assert rows == {
            (0,): (False, True, True),
            (0, 6): (False, False, False),
            (0, 4, 8): (False, False, True),
            (0, 3, 6, 9): (True, True, True),
            (0, 2, 4, 6, 8, 10): (True, True, True),
            tuple(range(12)): (True, True, True),
        }

    def test_improper_row_marked(self, z12):
        rows = classify_all(z12)
        assert [r.improper for r in rows] == [False] * 5 + [True]

    def test_zero_ring(self):
        rows = classify_all(builder_cyclic(1))
        assert len(rows) == 1 and rows[0].is_graded_prime and rows[0].improper

    def test_z18_zero_nine(self, z18):
        row = next(r for r in classify_all(z18) if r.ideal.bits == m(0, 9))
        assert not row.is_graded_weakly_prime

    def test_bound(self, z12):
        with pytest.raises(BoundExceeded):
            classify_all(z12, max_order=6)

    def test_row_dict(self, z12):
        row = classify_all(z12)[1].row()
        assert row["ideal"] == [0, 6] and row["square"] == [0]
        assert row["witnesses"]["weakly"] == [[0, 3, 6, 9], [0, 2, 4, 6, 8, 10]]


@pytest.mark.parametrize("n", [1, 2, 4, 6, 8, 9, 12, 16, 18])
def test_matches_definition_oracle(n):
    g = builder_cyclic(n)
    graded = oracles.graded_ideals(g)
    for r in classify_all(g):
        P = oracles.to_set(r.ideal.bits)
        expected = oracles.classify(g, P, graded)
        assert (r.is_graded_prime, r.is_graded_weakly_prime, r.is_graded_almost_prime) == expected


def test_matches_oracle_on_nontrivial_and_nonring(default_corpus):
    for e in default_corpus:
        g = e.gnr
        if g.order > 8 and g.name not in ("z6_g0", "z6_g1", "z6_g2", "s3_zero"):
            continue
        graded = oracles.graded_ideals(g)
        for r in classify_all(g):
            expected = oracles.classify(g, oracles.to_set(r.ideal.bits), graded)
            assert (r.is_graded_prime, r.is_graded_weakly_prime, r.is_graded_almost_prime) == expected, g.name


def test_all_ideals_domain(z12):
    an = Analysis(z12, domain="all")
    assert [an.weakly(P) for P in an.graded] == [Analysis(z12).weakly(P) for P in an.graded]
