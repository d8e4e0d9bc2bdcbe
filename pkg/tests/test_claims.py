import pytest

import oracles
from conftest import m
from gradednr.analysis import Analysis
from gradednr.builders import builder_cyclic
from gradednr.claims import (
    FALSIFIED,
    REGISTRY,
    VERIFIED,
    Corpus,
    check_all,
    check_claim,
    claim_ids,
    factor_into,
    replay,
    select_claims,
)
from gradednr.constructions import direct_product, rect_mask
from gradednr.errors import BoundExceeded, UnknownClaim
from gradednr.io import Entry
from gradednr.world import Config, World


@pytest.fixture(scope="module")
def z12_corpus(z12):
    return Corpus([Entry(z12)])


@pytest.fixture(scope="module")
def small_products():
    z4, z2 = builder_cyclic(4), builder_cyclic(2)
    return Corpus([Entry(z4), Entry(z2), Entry(direct_product(z4, z2), ("z4", "z2")),
                   Entry(direct_product(z4, z4), ("z4", "z4"))])


def test_registry_covers_every_result():
    ids = claim_ids()
    for base in ("C-2.T1", "C-2.C1", "C-2.P1", "C-2.T2", "C-2.L1", "C-2.P3", "C-2.P4", "C-2.L2",
                 "C-2.T4", "C-2.T5", "C-2.L3", "C-2.T6", "C-2.T7", "C-2.C2", "C-2.T9", "C-2.P5",
                 "C-3.T10", "C-3.P6", "C-3.P7", "C-3.P8", "C-3.L4", "C-3.T13", "C-3.T14", "C-3.L5",
                 "C-3.T15", "C-3.T16", "C-3.T17", "C-3.C3"):
        assert base in ids
    for group, n in (("C-2.P2", 4), ("C-2.T3", 3), ("C-3.T11", 4), ("C-3.T12", 3), ("C-2.T8", 2)):
        assert len(select_claims(group)) == n
    assert len(ids) == 46
    assert ids == sorted(ids)


def test_selection():
    assert select_claims("all") == claim_ids()
    assert select_claims("C-2.T1,C-3.T10") == ["C-2.T1", "C-3.T10"]
    with pytest.raises(UnknownClaim):
        select_claims("C-9.X")
    with pytest.raises(UnknownClaim):
        check_claim("nope", Corpus([]))


def test_t1_on_z12(z12_corpus):
    r = check_claim("C-2.T1", z12_corpus)
    assert r.status == VERIFIED and r.nonvacuous == 1 and r.instances_checked == 6


def test_smoke_z12_only(z12_corpus):
    results = check_all(z12_corpus)
    assert len(results) == 46
    assert all(r.status in (VERIFIED, FALSIFIED) for r in results)


def test_empty_corpus():
    results = check_all(Corpus([]))
    assert all(r.instances_checked == 0 and r.status == VERIFIED for r in results)


def test_t9_on_products(small_products):
    r = check_claim("C-2.T9", small_products)
    assert r.status == VERIFIED and r.nonvacuous == 2


def test_t7_counterexample_matches_oracle(small_products):
    r = check_claim("C-2.T7", small_products, World(Config(cap=None)))
    assert r.status == FALSIFIED
    # {0} is weakly prime in Z_4 but {0} x Z_2 is not weakly prime in Z_4 x Z_2
    z4, z2 = builder_cyclic(4), builder_cyclic(2)
    P = direct_product(z4, z2)
    graded = oracles.graded_ideals(P)
    cyl = oracles.to_set(rect_mask(m(0), z2.ring.full, 2))
    assert oracles.classify(z4, frozenset({0}), oracles.graded_ideals(z4))[1] is True
    assert oracles.classify(P, cyl, graded)[1] is False
    assert any(cx["structures"]["N"]["name"] == "z4" and cx["structures"]["M"]["name"] == "z2"
               and cx["params"]["P"] == 1 for cx in r.counterexamples)
    for cx in r.counterexamples:
        assert replay(cx)


def test_t17_verified(small_products):
    r = check_claim("C-3.T17", small_products)
    assert r.status == VERIFIED and r.nonvacuous > 0


def test_p5_replays(z12_corpus):
    r = check_claim("C-2.P5", z12_corpus)
    assert r.status == FALSIFIED
    cx = r.counterexamples[0]
    assert replay(cx)
    union = set(cx["readable"]["P"]) | set(cx["readable"]["I"])
    add, mul = oracles.tables(builder_cyclic(12))
    assert not oracles.is_ideal_set(add, mul, frozenset(union))


def test_t16_fails_only_at_improper(default_corpus):
    corpus = Corpus(default_corpus)
    world = World(Config(cap=None))
    r = check_claim("C-3.T16", corpus, world)
    for cx in r.counterexamples:
        order = cx["structures"]["N"]["order"]
        assert cx["readable"]["P"] == list(range(order))
    assert check_claim("C-3.T16.proper", corpus, world).status == VERIFIED


def test_cap_limits_counterexamples(z12_corpus):
    r = check_claim("C-2.P5", z12_corpus, World(Config(cap=1)))
    assert len(r.counterexamples) == 1 and r.falsified_count >= 1


def test_replay_rejects_tampered_record(z12_corpus):
    cx = check_claim("C-2.P5", z12_corpus).counterexamples[0]
    tampered = dict(cx, params=dict(cx["params"], I=cx["params"]["P"]))
    assert not replay(tampered)


class TestFactor:
    def test_z12_zero_six(self, z12):
        seq = factor_into(Analysis(z12), m(0, 6), "weakly", 3)
        assert seq == [m(0, 3, 6, 9), m(*range(0, 12, 2))]

    def test_whole_ring(self, z12):
        assert factor_into(Analysis(z12), z12.ring.full, "weakly", 3) == [z12.ring.full]

    def test_z8_zero(self, z8):
        assert factor_into(Analysis(z8), m(0), "weakly", 3) == [m(0)]

    def test_unreachable(self, z8):
        # weakly primes of Z_8: {0}, 2Z_8, Z_8; products never give {0,4} within length 1
        assert factor_into(Analysis(z8), m(0, 4), "weakly", 1) is None
        assert factor_into(Analysis(z8), m(0, 4), "weakly", 2) == [m(0, 2, 4, 6), m(0, 2, 4, 6)]

    def test_bound(self, z8):
        with pytest.raises(BoundExceeded):
            factor_into(Analysis(z8), m(0), "weakly", 0)


def test_every_claim_has_statement():
    for c in REGISTRY.values():
        assert c.statement and c.shape in ("structure", "product", "hom")
