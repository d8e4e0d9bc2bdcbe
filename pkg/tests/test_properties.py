"""Algebraic laws, checked exhaustively on small structures and by random sampling."""

import itertools

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from gradednr.analysis import Analysis
from gradednr.builders import builder_cyclic, builder_mapping_nearring
from gradednr.constructions import direct_product, quotient
from gradednr.core import (
    elements_of,
    is_subgroup,
    is_subset,
    relabel,
    relabel_mask,
    subgroup_closure,
)
from gradednr.corpus import default_entries
from gradednr.grading import validate_grading
from gradednr.ideals import enumerate_ideal_masks, ideal_closure_mask, is_ideal, product_mask

POOL = [e.gnr for e in default_entries() if e.gnr.order <= 12]
POOL += [direct_product(builder_cyclic(2), builder_cyclic(4)),
         direct_product(builder_mapping_nearring(2), builder_mapping_nearring(2))]
ANALYSES = {g.name: Analysis(g) for g in POOL}
SMALL = [g for g in POOL if g.order <= 6]

relaxed = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def ids(gs):
    return [g.name for g in gs]


@st.composite
def structure_and_masks(draw, k=2):
    g = draw(st.sampled_from(POOL))
    masks = [draw(st.integers(0, g.ring.full)) for _ in range(k)]
    return g, masks


@st.composite
def structure_and_ideals(draw, k=2):
    g = draw(st.sampled_from(POOL))
    an = ANALYSES[g.name]
    return an, [draw(st.sampled_from(an.graded)) for _ in range(k)]


# -- closure ----------------------------------------------------------------

def closure_laws(ring, a, b):
    ca = ideal_closure_mask(ring, a)
    assert is_subset(a, ca) and is_ideal(ring, ca)
    assert ideal_closure_mask(ring, ca) == ca
    if is_subset(a, b):
        assert is_subset(ca, ideal_closure_mask(ring, b))
    sa = subgroup_closure(a, ring)
    assert is_subgroup(sa, ring) and subgroup_closure(sa, ring) == sa and is_subset(sa, ca)


@relaxed
@given(structure_and_masks())
def test_closure_random(data):
    g, (a, b) = data
    closure_laws(g.ring, a, b)
    closure_laws(g.ring, a, a | b)


@pytest.mark.parametrize("g", SMALL, ids=ids(SMALL))
def test_closure_exhaustive(g):
    ring = g.ring
    ideals = enumerate_ideal_masks(ring)
    for a in range(ring.full + 1):
        ca = ideal_closure_mask(ring, a)
        assert ideal_closure_mask(ring, ca) == ca
        # minimality: the closure is the least ideal containing a
        containing = [I for I in ideals if is_subset(a, I)]
        assert ca in containing and all(is_subset(ca, I) for I in containing)


@pytest.mark.parametrize("g", SMALL, ids=ids(SMALL))
def test_subgroup_closure_matches_oracle(g):
    add, _ = oracles.tables(g)
    for a in range(g.ring.full + 1):
        assert oracles.to_set(subgroup_closure(a, g.ring)) == oracles.subgroup_generated(add, elements_of(a))


# -- products ---------------------------------------------------------------

def product_laws(an, I, J, K):
    ring = an.ring
    ij = product_mask(ring, I, J)
    if is_subset(J, K):
        assert is_subset(ij, product_mask(ring, I, K))
        assert is_subset(product_mask(ring, J, I), product_mask(ring, K, I))
    # generator test: IJ inside P iff every i*j lies in P
    for P in an.all_ideals:
        pointwise = all(P >> int(ring.mul[i, j]) & 1 for i in elements_of(I) for j in elements_of(J))
        assert is_subset(ij, P) == pointwise
    assert (ij == an.zero) == all(int(ring.mul[i, j]) == ring.zero
                                  for i in elements_of(I) for j in elements_of(J))


@relaxed
@given(structure_and_ideals(3))
def test_products_random(data):
    an, (I, J, K) = data
    product_laws(an, I, J, J | K if is_ideal(an.ring, J | K) else K)
    product_laws(an, I, J, K)


@pytest.mark.parametrize("g", SMALL, ids=ids(SMALL))
def test_products_exhaustive(g):
    an = ANALYSES[g.name]
    for I, J, K in itertools.product(an.graded, repeat=3):
        product_laws(an, I, J, K)
        assert oracles.to_set(an.prod(I, J)) == oracles.product(g, oracles.to_set(I), oracles.to_set(J))


# -- primality --------------------------------------------------------------

@pytest.mark.parametrize("g", POOL, ids=ids(POOL))
def test_implication_chain_and_zero(g):
    an = ANALYSES[g.name]
    for P in an.graded:
        v = an.verdict(P)
        assert not v.prime or v.weakly
        assert not v.weakly or v.almost
    z = an.verdict(an.zero)
    assert z.weakly and z.almost


@relaxed
@given(structure_and_ideals(1))
def test_implication_chain_random(data):
    an, (P,) = data
    v = an.verdict(P)
    assert (not v.prime or v.weakly) and (not v.weakly or v.almost)
    assert an.verdict(an.full).prime


# -- homomorphisms ----------------------------------------------------------

def galois_laws(h, src_ideals, dst_ideals):
    for I in src_ideals:
        for J in dst_ideals:
            assert is_subset(h.image(I), J) == is_subset(I, h.preimage(J))
    for J in dst_ideals:
        assert h.image(h.preimage(J)) == J
        assert is_subset(h.kernel, h.preimage(J))


@pytest.mark.parametrize("g", POOL, ids=ids(POOL))
def test_quotient_laws(g):
    an = ANALYSES[g.name]
    for I in an.graded:
        Q, pi = quotient(g, I)
        assert Q.order * bin(I).count("1") == g.order
        assert pi.kernel == I
        q_ideals = enumerate_ideal_masks(Q.ring)
        # correspondence: ideals of N/I are the images of ideals containing I
        above = sorted(pi.image(J) for J in an.all_ideals if is_subset(I, J))
        assert above == sorted(q_ideals)
        galois_laws(pi, an.all_ideals, q_ideals)


@relaxed
@given(structure_and_ideals(2))
def test_galois_random(data):
    an, (I, J) = data
    _, pi = quotient(an.gnr, I)
    assert is_ideal(pi.target.ring, pi.image(J))
    assert pi.preimage(pi.image(J)) == subgroup_closure(I | J, an.ring)
    assert is_subset(J, pi.preimage(pi.image(J)))


# -- relabeling -------------------------------------------------------------

def relabeled(g, perm):
    ring = relabel(g.ring, perm)
    parts = [relabel_mask(p, perm) for p in g.parts]
    return validate_grading(ring, g.monoid, parts, g.name + "_r")


def check_relabel(g, perm):
    h = relabeled(g, perm)
    a, b = ANALYSES[g.name], Analysis(h)
    assert sorted(relabel_mask(I, perm) for I in a.all_ideals) == b.all_ideals
    assert sorted(relabel_mask(I, perm) for I in a.graded) == b.graded
    for P in a.graded:
        va, vb = a.verdict(P), b.verdict(relabel_mask(P, perm))
        assert (va.prime, va.weakly, va.almost) == (vb.prime, vb.weakly, vb.almost)
        assert relabel_mask(a.sq(P), perm) == b.sq(relabel_mask(P, perm))


@relaxed
@given(st.sampled_from(POOL).flatmap(lambda g: st.tuples(st.just(g), st.permutations(range(g.order)))))
def test_relabel_random(data):
    g, perm = data
    check_relabel(g, list(perm))


@pytest.mark.parametrize("g", [g for g in SMALL if g.order <= 4], ids=ids([g for g in SMALL if g.order <= 4]))
def test_relabel_exhaustive(g):
    for perm in itertools.permutations(range(g.order)):
        check_relabel(g, list(perm))
