"""Registry of the weakly/almost prime results as machine-checkable properties.

Each claim is a universally quantified implication ``hypothesis => conclusion``
over instances drawn from a corpus: single structures with ideals, pairs of
structures with their direct product, or surjective graded homomorphisms.
A sweep evaluates every instance; any instance with a true hypothesis and a
false conclusion is a counterexample. Outcomes are "verified-on-corpus"
(evidence, not proof) or "falsified".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .analysis import Analysis
from .constructions import GradedHom, check_hom, rect_mask, split_mask
from .core import MAX_ORDER, elements_of, is_subset
from .errors import BoundExceeded, InducedGradingInvalid, UnknownClaim
from .io import Entry, structure_from_dict, structure_to_dict
from .world import Config, World

VERIFIED = "verified-on-corpus"
FALSIFIED = "falsified"


class Skip(Exception):
    """Instance cannot be formed (e.g. the induced quotient grading is invalid)."""


# -- factorization -------------------------------------------------------------

def _factor_pool(an: Analysis, kind: str) -> list[int]:
    if kind == "weakly":
        return [P for P in an.graded if an.weakly(P)]
    if kind == "almost":
        return [P for P in an.graded if an.almost(P)]
    raise ValueError(f"unknown factor kind {kind!r}")


def factor_table(an: Analysis, kind: str, max_len: int) -> dict[int, list[int]]:
    """Shortest left-nested product of pool ideals reaching each reachable set.

    Breadth-first over values: the next product only depends on the current
    value, so each set is expanded once. Insertion order is deterministic.
    """
    if not 1 <= max_len <= 12:
        raise BoundExceeded(f"max_len {max_len} outside 1..12", max_len)
    if an.order > MAX_ORDER:
        raise BoundExceeded(f"order {an.order} exceeds {MAX_ORDER}", an.order)
    pool = _factor_pool(an, kind)
    seen: dict[int, list[int]] = {}
    level = {}
    for P in pool:
        if P not in seen:
            seen[P] = [P]
            level[P] = [P]
    for _ in range(max_len - 1):
        nxt = {}
        for X, seq in level.items():
            for w in pool:
                Y = an.prod(X, w)
                if Y not in seen:
                    seen[Y] = seq + [w]
                    nxt[Y] = seen[Y]
        if not nxt:
            break
        level = nxt
    return seen


def factor_into(an: Analysis, I: int, kind: str, max_len: int) -> list[int] | None:
    return factor_table(an, kind, max_len).get(I)


def _all_factor(an: Analysis, kind: str, max_len: int) -> bool:
    table = factor_table(an, kind, max_len)
    return all(I in table for I in an.graded)


# -- registry --------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    shape: str                  # "structure", "product" or "hom"
    statement: str
    instances: Callable         # (world, corpus) -> iterator of (roles, params)
    evaluate: Callable          # (world, roles, params) -> (hypothesis, conclusion)


REGISTRY: dict[str, Claim] = {}


def claim(cid: str, shape: str, statement: str, instances: Callable):
    def deco(fn):
        REGISTRY[cid] = Claim(cid, shape, statement, instances, fn)
        return fn
    return deco


# instance generators ---------------------------------------------------------------

def each_structure(fn):
    def gen(world: World, corpus: "Corpus"):
        for entry in corpus.entries:
            N = world.analysis(entry.gnr)
            for params in fn(world, N):
                yield {"N": N}, params
    return gen


def each_product(fn):
    def gen(world: World, corpus: "Corpus"):
        for n_name, m_name, nm_name in corpus.product_triples():
            N = world.analysis(corpus.by_name[n_name].gnr)
            M = world.analysis(corpus.by_name[m_name].gnr)
            NM = world.analysis(corpus.by_name[nm_name].gnr)
            world.register_product(N, M, NM)
            for params in fn(world, N, M, NM):
                yield {"N": N, "M": M, "NxM": NM}, params
    return gen


def each_hom(fn):
    def gen(world: World, corpus: "Corpus"):
        for h in corpus.homs(world):
            A, B = world.analysis(h.source), world.analysis(h.target)
            for params in fn(world, A, B, h):
                yield {"A": A, "B": B}, dict(params, map=list(h.map))
    return gen


def _graded_P(world, N):
    for P in N.graded:
        yield {"P": P}


def _graded_PI(world, N):
    for P in N.graded:
        for I in N.graded:
            yield {"P": P, "I": I}


def _weakly_P_pairs(world, N):
    dom = N.domain_ideals
    for P in N.graded:
        if N.weakly(P):
            for I in dom:
                for J in dom:
                    yield {"P": P, "I": I, "J": J}


def _graded_triples(world, N):
    g = N.graded
    for P in g:
        for I in g:
            for J in g:
                yield {"P": P, "I": I, "J": J}


def _chains(kind):
    def gen(world, N):
        pool = _factor_pool(N, kind)
        L = world.config.chain_max_len

        def extend(chain):
            yield {"chain": list(chain)}
            if len(chain) == L:
                return
            for Q in pool:
                if Q != chain[-1] and is_subset(chain[-1], Q):
                    yield from extend(chain + [Q])

        for P in pool:
            yield from extend([P])
    return gen


def _pairs_of(kind):
    def gen(world, N):
        pool = _factor_pool(N, kind)
        for P, I in itertools.combinations(pool, 2):
            yield {"P": P, "I": I}
    return gen


def _quotient_pairs(kind):
    """(I, P) with I inside P and P of the given kind."""
    def gen(world, N):
        for P in _factor_pool(N, kind):
            for I in N.graded:
                if is_subset(I, P):
                    yield {"I": I, "P": P}
    return gen


def _over_quotient(kind):
    """(P, Ibar, Jbar) with P of the given kind and Ibar, Jbar graded ideals of N/P."""
    def gen(world, N):
        for P in _factor_pool(N, kind):
            try:
                Q, _ = world.quotient(N, P)
            except InducedGradingInvalid:
                continue
            for Ib in Q.graded:
                for Jb in Q.graded:
                    yield {"P": P, "Ibar": Ib, "Jbar": Jb}
    return gen


def _once(world, *roles):
    yield {}


# shared helpers ----------------------------------------------------------------------

def _intersection_of_supersets(N: Analysis, P: int, kind: str) -> bool:
    family = [Q for Q in _factor_pool(N, kind) if is_subset(P, Q)]
    if not family:
        return False
    meet = N.full
    for Q in family:
        meet &= Q
    return meet == P


def _sums_of_principals(N: Analysis, world: World):
    """Distinct <y> + <z> over all y, z, with index table and x*A masks."""
    key = ("sums", id(N))
    hit = world.memo.get(key)
    if hit is not None:
        return hit
    from .ideals import ideal_closure_mask
    from .core import mask_from_array

    n = N.order
    prin = [N.principal(y) for y in range(n)]
    distinct_p = sorted(set(prin))
    pair_sum = {}
    for a in distinct_p:
        for b in distinct_p:
            pair_sum[(a, b)] = ideal_closure_mask(N.ring, a | b)
    sums = sorted(set(pair_sum.values()))
    sidx = {s: i for i, s in enumerate(sums)}
    table = np.array([[sidx[pair_sum[(prin[y], prin[z])]] for z in range(n)] for y in range(n)], dtype=np.int64)
    xA = np.array([[mask_from_array(N.ring.mul[x, elements_of(s)]) for s in sums] for x in range(n)],
                  dtype=np.uint64)
    hit = (sums, table, xA)
    world.memo[key] = hit
    return hit


def _elementwise_conditions(world: World, N: Analysis, P: int, floor: int) -> dict[int, bool]:
    """The three element-level characterisations, relative to ``floor``.

    floor = {0} gives the weakly prime version; floor = P*P the almost prime one.
    (1) x(<y>+<z>) inside P but not inside floor forces x in P or y, z in P;
    (2) for x outside P: (P : <x>+<y>) = P union (floor : <x>+<y>);
    (3) for x outside P: (P : <x>+<y>) is P or (floor : <x>+<y>).
    Using y, z in P  <=>  <y>+<z> inside P, each sum is handled once.
    """
    key = ("elem", id(N), P, floor)
    hit = world.memo.get(key)
    if hit is not None:
        return hit
    sums, table, xA = _sums_of_principals(N, world)
    n = N.order
    p, f = np.uint64(P), np.uint64(floor)
    in_P = np.array([bool(P >> x & 1) for x in range(n)])
    sum_in_P = np.array([is_subset(s, P) for s in sums])
    inside = (xA & ~p) == 0
    above = (xA & ~f) != 0
    trigger = inside & above
    ok1 = bool(np.all(~trigger | in_P[:, None] | sum_in_P[None, :]))

    def res(target):
        return [sum(1 << x for x in range(n) if (int(xA[x, j]) & ~target) == 0) for j in range(len(sums))]

    res_P, res_F = res(P), res(floor)
    used = sorted({int(j) for x in range(n) if not in_P[x] for j in table[x]})
    ok2 = all(res_P[j] == (P | res_F[j]) for j in used)
    ok3 = all(res_P[j] in (P, res_F[j]) for j in used)
    hit = {1: ok1, 2: ok2, 3: ok3}
    world.memo[key] = hit
    return hit


def _lattice_conditions(N: Analysis, P: int, floor_of) -> dict[int, bool]:
    """(2) strict over-ideals and (3) non-contained ideals: IJ inside floor or IJ not inside P."""
    dom = np.array(N.domain_ideals, dtype=np.uint64)
    mat = N.product_matrix
    p = np.uint64(P)
    fl = np.uint64(floor_of)
    escape = ((mat & ~fl) == 0) | ((mat & ~p) != 0)
    over = ((dom & ~p) != 0) & ((p & ~dom) == 0)
    outside = (dom & ~p) != 0
    ok2 = bool(np.all(escape[np.ix_(over, over)]))
    ok3 = bool(np.all(escape[np.ix_(outside, outside)]))
    return {2: ok2, 3: ok3}


def _verdict_kind(an: Analysis, P: int, kind: str) -> bool:
    return {"prime": an.prime, "weakly": an.weakly, "almost": an.almost}[kind](P)


# ---------------------------------------------------------------------------------
# weakly prime results

@claim("C-2.T1", "structure", "weakly prime but not prime implies P*P = {0}", each_structure(_graded_P))
def _t1(w, r, p):
    N, P = r["N"], p["P"]
    return N.weakly(P) and not N.prime(P), N.sq(P) == N.zero


@claim("C-2.C1", "structure", "if P*P != {0} then prime <=> weakly prime", each_structure(_graded_P))
def _c1(w, r, p):
    N, P = r["N"], p["P"]
    return N.sq(P) != N.zero, N.prime(P) == N.weakly(P)


@claim("C-2.P1", "structure", "weakly prime with ({0} : P) inside P implies prime", each_structure(_graded_P))
def _p1(w, r, p):
    N, P = r["N"], p["P"]
    return N.weakly(P) and is_subset(N.residual(N.zero, P), P), N.prime(P)


def _t2_hyp(N, P, I, J):
    return (N.weakly(P) and N.prod(I, J) == N.zero
            and not is_subset(I, P) and not is_subset(J, P))


@claim("C-2.T2", "structure", "P weakly prime, IJ = {0}, I and J not inside P imply IP = PJ",
       each_structure(_weakly_P_pairs))
def _t2(w, r, p):
    N, P, I, J = r["N"], p["P"], p["I"], p["J"]
    return _t2_hyp(N, P, I, J), N.prod(I, P) == N.prod(P, J)


@claim("C-2.T2.zero", "structure", "same hypothesis as C-2.T2; conclusion IP = PJ = {0}",
       each_structure(_weakly_P_pairs))
def _t2_zero(w, r, p):
    N, P, I, J = r["N"], p["P"], p["I"], p["J"]
    return _t2_hyp(N, P, I, J), N.prod(I, P) == N.zero and N.prod(P, J) == N.zero


@claim("C-2.L1", "structure", "graded ideals with P = I union J have P = I or P = J",
       each_structure(_graded_triples))
def _l1(w, r, p):
    P, I, J = p["P"], p["I"], p["J"]
    return P == I | J, P == I or P == J


def _elem_claim(cid, floor_kind, a, b):
    kind = "weakly" if floor_kind == "zero" else "almost"
    text = {1: "element condition", 2: "residual union", 3: "residual dichotomy", 4: f"{kind} prime"}

    def ev(w, r, p):
        N, P = r["N"], p["P"]
        floor = N.zero if floor_kind == "zero" else N.sq(P)
        conds = _elementwise_conditions(w, N, P, floor)
        conds[4] = _verdict_kind(N, P, kind)
        return conds[a], conds[b]

    REGISTRY[cid] = Claim(cid, "structure", f"{text[a]} implies {text[b]}", each_structure(_graded_P), ev)


for _a, _b in ((1, 2), (2, 3), (3, 4), (4, 1)):
    _elem_claim(f"C-2.P2.{_a}-{_b}", "zero", _a, _b)


def _lattice_claim(cid, kind, a, b):
    text = {1: f"{kind} prime", 2: "strict over-ideal condition", 3: "non-contained ideal condition"}

    def ev(w, r, p):
        N, P = r["N"], p["P"]
        floor = N.zero if kind == "weakly" else N.sq(P)
        conds = _lattice_conditions(N, P, floor)
        conds[1] = _verdict_kind(N, P, kind)
        return conds[a], conds[b]

    REGISTRY[cid] = Claim(cid, "structure", f"{text[a]} implies {text[b]}", each_structure(_graded_P), ev)


for _a, _b in ((1, 2), (2, 3), (3, 1)):
    _lattice_claim(f"C-2.T3.{_a}-{_b}", "weakly", _a, _b)


def _chain_ev(kind):
    def ev(w, r, p):
        N, chain = r["N"], p["chain"]
        ordered = all(is_subset(a, b) for a, b in zip(chain, chain[1:]))
        hyp = ordered and all(_verdict_kind(N, Q, kind) for Q in chain)
        meet = N.full
        for Q in chain:
            meet &= Q
        return hyp, meet in set(N.graded) and _verdict_kind(N, meet, kind)
    return ev


REGISTRY["C-2.P3"] = Claim("C-2.P3", "structure", "intersection of a chain of weakly primes is weakly prime",
                           each_structure(_chains("weakly")), _chain_ev("weakly"))


@claim("C-2.P4", "structure", "P an intersection of weakly primes and {0} != I*I inside P imply I inside P",
       each_structure(_graded_PI))
def _p4(w, r, p):
    N, P, I = r["N"], p["P"], p["I"]
    sq = N.prod(I, I)
    return (_intersection_of_supersets(N, P, "weakly") and sq != N.zero and is_subset(sq, P)), is_subset(I, P)


def _hom_of(r, p) -> GradedHom:
    return check_hom(r["A"].gnr, r["B"].gnr, p["map"])


def _hom_pairs(world, A, B, h):
    for I in B.graded:
        for J in B.graded:
            yield {"I": I, "J": J}


def _hom_P(world, A, B, h):
    for P in A.graded:
        yield {"P": P}


def _hom_triples(world, A, B, h):
    g = B.graded
    for P in g:
        for I in g:
            for J in g:
                yield {"P": P, "I": I, "J": J}


@claim("C-2.L2", "hom", "for ideals I, J of the target: IJ != {0} implies h^-1(I) h^-1(J) != {0}",
       each_hom(_hom_pairs))
def _l2(w, r, p):
    A, B, h = r["A"], r["B"], _hom_of(r, p)
    I, J = p["I"], p["J"]
    return B.prod(I, J) != B.zero, A.prod(h.preimage(I), h.preimage(J)) != A.zero


def _image_claim(kind):
    def ev(w, r, p):
        A, B, h = r["A"], r["B"], _hom_of(r, p)
        P = p["P"]
        hyp = _verdict_kind(A, P, kind) and is_subset(h.kernel, P)
        img = h.image(P)
        return hyp, img in set(B.graded) and _verdict_kind(B, img, kind)
    return ev


REGISTRY["C-2.T4"] = Claim("C-2.T4", "hom", "image of a weakly prime containing the kernel is weakly prime",
                           each_hom(_hom_P), _image_claim("weakly"))


def _quotient_image(kind):
    def ev(w, r, p):
        N, I, P = r["N"], p["I"], p["P"]
        hyp = is_subset(I, P) and _verdict_kind(N, P, kind)
        try:
            Q, pi = w.quotient(N, I)
        except InducedGradingInvalid as exc:
            raise Skip(str(exc)) from exc
        img = pi.image(P)
        return hyp, img in set(Q.graded) and _verdict_kind(Q, img, kind)
    return ev


REGISTRY["C-2.T5"] = Claim("C-2.T5", "structure", "canonical image of a weakly prime P in N/I (I inside P) is weakly prime",
                           each_structure(_quotient_pairs("weakly")), _quotient_image("weakly"))


def _lifted_dichotomy(kind):
    def ev(w, r, p):
        N, P = r["N"], p["P"]
        try:
            Q, pi = w.quotient(N, P)
        except InducedGradingInvalid as exc:
            raise Skip(str(exc)) from exc
        Ib, Jb = p["Ibar"], p["Jbar"]
        hyp = _verdict_kind(N, P, kind) and Jb != Q.zero and Q.prod(Ib, Jb) == Q.zero
        I, J = pi.preimage(Ib), pi.preimage(Jb)
        floor = N.zero if kind == "weakly" else N.sq(P)
        return hyp, is_subset(I, P) or is_subset(N.prod(P, J), floor)
    return ev


REGISTRY["C-2.L3"] = Claim("C-2.L3", "structure", "in N/P with P weakly prime: IJ = 0 with J != 0 gives I inside P or PJ = {0}",
                           each_structure(_over_quotient("weakly")), _lifted_dichotomy("weakly"))


@claim("C-2.T6", "structure", "P weakly prime with P*P = {0} and I*I inside P imply I*I = {0}",
       each_structure(_graded_PI))
def _t6(w, r, p):
    N, P, I = r["N"], p["P"], p["I"]
    sq = N.prod(I, I)
    return N.weakly(P) and N.prod(P, P) == N.zero and is_subset(sq, P), sq == N.zero


def _cylinder_P(world, N, M, NM):
    for P in N.graded:
        yield {"P": P}


def _cylinder(kind):
    def ev(w, r, p):
        N, M, NM = r["N"], r["M"], r["NxM"]
        P = p["P"]
        cyl = rect_mask(P, M.full, M.order)
        return True, _verdict_kind(N, P, kind) == _verdict_kind(NM, cyl, kind)
    return ev


REGISTRY["C-2.T7"] = Claim("C-2.T7", "product", "P weakly prime in N <=> P x M weakly prime in N x M",
                           each_product(_cylinder_P), _cylinder("weakly"))


def _factor_claim(kind):
    def ev(w, r, p):
        N, M, NM = r["N"], r["M"], r["NxM"]
        L = w.config.factor_max_len
        hyp = _all_factor(N, kind, L) and _all_factor(M, kind, L)
        return hyp, _all_factor(NM, kind, 2 * L)
    return ev


REGISTRY["C-2.C2"] = Claim("C-2.C2", "product",
                           "every graded ideal of N and M a product of weakly primes => same for N x M",
                           each_product(lambda w, N, M, NM: iter([{}])), _factor_claim("weakly"))


def _product_ideals(world, N, M, NM):
    for P in NM.graded:
        yield {"P": P}


def _catalog_claim(second_kind):
    def ev(w, r, p):
        N, M, NM = r["N"], r["M"], r["NxM"]
        P = p["P"]
        split = split_mask(P, M.order)
        form = False
        if split is not None:
            a, b = split
            if b == M.full and a in set(N.graded) and N.weakly(a):
                form = True
            if a == N.full and b in set(M.graded) and _verdict_kind(M, b, second_kind):
                form = True
        return True, NM.weakly(P) == form
    return ev


REGISTRY["C-2.T8.weakly"] = Claim(
    "C-2.T8.weakly", "product",
    "weakly primes of N x M are exactly I x M (I weakly prime) and N x J (J weakly prime)",
    each_product(_product_ideals), _catalog_claim("weakly"))
REGISTRY["C-2.T8.prime"] = Claim(
    "C-2.T8.prime", "product",
    "weakly primes of N x M are exactly I x M (I weakly prime) and N x J (J prime)",
    each_product(_product_ideals), _catalog_claim("prime"))


@claim("C-2.T9", "product", "{0} x {0} is weakly prime in N x M", each_product(lambda w, N, M, NM: iter([{}])))
def _t9(w, r, p):
    NM = r["NxM"]
    return True, NM.weakly(NM.zero)


@claim("C-2.P5", "structure", "union of two weakly primes is a graded ideal and weakly prime",
       each_structure(_pairs_of("weakly")))
def _p5(w, r, p):
    N, P, I = r["N"], p["P"], p["I"]
    U = P | I
    return N.weakly(P) and N.weakly(I), U in set(N.graded) and N.weakly(U)


# ---------------------------------------------------------------------------------
# almost prime results

@claim("C-3.T10", "structure", "weakly prime implies almost prime", each_structure(_graded_P))
def _t10(w, r, p):
    N, P = r["N"], p["P"]
    return N.weakly(P), N.almost(P)


@claim("C-3.P6", "structure", "almost prime with (P*P : P) inside P implies prime", each_structure(_graded_P))
def _p6(w, r, p):
    N, P = r["N"], p["P"]
    return N.almost(P) and is_subset(N.residual(N.sq(P), P), P), N.prime(P)


for _a, _b in ((1, 2), (2, 3), (3, 4), (4, 1)):
    _elem_claim(f"C-3.T11.{_a}-{_b}", "square", _a, _b)

for _a, _b in ((1, 2), (2, 3), (3, 1)):
    _lattice_claim(f"C-3.T12.{_a}-{_b}", "almost", _a, _b)

REGISTRY["C-3.P7"] = Claim("C-3.P7", "structure", "intersection of a chain of almost primes is almost prime",
                           each_structure(_chains("almost")), _chain_ev("almost"))


@claim("C-3.P8", "structure",
       "P an intersection of almost primes, I*I inside P but not inside P*P imply I inside P",
       each_structure(_graded_PI))
def _p8(w, r, p):
    N, P, I = r["N"], p["P"], p["I"]
    sq = N.prod(I, I)
    hyp = _intersection_of_supersets(N, P, "almost") and is_subset(sq, P) and not is_subset(sq, N.sq(P))
    return hyp, is_subset(I, P)


@claim("C-3.L4", "hom", "for ideals P, I, J of the target: IJ not inside P implies h^-1(I)h^-1(J) not inside h^-1(P)",
       each_hom(_hom_triples))
def _l4(w, r, p):
    A, B, h = r["A"], r["B"], _hom_of(r, p)
    P, I, J = p["P"], p["I"], p["J"]
    return (not is_subset(B.prod(I, J), P),
            not is_subset(A.prod(h.preimage(I), h.preimage(J)), h.preimage(P)))


REGISTRY["C-3.T13"] = Claim("C-3.T13", "hom", "image of an almost prime containing the kernel is almost prime",
                            each_hom(_hom_P), _image_claim("almost"))
REGISTRY["C-3.T14"] = Claim("C-3.T14", "structure", "canonical image of an almost prime P in N/I (I inside P) is almost prime",
                            each_structure(_quotient_pairs("almost")), _quotient_image("almost"))
REGISTRY["C-3.L5"] = Claim("C-3.L5", "structure",
                           "in N/P with P almost prime: IJ = 0 with J != 0 gives I inside P or PJ inside P*P",
                           each_structure(_over_quotient("almost")), _lifted_dichotomy("almost"))


@claim("C-3.T15", "structure", "P almost prime and I*I inside P imply I*I inside P*P", each_structure(_graded_PI))
def _t15(w, r, p):
    N, P, I = r["N"], p["P"], p["I"]
    sq = N.prod(I, I)
    return N.almost(P) and is_subset(sq, P), is_subset(sq, N.sq(P))


def _unique_maximal(w: World, N: Analysis):
    mx = N.maximal_ideals(graded_only=w.config.graded_maximal)
    return mx[0] if len(mx) == 1 else None


def _t16(proper):
    def ev(w, r, p):
        N, P = r["N"], p["P"]
        M = _unique_maximal(w, N)
        if M is None:
            return False, True
        msq = N.sq(M)
        hyp = N.prod(M, M) == msq and is_subset(msq, P) and (not proper or P != N.full)
        return hyp, N.almost(P) == (msq == N.sq(P))
    return ev


REGISTRY["C-3.T16"] = Claim("C-3.T16", "structure",
                            "unique maximal M with MM = M*M: for graded P containing M*M, almost prime <=> M*M = P*P",
                            each_structure(_graded_P), _t16(False))
REGISTRY["C-3.T16.proper"] = Claim("C-3.T16.proper", "structure", "as C-3.T16 with P restricted to proper ideals",
                                   each_structure(_graded_P), _t16(True))
REGISTRY["C-3.T17"] = Claim("C-3.T17", "product", "P almost prime in N <=> P x M almost prime in N x M",
                            each_product(_cylinder_P), _cylinder("almost"))
REGISTRY["C-3.C3"] = Claim("C-3.C3", "product",
                           "every graded ideal of N and M a product of almost primes => same for N x M",
                           each_product(lambda w, N, M, NM: iter([{}])), _factor_claim("almost"))


def claim_ids() -> list[str]:
    return sorted(REGISTRY)


def select_claims(spec: str | list[str] | None) -> list[str]:
    """'all', exact ids, or group prefixes such as 'C-2.P2'."""
    if spec is None or spec == "all" or spec == ["all"]:
        return claim_ids()
    wanted = spec.split(",") if isinstance(spec, str) else list(spec)
    out = []
    for w in (s.strip() for s in wanted):
        if not w:
            continue
        if w == "all":
            return claim_ids()
        hits = [c for c in claim_ids() if c == w or c.startswith(w + ".")]
        if not hits:
            raise UnknownClaim(w)
        out.extend(h for h in hits if h not in out)
    return sorted(out)


# ---------------------------------------------------------------------------------
# corpus & sweep

class Corpus:
    def __init__(self, entries: list[Entry], hom_sources: list[str] | None = None):
        self.entries = list(entries)
        self.by_name = {e.name: e for e in self.entries}
        self.hom_sources = hom_sources
        self._homs = None

    def product_triples(self) -> list[tuple[str, str, str]]:
        out = []
        for e in self.entries:
            if e.factors and all(f in self.by_name for f in e.factors):
                out.append((e.factors[0], e.factors[1], e.name))
        return out

    def homs(self, world: World) -> list[GradedHom]:
        """Surjective graded homs between small members, plus every canonical epimorphism."""
        if self._homs is not None:
            return self._homs
        from .constructions import enumerate_surjective_homs

        cap = world.config.hom_cap
        names = self.hom_sources if self.hom_sources is not None else [e.name for e in self.entries]
        small = [self.by_name[n].gnr for n in names if n in self.by_name and self.by_name[n].gnr.order <= cap]
        homs, seen = [], set()

        def add(h):
            key = (h.source.key, h.target.key, h.map)
            if key not in seen:
                seen.add(key)
                homs.append(h)

        for A in small:
            for B in small:
                for h in enumerate_surjective_homs(A, B, cap):
                    add(h)
        for e in self.entries:
            N = world.analysis(e.gnr)
            for I in N.graded:
                try:
                    _, pi = world.quotient(N, I)
                except InducedGradingInvalid:
                    continue
                add(GradedHom(e.gnr, pi.target, pi.map))
        self._homs = homs
        return homs


@dataclass
class ClaimResult:
    claim_id: str
    statement: str
    instances_checked: int = 0
    nonvacuous: int = 0
    skipped: int = 0
    falsified_count: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return FALSIFIED if self.falsified_count else VERIFIED

    def to_record(self) -> dict:
        return {
            "type": "claim",
            "claim_id": self.claim_id,
            "statement": self.statement,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "nonvacuous": self.nonvacuous,
            "skipped": self.skipped,
            "falsified_instances": self.falsified_count,
            "counterexamples": self.counterexamples,
        }


def serialize_instance(claim_obj: Claim, roles: dict[str, Analysis], params: dict) -> dict:
    keep = ("N", "M") if claim_obj.shape == "product" else tuple(roles)
    readable = {}
    for k, v in params.items():
        if k == "map":
            continue
        if isinstance(v, list):
            readable[k] = [elements_of(x) for x in v]
        elif isinstance(v, int):
            readable[k] = elements_of(v)
    return {
        "claim_id": claim_obj.id,
        "structures": {role: structure_to_dict(roles[role].gnr) for role in keep},
        "params": params,
        "readable": readable,
    }


def check_claim(claim_id: str, corpus: Corpus, world: World | None = None) -> ClaimResult:
    if claim_id not in REGISTRY:
        raise UnknownClaim(claim_id)
    world = world or World()
    c = REGISTRY[claim_id]
    result = ClaimResult(claim_id, c.statement)
    cap = world.config.cap
    for roles, params in c.instances(world, corpus):
        try:
            hyp, concl = c.evaluate(world, roles, params)
        except Skip:
            result.skipped += 1
            continue
        result.instances_checked += 1
        if hyp:
            result.nonvacuous += 1
            if not concl:
                result.falsified_count += 1
                if cap is None or len(result.counterexamples) < cap:
                    result.counterexamples.append(serialize_instance(c, roles, params))
    return result


def check_all(corpus: Corpus, world: World | None = None, claims: list[str] | None = None) -> list[ClaimResult]:
    world = world or World()
    return [check_claim(cid, corpus, world) for cid in (claims or claim_ids())]


def replay(record: dict, config: Config | None = None) -> bool:
    """Rebuild a counterexample from its serialized form; True if it still refutes."""
    c = REGISTRY[record["claim_id"]]
    world = World(config or Config())
    roles = {role: world.analysis(structure_from_dict(d).gnr) for role, d in record["structures"].items()}
    if c.shape == "product":
        roles["NxM"] = world.product(roles["N"], roles["M"])
    try:
        hyp, concl = c.evaluate(world, roles, record["params"])
    except Skip:
        return False
    return bool(hyp and not concl)
