"""Deterministic JSON-lines reports and the golden facts recomputed on every sweep."""

from __future__ import annotations

import json

from . import __version__
from .builders import builder_cyclic
from .claims import Corpus, check_claim, select_claims
from .classification import classify_all
from .constructions import check_hom, product_catalog_discrepancies, quotient
from .core import elements_of, mask_of
from .io import Entry, structure_hash
from .world import Config, World


def _m(*xs) -> int:
    return mask_of(xs)


def golden_facts(world: World | None = None) -> list[dict]:
    """Each record carries the expected and observed value; ``ok`` compares them."""
    world = world or World()
    out = []

    def fact(fid, expected, observed):
        out.append({"type": "golden", "id": fid, "expected": expected, "observed": observed,
                    "ok": expected == observed})

    z12 = world.analysis(builder_cyclic(12))
    for P in (_m(0), _m(0, 2, 4, 6, 8, 10), _m(0, 3, 6, 9)):
        fact(f"z12.weakly{elements_of(P)}", True, z12.weakly(P))
    fact("z12.almost_not_weakly[0, 4, 8]", [True, False], [z12.almost(_m(0, 4, 8)), z12.weakly(_m(0, 4, 8))])
    fact("z12.neither[0, 6]", [False, False], [z12.almost(_m(0, 6)), z12.weakly(_m(0, 6))])
    fact("z12.zero_not_prime", False, z12.prime(_m(0)))
    fact("z12.square_zero_not_weakly[0, 6]", [[0], False], [elements_of(z12.sq(_m(0, 6))), z12.weakly(_m(0, 6))])

    z8, z4 = builder_cyclic(8), builder_cyclic(4)
    h = check_hom(z8, z4, [x % 4 for x in range(8)])
    a8, a4 = world.analysis(z8), world.analysis(z4)
    pre = h.preimage(_m(0))
    fact("z8_to_z4.preimage_of_zero", [True, [0, 4], False], [a4.weakly(_m(0)), elements_of(pre), a8.weakly(pre)])

    z18 = world.analysis(builder_cyclic(18))
    I = _m(0, 9)
    Q, pi = world.quotient(z18, I)
    img = pi.image(I)
    fact("z18_mod_0-9.image_weakly", [[0], True, 9], [elements_of(img), Q.weakly(img), Q.order])
    fact("z18.ideal_0-9_not_weakly", False, z18.weakly(I))

    z16 = world.analysis(builder_cyclic(16))
    M = _m(*range(0, 16, 2))
    fact("z16.unique_maximal", [[list(range(0, 16, 2))], [list(range(0, 16, 2))]],
         [[elements_of(m) for m in z16.maximal_ideals()], [elements_of(m) for m in z16.maximal_ideals(True)]])
    fact("z16.MM_equals_square", [[0, 4, 8, 12], [0, 4, 8, 12]],
         [elements_of(z16.prod(M, M)), elements_of(z16.sq(M))])
    return out


def structure_record(world: World, corpus: Corpus, entry: Entry) -> dict:
    an = world.analysis(entry.gnr)
    rec = {
        "type": "structure",
        "name": entry.name,
        "hash": structure_hash(entry.gnr),
        "order": an.order,
        "ideal_count": len(an.all_ideals),
        "graded_ideal_count": len(an.graded),
        "classification": [c.row() for c in classify_all(an, max_order=world.config.max_order)],
    }
    if entry.factors:
        A, B = (corpus.by_name[f].gnr for f in entry.factors)
        rec["factors"] = list(entry.factors)
        rec["catalog_discrepancies"] = [elements_of(S) for S in
                                        product_catalog_discrepancies(A, B, an.graded)]
    return rec


def build_report(entries: list[Entry], config: Config | None = None,
                 claims: list[str] | str | None = "all", hom_sources: list[str] | None = None) -> list[dict]:
    """All records in output order: header, golden facts, structures by name, claims by id."""
    config = config or Config()
    world = World(config)
    corpus = Corpus(entries, hom_sources)
    records = [{"type": "header", "tool": "gradednr", "version": __version__, "config": config.to_dict(),
                "structures": len(entries)}]
    records.extend(golden_facts(world))
    for e in sorted(entries, key=lambda e: e.name):
        records.append(structure_record(world, corpus, e))
    for cid in select_claims(claims):
        records.append(check_claim(cid, corpus, world).to_record())
    return records


def dumps_records(records: list[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n" for r in records)
