"""JSON structure files.

Schema::

    {"name": str, "order": n,
     "add": [[...]], "mul": [[...]],
     "monoid": {"order": k, "table": [[...]], "identity": e},
     "grading": {"0": [elements], "1": [...], ...},
     "factors": [name, name]}            # optional, marks a direct product

Without "monoid" the trivial one-element monoid is used; a missing grading
key means the zero subgroup in that degree. Element 0 must be the additive
zero; other files are renumbered (with a warning) by swapping the zero into
position 0.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .core import elements_of, mask_of, trivial_monoid, validate_monoid, validate_nearring
from .errors import ParseError
from .grading import GradedNearRing, validate_grading

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Entry:
    """A corpus member: a structure plus, for products, the names of its factors."""

    gnr: GradedNearRing
    factors: tuple[str, str] | None = None

    @property
    def name(self) -> str:
        return self.gnr.name


def structure_to_dict(gnr: GradedNearRing, factors=None) -> dict:
    d = {
        "name": gnr.name,
        "order": gnr.order,
        "add": gnr.ring.add.tolist(),
        "mul": gnr.ring.mul.tolist(),
        "monoid": gnr.monoid.to_dict(),
        "grading": {str(s): elements_of(p) for s, p in enumerate(gnr.parts)},
    }
    if factors:
        d["factors"] = list(factors)
    return d


def structure_hash(gnr: GradedNearRing) -> str:
    d = structure_to_dict(gnr)
    d.pop("name")
    blob = json.dumps(d, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _require(d: dict, key: str, kind):
    if key not in d:
        raise ParseError(f"missing field {key!r}")
    if not isinstance(d[key], kind):
        raise ParseError(f"field {key!r} has the wrong type")
    return d[key]


def _find_zero(add) -> int | None:
    n = len(add)
    for e in range(n):
        if all(add[e][x] == x and add[x][e] == x for x in range(n)):
            return e
    return None


def structure_from_dict(d: dict, where: str = "<dict>") -> Entry:
    if not isinstance(d, dict):
        raise ParseError("top level must be an object")
    add = _require(d, "add", list)
    mul = _require(d, "mul", list)
    name = d.get("name", Path(where).stem)
    n = len(add)
    if "order" in d and d["order"] != n:
        raise ParseError(f"order {d['order']} does not match table size {n}")
    for t in (add, mul):
        if len(t) != n or any(not isinstance(row, list) or len(row) != n for row in t):
            raise ParseError("tables must be square and of equal order")
        if any(not isinstance(v, int) or not 0 <= v < n for row in t for v in row):
            raise ParseError("table entries must be integers in range")
    if "monoid" in d:
        m = d["monoid"]
        monoid = validate_monoid(_require(m, "table", list), _require(m, "identity", int))
    else:
        monoid = trivial_monoid()
    grading = d.get("grading")
    if grading is None:
        parts = {monoid.identity: list(range(n))}
    else:
        parts = {int(k): v for k, v in grading.items()}
        if any(not 0 <= k < monoid.order for k in parts):
            raise ParseError("grading key outside the monoid")

    zero = _find_zero(add)
    if zero is not None and zero != 0:
        log.warning("%s: additive zero is element %d; renumbering it to 0", name, zero)
        perm = list(range(n))
        perm[0], perm[zero] = zero, 0
        add = [[perm[add[perm[a]][perm[b]]] for b in range(n)] for a in range(n)]
        mul = [[perm[mul[perm[a]][perm[b]]] for b in range(n)] for a in range(n)]
        parts = {k: [perm[x] for x in v] for k, v in parts.items()}
    ring = validate_nearring(add, mul, 0)
    masks = [mask_of(parts.get(s, [0])) for s in range(monoid.order)]
    gnr = validate_grading(ring, monoid, masks, name)
    factors = d.get("factors")
    return Entry(gnr, tuple(factors) if factors else None)


def loads_structure(text: str, where: str = "<string>") -> Entry:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from exc
    return structure_from_dict(d, where)


def load_entry(path) -> Entry:
    path = Path(path)
    return loads_structure(path.read_text(encoding="utf-8"), str(path))


def load_structure(path) -> GradedNearRing:
    return load_entry(path).gnr


def dumps_structure(gnr: GradedNearRing, factors=None) -> str:
    return json.dumps(structure_to_dict(gnr, factors), indent=1) + "\n"


def save_structure(gnr: GradedNearRing, path, factors=None) -> None:
    Path(path).write_text(dumps_structure(gnr, factors), encoding="utf-8")


def load_monoid(path):
    try:
        d = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from exc
    return validate_monoid(_require(d, "table", list), _require(d, "identity", int))
