"""JSON loading/dumping for lattices, spaces and rings, plus DOT export."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import StructureError
from .poset_core import FiniteLattice, fixture
from .rings import FiniteCommRing, from_tables, ring_product, zmod
from .topology import FiniteSpace, discrete, indiscrete, sierpinski

Structure = Union[FiniteLattice, FiniteSpace, FiniteCommRing]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# ---- lattices --------------------------------------------------------------


def lattice_from_json(d: dict) -> FiniteLattice:
    """``{"elements": [...], "leq": [[x, y], ...]}``; reflexive pairs may be omitted."""
    try:
        elements, leq = d["elements"], d["leq"]
    except KeyError as exc:
        raise StructureError(f"lattice JSON is missing {exc.args[0]!r}") from None
    for p in leq:
        if len(p) != 2:
            raise StructureError(f"leq entry {p!r} is not a pair", tuple(p))
    return FiniteLattice.from_leq(elements, [tuple(p) for p in leq], reflexive=True)


def lattice_to_json(L: FiniteLattice) -> dict:
    els = list(L.elements)
    leq = [[a, b] for a in els for b in els if a != b and L.le(a, b)]
    return {"elements": els, "leq": leq}


# ---- spaces ----------------------------------------------------------------


def space_from_json(d: dict) -> FiniteSpace:
    """``{"points": [...], "opens": [[...], ...]}``; the family is closed under union and intersection."""
    try:
        points, opens = d["points"], d["opens"]
    except KeyError as exc:
        raise StructureError(f"space JSON is missing {exc.args[0]!r}") from None
    known = set(points)
    for u in opens:
        if not set(u) <= known:
            raise StructureError(f"open set {u!r} mentions unknown points", tuple(sorted(set(u) - known)))
    return FiniteSpace.from_basis(points, opens)


def space_to_json(X: FiniteSpace) -> dict:
    rank = {p: i for i, p in enumerate(X.points)}
    return {
        "points": list(X.points),
        "opens": [sorted(u, key=rank.__getitem__) for u in X.sorted_opens()],
    }


# ---- rings -----------------------------------------------------------------


def ring_from_json(d: dict) -> FiniteCommRing:
    try:
        return from_tables(d)
    except KeyError as exc:
        raise StructureError(f"ring JSON is missing {exc.args[0]!r}") from None


def ring_to_json(R: FiniteCommRing) -> dict:
    return R.to_tables()


# ---- dispatch --------------------------------------------------------------


def parse_shorthand(text: str) -> Structure | None:
    """``zmod:12``, ``product:2,3``, ``lattice:B2``, ``space:discrete:3``,
    ``space:indiscrete:2``, ``space:sierpinski``; None if ``text`` is not one."""
    kind, _, arg = text.partition(":")
    if not arg:
        return None
    try:
        if kind == "zmod":
            return zmod(int(arg))
        if kind == "product":
            factors = [int(x) for x in arg.split(",")]
            if len(factors) != 2:
                raise StructureError("product takes exactly two moduli")
            return ring_product(zmod(factors[0]), zmod(factors[1]))
        if kind == "lattice":
            return fixture(arg)
        if kind == "space":
            name, _, n = arg.partition(":")
            if name == "sierpinski":
                return sierpinski()
            if name == "discrete":
                return discrete(int(n))
            if name == "indiscrete":
                return indiscrete(int(n))
            raise StructureError(f"unknown space shorthand {arg!r}")
    except ValueError as exc:
        raise StructureError(str(exc)) from None
    return None


def from_json(d: dict) -> Structure:
    if not isinstance(d, dict):
        raise StructureError("top-level JSON value must be an object")
    if "leq" in d:
        return lattice_from_json(d)
    if "opens" in d:
        return space_from_json(d)
    if "add" in d or "mul" in d:
        return ring_from_json(d)
    raise StructureError("cannot tell whether the JSON describes a lattice, a space or a ring")


def to_json(obj: Structure) -> dict:
    if isinstance(obj, FiniteLattice):
        return lattice_to_json(obj)
    if isinstance(obj, FiniteSpace):
        return space_to_json(obj)
    return ring_to_json(obj)


def load(source: str) -> Structure:
    """Load from a shorthand or a JSON file path."""
    obj = parse_shorthand(source)
    if obj is not None:
        return obj
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise StructureError(f"cannot read {source}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON in {source}: {exc.msg} at line {exc.lineno}") from None
    return from_json(data)


# ---- DOT -------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def lattice_to_dot(L: FiniteLattice, name: str = "lattice") -> str:
    """Hasse diagram, bottom at the bottom."""
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    lines += [f"  {_q(x)};" for x in L.elements]
    lines += [f"  {_q(a)} -> {_q(b)} [arrowhead=none];" for a, b in L.poset.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def space_to_dot(X: FiniteSpace, name: str = "space") -> str:
    """Specialization order: an edge x -> y when x lies in the closure of y, drawn as covers."""
    pts = list(X.points)
    below = {(x, y) for x in pts for y in pts if x != y and x in X.closure({y})}
    covers = sorted(
        (x, y) for (x, y) in below if not any((x, z) in below and (z, y) in below for z in pts if z not in (x, y))
    )
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
    lines += [f"  {_q(p)};" for p in pts]
    lines += [f"  {_q(x)} -> {_q(y)} [arrowhead=none];" for x, y in covers]
    lines.append("}")
    return "\n".join(lines) + "\n"
