"""Finite posets and bounded lattices.

Elements are opaque string ids; all structure lives in explicit tables so that
values serialize exactly and tests never depend on positional encodings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import PreconditionError, StructureError


def set_label(members: Iterable[str], order: Iterable[str] | None = None) -> str:
    """Canonical id for a finite set of ids, e.g. ``{a,b}``."""
    members = list(members)
    if order is not None:
        rank = {x: i for i, x in enumerate(order)}
        members.sort(key=lambda x: rank[x])
    else:
        members.sort()
    return "{" + ",".join(members) + "}"


class FinitePoset:
    """A finite partial order given by its full ``leq`` relation."""

    def __init__(self, elements: Iterable[str], leq: Iterable[tuple[str, str]]):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            dup = next(x for x in elements if elements.count(x) > 1)
            raise StructureError(f"duplicate element id {dup!r}", (dup,))
        known = set(elements)
        pairs = frozenset((a, b) for a, b in leq)
        for a, b in pairs:
            if a not in known or b not in known:
                raise StructureError(f"leq pair ({a!r}, {b!r}) mentions an unknown element", (a, b))
        for x in elements:
            if (x, x) not in pairs:
                raise StructureError(f"leq is not reflexive at {x!r}", (x, x))
        up: dict[str, set[str]] = {x: set() for x in elements}
        down: dict[str, set[str]] = {x: set() for x in elements}
        for a, b in pairs:
            up[a].add(b)
            down[b].add(a)
            if a != b and (b, a) in pairs:
                raise StructureError(f"leq is not antisymmetric: {a!r} and {b!r}", (a, b))
        for a, b in sorted(pairs):
            for c in sorted(up[b]):
                if (a, c) not in pairs:
                    raise StructureError(
                        f"leq is not transitive: {a!r}<={b!r}<={c!r} but not {a!r}<={c!r}", (a, c)
                    )
        self.elements = elements
        self.leq = pairs
        self._rank = {x: i for i, x in enumerate(elements)}
        self._up = {x: frozenset(v) for x, v in up.items()}
        self._down = {x: frozenset(v) for x, v in down.items()}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._rank

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.leq == other.leq

    def __hash__(self) -> int:
        return hash((frozenset(self.elements), self.leq))

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements)"

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def down(self, x: str) -> frozenset[str]:
        return self._down[x]

    def up(self, x: str) -> frozenset[str]:
        return self._up[x]

    def rank(self, x: str) -> int:
        return self._rank[x]

    def sort(self, xs: Iterable[str]) -> list[str]:
        return sorted(xs, key=self._rank.__getitem__)

    def is_downset(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        return all(self._down[x] <= s for x in s)

    def is_upset(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        return all(self._up[x] <= s for x in s)

    def linear_extension(self) -> list[str]:
        # a < b implies |down a| < |down b|
        return sorted(self.elements, key=lambda x: (len(self._down[x]), self._rank[x]))

    def covers(self) -> list[tuple[str, str]]:
        """Pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        out = []
        for a in self.elements:
            above = self._up[a] - {a}
            for b in self.sort(above):
                if not any(c != b and self.le(c, b) for c in above):
                    out.append((a, b))
        return out


def _lub(poset: FinitePoset, a: str, b: str) -> str | None:
    ubs = poset.up(a) & poset.up(b)
    least = [u for u in ubs if ubs <= poset.up(u)]
    return least[0] if least else None


def _glb(poset: FinitePoset, a: str, b: str) -> str | None:
    lbs = poset.down(a) & poset.down(b)
    greatest = [l for l in lbs if lbs <= poset.down(l)]
    return greatest[0] if greatest else None


class FiniteLattice:
    """A bounded finite lattice with explicit meet and join tables.

    ``ambient`` is set on sublattices: their element ids are ids of the
    ambient lattice and the embedding is the identity on ids.
    """

    def __init__(
        self,
        poset: FinitePoset,
        bottom: str,
        top: str,
        meet: Mapping[tuple[str, str], str],
        join: Mapping[tuple[str, str], str],
        ambient: "FiniteLattice | None" = None,
        check: bool = True,
    ):
        self.poset = poset
        self.bottom = bottom
        self.top = top
        self._meet = dict(meet)
        self._join = dict(join)
        self.ambient = ambient
        self._cache: dict = {}
        if check:
            self.validate()

    @classmethod
    def from_poset(cls, poset: FinitePoset, ambient: "FiniteLattice | None" = None) -> "FiniteLattice":
        if len(poset) == 0:
            raise StructureError("a bounded lattice needs at least one element")
        meet, join = {}, {}
        for a in poset.elements:
            for b in poset.elements:
                m, j = _glb(poset, a, b), _lub(poset, a, b)
                if m is None:
                    raise StructureError(f"{a!r} and {b!r} have no greatest lower bound", (a, b))
                if j is None:
                    raise StructureError(f"{a!r} and {b!r} have no least upper bound", (a, b))
                meet[a, b], join[a, b] = m, j
        bottoms = [x for x in poset.elements if poset.up(x) == frozenset(poset.elements)]
        tops = [x for x in poset.elements if poset.down(x) == frozenset(poset.elements)]
        return cls(poset, bottoms[0], tops[0], meet, join, ambient=ambient, check=False)

    @classmethod
    def from_leq(cls, elements: Iterable[str], leq: Iterable[tuple[str, str]], reflexive: bool = False):
        """Build from an order relation; ``reflexive=True`` adds the diagonal."""
        elements = list(elements)
        pairs = {tuple(p) for p in leq}
        if reflexive:
            pairs |= {(x, x) for x in elements}
        return cls.from_poset(FinitePoset(elements, pairs))

    @classmethod
    def from_sets(cls, family: Mapping[str, frozenset]) -> "FiniteLattice":
        """Lattice of labelled sets ordered by inclusion (joins need not be unions)."""
        labels = list(family)
        pairs = [(a, b) for a in labels for b in labels if family[a] <= family[b]]
        return cls.from_poset(FinitePoset(labels, pairs))

    def validate(self) -> None:
        """Check that the tables are the glb/lub of the order; raise StructureError otherwise."""
        p = self.poset
        els = p.elements
        for x in els:
            if not p.le(self.bottom, x):
                raise StructureError(f"bottom {self.bottom!r} is not below {x!r}", (self.bottom, x))
            if not p.le(x, self.top):
                raise StructureError(f"top {self.top!r} is not above {x!r}", (x, self.top))
        for a in els:
            for b in els:
                m = self._meet.get((a, b))
                j = self._join.get((a, b))
                if m not in p or _glb(p, a, b) != m:
                    raise StructureError(f"meet table wrong at ({a!r}, {b!r})", (a, b))
                if j not in p or _lub(p, a, b) != j:
                    raise StructureError(f"join table wrong at ({a!r}, {b!r})", (a, b))

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    def __len__(self) -> int:
        return len(self.poset)

    def __iter__(self) -> Iterator[str]:
        return iter(self.poset.elements)

    def __contains__(self, x) -> bool:
        return x in self.poset

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    def __repr__(self) -> str:
        return f"FiniteLattice({len(self)} elements)"

    def le(self, a: str, b: str) -> bool:
        return self.poset.le(a, b)

    def meet(self, a: str, b: str) -> str:
        return self._meet[a, b]

    def join(self, a: str, b: str) -> str:
        return self._join[a, b]

    def join_all(self, xs: Iterable[str]) -> str:
        out = self.bottom
        for x in xs:
            out = self._join[out, x]
        return out

    def meet_all(self, xs: Iterable[str]) -> str:
        out = self.top
        for x in xs:
            out = self._meet[out, x]
        return out

    def down(self, x: str) -> frozenset[str]:
        return self.poset.down(x)

    def up(self, x: str) -> frozenset[str]:
        return self.poset.up(x)

    def sort(self, xs: Iterable[str]) -> list[str]:
        return self.poset.sort(xs)

    def label(self, xs: Iterable[str]) -> str:
        return set_label(xs, self.elements)

    def cached(self, key, compute):
        """Memoize a derived value on this (immutable) lattice."""
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def join_irreducibles(self) -> list[str]:
        out = []
        for x in self.elements:
            if x == self.bottom:
                continue
            below = self.down(x) - {x}
            if self.join_all(below) != x:
                out.append(x)
        return out


def is_distributive(L: FiniteLattice) -> bool:
    L.validate()
    els = L.elements
    for a, b, c in itertools.product(els, repeat=3):
        if L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)):
            return False
    return True


def downsets(poset: FinitePoset) -> Iterator[frozenset[str]]:
    """All down-closed subsets, in a deterministic order."""
    order = poset.linear_extension()

    def rec(i: int, chosen: frozenset[str]) -> Iterator[frozenset[str]]:
        if i == len(order):
            yield chosen
            return
        x = order[i]
        yield from rec(i + 1, chosen)
        if poset.down(x) - {x} <= chosen:
            yield from rec(i + 1, chosen | {x})

    yield from rec(0, frozenset())


def downset_lattice(P: FinitePoset) -> FiniteLattice:
    family = {set_label(d, P.elements): d for d in downsets(P)}
    return FiniteLattice.from_sets(family)


def sublattice_closure(L: FiniteLattice, S: Iterable[str]) -> FiniteLattice:
    """Smallest bounded sublattice of ``L`` containing ``S``; shares ids with ``L``."""
    current = set(S) | {L.bottom, L.top}
    for x in current:
        if x not in L:
            raise PreconditionError(f"{x!r} is not an element of the lattice", (x,))
    frontier = set(current)
    while frontier:
        new = set()
        for a in frontier:
            for b in current:
                for c in (L.meet(a, b), L.join(a, b)):
                    if c not in current:
                        new.add(c)
        current |= new
        frontier = new
    els = L.sort(current)
    poset = FinitePoset(els, [(a, b) for a in els for b in els if L.le(a, b)])
    meet = {(a, b): L.meet(a, b) for a in els for b in els}
    join = {(a, b): L.join(a, b) for a in els for b in els}
    return FiniteLattice(poset, L.bottom, L.top, meet, join, ambient=L, check=False)


def bounded_sublattices(L: FiniteLattice) -> list[FiniteLattice]:
    """Every bounded sublattice of ``L``, ordered by size then element ranks."""
    start = sublattice_closure(L, [])
    seen = {frozenset(start.elements): start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            for x in L.elements:
                if x in S:
                    continue
                T = sublattice_closure(L, list(S.elements) + [x])
                key = frozenset(T.elements)
                if key not in seen:
                    seen[key] = T
                    nxt.append(T)
        frontier = nxt
    rank = L.poset.rank
    return sorted(seen.values(), key=lambda T: (len(T), [rank(x) for x in T.elements]))


@dataclass(frozen=True, eq=False)
class LatticeHom:
    source: FiniteLattice
    target: FiniteLattice
    mapping: Mapping[str, str]

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def preimage(self, s: Iterable[str]) -> frozenset[str]:
        s = frozenset(s)
        return frozenset(x for x in self.source.elements if self.mapping[x] in s)


def is_lattice_hom(f: LatticeHom) -> bool:
    src, tgt = f.source, f.target
    for x in src.elements:
        if x not in f.mapping:
            raise StructureError(f"map is undefined at {x!r}", (x,))
        if f.mapping[x] not in tgt:
            raise StructureError(f"{x!r} is sent outside the codomain", (x, f.mapping[x]))
    if f.mapping[src.bottom] != tgt.bottom or f.mapping[src.top] != tgt.top:
        return False
    m = f.mapping
    for a in src.elements:
        for b in src.elements:
            if m[src.meet(a, b)] != tgt.meet(m[a], m[b]):
                return False
            if m[src.join(a, b)] != tgt.join(m[a], m[b]):
                return False
    return True


def lattice_homs(D: FiniteLattice, E: FiniteLattice) -> list[LatticeHom]:
    """All bounded-lattice homomorphisms ``D -> E``.

    A homomorphism preserves joins and every element is the join of the
    join-irreducibles below it, so it suffices to range over images of those.
    """
    irr = D.join_irreducibles()
    out = []
    for images in itertools.product(E.elements, repeat=len(irr)):
        img = dict(zip(irr, images))
        mapping = {x: E.join_all(img[j] for j in irr if D.le(j, x)) for x in D.elements}
        f = LatticeHom(D, E, mapping)
        if is_lattice_hom(f):
            out.append(f)
    return out


def _invariants(L: FiniteLattice) -> dict[str, tuple]:
    base = {x: (len(L.down(x)), len(L.up(x))) for x in L.elements}
    # one refinement round over neighbourhood multisets
    return {
        x: (base[x], tuple(sorted(base[y] for y in L.down(x))), tuple(sorted(base[y] for y in L.up(x))))
        for x in L.elements
    }


def find_isomorphism(L1: FiniteLattice, L2: FiniteLattice) -> dict[str, str] | None:
    """An order isomorphism ``L1 -> L2`` (hence a lattice isomorphism), or None."""
    if len(L1) != len(L2):
        return None
    inv1, inv2 = _invariants(L1), _invariants(L2)
    if sorted(inv1.values()) != sorted(inv2.values()):
        return None
    order = L1.poset.linear_extension()
    cands = {x: [y for y in L2.elements if inv2[y] == inv1[x]] for x in order}
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in cands[x]:
            if y in used:
                continue
            if all(L1.le(z, x) == L2.le(mapping[z], y) and L1.le(x, z) == L2.le(y, mapping[z]) for z in mapping):
                mapping[x] = y
                used.add(y)
                if rec(i + 1):
                    return True
                del mapping[x]
                used.discard(y)
        return False

    return dict(mapping) if rec(0) else None


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    return find_isomorphism(L1, L2) is not None


def canonical_form(L: FiniteLattice) -> tuple:
    """Isomorphism-invariant code: the least order matrix over invariant-respecting relabelings."""
    if len(L) > 8:
        raise PreconditionError("canonical_form enumerates permutations; use at most 8 elements")
    inv = _invariants(L)
    classes: dict[tuple, list[str]] = {}
    for x in L.elements:
        classes.setdefault(inv[x], []).append(x)
    keys = sorted(classes)
    best = None
    for perms in itertools.product(*(itertools.permutations(classes[k]) for k in keys)):
        order = [x for p in perms for x in p]
        code = tuple(L.le(a, b) for a in order for b in order)
        if best is None or code < best:
            best = code
    return (tuple(keys), best)


# ---- fixtures ------------------------------------------------------------


def chain(n: int) -> FiniteLattice:
    """The n-element chain; C1 is the one-element lattice (0 = 1)."""
    if n < 1:
        raise PreconditionError("a chain needs at least one element")
    if n == 1:
        els = ["0"]
    elif n == 3:
        els = ["0", "m", "1"]
    else:
        els = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    return FiniteLattice.from_leq(els, [(a, b) for i, a in enumerate(els) for b in els[i:]])


def boolean(k: int) -> FiniteLattice:
    """Boolean lattice on atoms a, b, c, ...; elements named by atom strings, with 0 and 1."""
    atoms = "abcdefgh"[:k]
    subsets = [c for r in range(k + 1) for c in itertools.combinations(atoms, r)]

    def name(s):
        if len(s) == 0:
            return "0"
        if len(s) == k:
            return "1"
        return "".join(s)

    if k == 0:
        return chain(1)
    family = {name(s): frozenset(s) for s in subsets}
    return FiniteLattice.from_sets(family)


def l5() -> FiniteLattice:
    """B2 with a new top adjoined: 0 < a, b < ab < 1."""
    els = ["0", "a", "b", "ab", "1"]
    order = {"0": set(els), "a": {"a", "ab", "1"}, "b": {"b", "ab", "1"}, "ab": {"ab", "1"}, "1": {"1"}}
    return FiniteLattice.from_leq(els, [(x, y) for x in els for y in order[x]])


def m3() -> FiniteLattice:
    els = ["0", "a", "b", "c", "1"]
    pairs = [("0", x) for x in els] + [(x, "1") for x in els] + [(x, x) for x in els]
    return FiniteLattice.from_leq(els, pairs)


def n5() -> FiniteLattice:
    els = ["0", "a", "b", "c", "1"]
    pairs = [("0", x) for x in els] + [(x, "1") for x in els] + [(x, x) for x in els] + [("a", "b")]
    return FiniteLattice.from_leq(els, pairs)


FIXTURES = {
    "C1": lambda: chain(1),
    "C2": lambda: chain(2),
    "C3": lambda: chain(3),
    "B2": lambda: boolean(2),
    "B3": lambda: boolean(3),
    "L5": l5,
    "M3": m3,
    "N5": n5,
}


def fixture(name: str) -> FiniteLattice:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise PreconditionError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None


# ---- corpus ----------------------------------------------------------------


@dataclass(frozen=True)
class CorpusLattice:
    name: str
    lattice: FiniteLattice


def _poset_from_lower_sets(lower: tuple[frozenset[int], ...]) -> FinitePoset:
    names = [f"p{i}" for i in range(len(lower))]
    pairs = [(names[j], names[i]) for i, s in enumerate(lower) for j in s | {i}]
    return FinitePoset(names, pairs)


def enumerate_corpus(max_size: int) -> Iterator[CorpusLattice]:
    """All distributive lattices with at most ``max_size`` elements, up to isomorphism.

    Posets are grown by adjoining a new maximal element over one of their
    downsets; a branch is cut once its downset count exceeds ``max_size``
    (adding elements never removes downsets). Isomorphic duplicates are
    dropped by canonical form, and named fixtures replace their isomorphs.
    """
    if max_size < 1:
        raise PreconditionError("max_size must be at least 1")
    named = [(n, fixture(n)) for n in ("C1", "C2", "C3", "B2", "L5", "B3")]
    found: list[FiniteLattice] = []
    codes: set[tuple] = set()
    level: list[tuple[frozenset[int], ...]] = [()]
    while level:
        nxt = []
        for lower in level:
            P = _poset_from_lower_sets(lower)
            L = downset_lattice(P)
            if len(L) > max_size:
                continue
            if len(L) <= 8:
                code = canonical_form(L)
                if code in codes:
                    continue
                codes.add(code)
            elif any(is_isomorphic(L, M) for M in found):
                continue
            found.append(L)
            idx_downsets = [frozenset(int(p[1:]) for p in d) for d in downsets(P)]
            for d in idx_downsets:
                extra = sum(1 for e in idx_downsets if d <= e)
                if len(idx_downsets) + extra <= max_size:
                    nxt.append(lower + (d,))
        level = nxt
    counters: dict[int, int] = {}
    out = []
    for L in sorted(found, key=len):
        name = None
        for fname, F in named:
            if len(F) == len(L) and is_isomorphic(F, L):
                name, L = fname, F
                break
        if name is None:
            if all(len(L.up(x)) + len(L.down(x)) == len(L) + 1 for x in L.elements):
                name, L = f"C{len(L)}", chain(len(L))
            else:
                counters[len(L)] = counters.get(len(L), 0) + 1
                name = f"D{len(L)}.{counters[len(L)]}"
        out.append(CorpusLattice(name, L))
    return iter(out)
