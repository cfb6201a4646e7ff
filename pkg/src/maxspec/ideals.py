"""Ideals, filters, prime and maximal ideals, co-atoms and the closure k_D."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import StructureError
from .poset_core import FiniteLattice, downsets


@dataclass(frozen=True)
class Ideal:
    """A down-closed, join-closed subset containing bottom. Validated on construction."""

    lattice: FiniteLattice = field(compare=False, repr=False)
    members: frozenset

    def __post_init__(self):
        L, m = self.lattice, frozenset(self.members)
        object.__setattr__(self, "members", m)
        for x in m:
            if x not in L:
                raise StructureError(f"{x!r} is not an element of the lattice", (x,))
        if L.bottom not in m:
            raise StructureError("an ideal must contain bottom", (L.bottom,))
        for x in m:
            if not L.down(x) <= m:
                y = next(iter(L.sort(L.down(x) - m)))
                raise StructureError(f"not down-closed: {y!r} <= {x!r}", (y, x))
        for a in m:
            for b in m:
                if L.join(a, b) not in m:
                    raise StructureError(f"not join-closed at ({a!r}, {b!r})", (a, b))

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def proper(self) -> bool:
        return self.lattice.top not in self.members

    def sorted_members(self) -> list[str]:
        return self.lattice.sort(self.members)

    @property
    def label(self) -> str:
        return self.lattice.label(self.members)


@dataclass(frozen=True)
class Filter:
    """An up-closed, meet-closed subset containing top."""

    lattice: FiniteLattice = field(compare=False, repr=False)
    members: frozenset

    def __post_init__(self):
        L, m = self.lattice, frozenset(self.members)
        object.__setattr__(self, "members", m)
        if L.top not in m:
            raise StructureError("a filter must contain top", (L.top,))
        for x in m:
            if x not in L:
                raise StructureError(f"{x!r} is not an element of the lattice", (x,))
            if not L.up(x) <= m:
                raise StructureError(f"not up-closed above {x!r}", (x,))
        for a in m:
            for b in m:
                if L.meet(a, b) not in m:
                    raise StructureError(f"not meet-closed at ({a!r}, {b!r})", (a, b))

    def __contains__(self, x) -> bool:
        return x in self.members

    @property
    def proper(self) -> bool:
        return self.lattice.bottom not in self.members

    def sorted_members(self) -> list[str]:
        return self.lattice.sort(self.members)


def principal_ideal(D: FiniteLattice, a: str) -> Ideal:
    return Ideal(D, D.down(a))


def principal_filter(D: FiniteLattice, a: str) -> Filter:
    return Filter(D, D.up(a))


def _is_join_closed(D: FiniteLattice, s: frozenset) -> bool:
    return all(D.join(a, b) in s for a in s for b in s)


def enumerate_ideals(D: FiniteLattice) -> list[Ideal]:
    """All ideals: non-empty downsets that are closed under binary join."""

    def compute():
        out = [Ideal(D, d) for d in downsets(D.poset) if d and _is_join_closed(D, d)]
        return sorted(out, key=lambda I: (len(I), [D.poset.rank(x) for x in I.sorted_members()]))

    return D.cached("ideals", compute)


def enumerate_filters(D: FiniteLattice) -> list[Filter]:
    def compute():
        out = []
        for d in downsets(D.poset):
            up = frozenset(D.elements) - d
            if up and all(D.meet(a, b) in up for a in up for b in up):
                out.append(Filter(D, up))
        return sorted(out, key=lambda F: (len(F.members), [D.poset.rank(x) for x in F.sorted_members()]))

    return D.cached("filters", compute)


def is_prime_ideal(I: Ideal) -> bool:
    D = I.lattice
    if not I.proper:
        return False
    return all(a in I or b in I for a in D.elements for b in D.elements if D.meet(a, b) in I)


def is_maximal_ideal(I: Ideal) -> bool:
    if not I.proper:
        return False
    return not any(J.proper and I.members < J.members for J in enumerate_ideals(I.lattice))


def enumerate_prime_ideals(D: FiniteLattice) -> list[Ideal]:
    return D.cached("primes", lambda: [I for I in enumerate_ideals(D) if is_prime_ideal(I)])


def enumerate_maximal_ideals(D: FiniteLattice) -> list[Ideal]:
    return D.cached("maximals", lambda: [I for I in enumerate_ideals(D) if is_maximal_ideal(I)])


def ideal_generated_by(D: FiniteLattice, S: Iterable[str]) -> Ideal:
    """Downset of the finite joins of ``S`` together with bottom."""
    joins = {D.bottom}
    for x in S:
        joins |= {D.join(j, x) for j in joins}
    members = frozenset().union(*(D.down(j) for j in joins))
    return Ideal(D, members)


def coatoms(F: FiniteLattice) -> list[str]:
    return [a for a in F.elements if a != F.top and F.up(a) == {a, F.top}]


def jacobson_closure(D: FiniteLattice, I: Ideal) -> Ideal:
    """k_D(I): the d such that every b with d v b = 1 already has b v c = 1 for some c in I."""
    top = D.top
    members = {
        d
        for d in D.elements
        if all(any(D.join(b, c) == top for c in I.members) for b in D.elements if D.join(d, b) == top)
    }
    return Ideal(D, members)


def meet_of_maximals_above(D: FiniteLattice, I: Ideal) -> Ideal:
    """Intersection of the maximal ideals containing ``I``; all of D when there are none."""
    members = frozenset(D.elements)
    for M in enumerate_maximal_ideals(D):
        if I.members <= M.members:
            members &= M.members
    return Ideal(D, members)
