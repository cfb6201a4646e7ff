"""Sieves and Grothendieck topologies on finite lattices, J-ideals and their frame."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import PreconditionError, StructureError
from .ideals import Filter, Ideal, enumerate_filters, enumerate_ideals, ideal_generated_by, principal_ideal
from .poset_core import FiniteLattice, downsets, is_distributive

# Materializing every sieve is exponential in |down(c)|; refuse beyond this.
MATERIALIZE_LIMIT = 16


def require_distributive(D: FiniteLattice) -> None:
    if not D.cached("distributive", lambda: is_distributive(D)):
        raise PreconditionError("lattice is not distributive")


@dataclass(frozen=True)
class Sieve:
    """A down-closed subset of the principal downset of ``anchor``."""

    lattice: FiniteLattice = field(compare=False, repr=False)
    anchor: str
    members: frozenset

    def __post_init__(self):
        L, m = self.lattice, frozenset(self.members)
        object.__setattr__(self, "members", m)
        if self.anchor not in L:
            raise StructureError(f"anchor {self.anchor!r} is not an element", (self.anchor,))
        for x in m:
            if x not in L or not L.le(x, self.anchor):
                raise StructureError(f"{x!r} is not below the anchor {self.anchor!r}", (x, self.anchor))
            if not L.down(x) <= m:
                raise StructureError(f"sieve is not down-closed below {x!r}", (x,))

    def pullback(self, d: str) -> "Sieve":
        return Sieve(self.lattice, d, self.members & self.lattice.down(d))


def sieve(L: FiniteLattice, anchor: str, generators: Iterable[str]) -> Sieve:
    """The sieve on ``anchor`` generated by ``generators``."""
    return Sieve(L, anchor, frozenset().union(*(L.down(g) for g in generators)))


def all_sieves(L: FiniteLattice, c: str) -> list[Sieve]:
    if len(L) > MATERIALIZE_LIMIT:
        raise PreconditionError(f"refusing to materialize sieves on a lattice with more than {MATERIALIZE_LIMIT} elements")
    ds = L.cached("downsets", lambda: list(downsets(L.poset)))
    below = L.down(c)
    return [Sieve(L, c, d) for d in ds if d <= below]


class GrothendieckTopology:
    """A coverage given by a membership predicate on (anchor, sieve members)."""

    def __init__(self, lattice: FiniteLattice, name: str, predicate: Callable[[str, frozenset], bool]):
        self.lattice = lattice
        self.name = name
        self._predicate = predicate
        self._families: dict[str, list[Sieve]] = {}

    def __repr__(self) -> str:
        return f"GrothendieckTopology({self.name}, {len(self.lattice)} elements)"

    def covers(self, S: Sieve) -> bool:
        return self._predicate(S.anchor, S.members)

    def covers_set(self, c: str, members: Iterable[str]) -> bool:
        """Does the sieve on ``c`` generated by ``members`` cover ``c``?"""
        return self.covers(sieve(self.lattice, c, members))

    def covering_sieves(self, c: str) -> list[Sieve]:
        if c not in self._families:
            self._families[c] = [S for S in all_sieves(self.lattice, c) if self.covers(S)]
        return self._families[c]


def coherent_topology(D: FiniteLattice) -> GrothendieckTopology:
    require_distributive(D)
    return GrothendieckTopology(D, "coh", lambda c, S: D.join_all(S) == c)


def maximal_topology(D: FiniteLattice) -> GrothendieckTopology:
    """S covers c iff (join S) v d = 1 for every d with c v d = 1."""
    require_distributive(D)
    top = D.top

    def pred(c, S):
        j = D.join_all(S)
        return all(D.join(j, d) == top for d in D.elements if D.join(c, d) == top)

    return GrothendieckTopology(D, "max", pred)


def maximal_topology_literal(D: FiniteLattice) -> GrothendieckTopology:
    """The maximal topology phrased with finite subfamilies, quantified explicitly.

    Used only to cross-check the join-based form above.
    """
    top = D.top

    def pred(c, S):
        S = sorted(S)
        subsets = [sub for r in range(len(S) + 1) for sub in itertools.combinations(S, r)]
        return all(
            any(D.join(D.join_all(sub), d) == top for sub in subsets) for d in D.elements if D.join(c, d) == top
        )

    return GrothendieckTopology(D, "max-literal", pred)


def check_base_sublattice(A: FiniteLattice, B: FiniteLattice) -> None:
    """Raise PreconditionError unless every element of A is an A-join of elements of B."""
    for x in B.elements:
        if x not in A:
            raise PreconditionError(f"{x!r} is not an element of the frame", (x,))
    for a in A.elements:
        if A.join_all(b for b in B.elements if A.le(b, a)) != a:
            raise PreconditionError(f"{a!r} is not a join of base elements", (a,))


def induced_canonical(A: FiniteLattice, B: FiniteLattice, require_base: bool = True) -> GrothendieckTopology:
    """On B: S covers b iff the join of S computed in A equals b."""
    require_distributive(A)
    if require_base:
        check_base_sublattice(A, B)
    else:
        for x in B.elements:
            if x not in A:
                raise PreconditionError(f"{x!r} is not an element of the frame", (x,))
    return GrothendieckTopology(B, "can", lambda b, S: A.join_all(S) == b)


def canonical_topology(A: FiniteLattice) -> GrothendieckTopology:
    return induced_canonical(A, A)


def countable_topology(D: FiniteLattice) -> GrothendieckTopology:
    """Countable covering families; on a finite lattice every family is countable."""
    require_distributive(D)
    return GrothendieckTopology(D, "countable", lambda c, S: D.join_all(S) == c)


def cr_topology(A: FiniteLattice) -> GrothendieckTopology:
    """S covers a iff every b completely below a is a member of S."""
    from .wallman import completely_below

    require_distributive(A)
    rel = completely_below(A)
    need = {a: frozenset(b for (b, x) in rel if x == a) for a in A.elements}
    return GrothendieckTopology(A, "cr", lambda a, S: need[a] <= S)


def topology_axiom_violation(J: GrothendieckTopology) -> tuple | None:
    """First failed axiom as (axiom name, anchor, witness sieve members), or None."""
    L = J.lattice
    for c in L.elements:
        if not J.covers(Sieve(L, c, L.down(c))):
            return ("maximality", c, L.down(c))
        family = J.covering_sieves(c)
        for S in family:
            for d in L.down(c):
                if not J.covers(S.pullback(d)):
                    return ("stability", c, S.members, d)
        for S in family:
            for R in all_sieves(L, c):
                if all(J.covers(R.pullback(s)) for s in S.members) and not J.covers(R):
                    return ("transitivity", c, S.members, R.members)
    return None


def verify_topology_axioms(J: GrothendieckTopology) -> bool:
    return topology_axiom_violation(J) is None


def topology_equal(J1: GrothendieckTopology, J2: GrothendieckTopology) -> bool:
    if J1.lattice is not J2.lattice and J1.lattice != J2.lattice:
        raise PreconditionError("topologies live on different lattices")
    L = J1.lattice
    return all(J1.covers(S) == J2.covers(S) for c in L.elements for S in all_sieves(L, c))


# ---- J-ideals --------------------------------------------------------------


def _largest_sieve_inside(L: FiniteLattice, c: str, members: frozenset) -> Sieve:
    return Sieve(L, c, L.down(c) & members)


def is_j_closed(J: GrothendieckTopology, I: Ideal) -> bool:
    # Covering families are upward closed, so it suffices to test the largest
    # sieve on c contained in I.
    L = J.lattice
    return all(c in I for c in L.elements if J.covers(_largest_sieve_inside(L, c, I.members)))


def j_closure(J: GrothendieckTopology, I: Ideal) -> Ideal:
    """Smallest J-closed ideal containing I, by saturation to a fixpoint."""
    L = J.lattice
    current = I
    while True:
        new = {c for c in L.elements if c not in current and J.covers(_largest_sieve_inside(L, c, current.members))}
        if not new:
            return current
        current = ideal_generated_by(L, current.members | new)


@dataclass(frozen=True)
class JIdeal:
    topology: GrothendieckTopology = field(compare=False, repr=False)
    ideal: Ideal

    def __post_init__(self):
        if not is_j_closed(self.topology, self.ideal):
            raise StructureError("ideal is not closed for the topology", tuple(self.ideal.sorted_members()))

    @property
    def members(self) -> frozenset:
        return self.ideal.members


def j_ideals(J: GrothendieckTopology) -> list[JIdeal]:
    return [JIdeal(J, I) for I in enumerate_ideals(J.lattice) if is_j_closed(J, I)]


def j_ideals_frame(J: GrothendieckTopology) -> FiniteLattice:
    """The J-ideals ordered by inclusion; ids are the ideal labels."""
    return FiniteLattice.from_sets({I.ideal.label: I.members for I in j_ideals(J)})


def is_subcanonical(J: GrothendieckTopology) -> bool:
    L = J.lattice
    return all(is_j_closed(J, principal_ideal(L, a)) for a in L.elements)


def j_prime_filters(J: GrothendieckTopology) -> list[Filter]:
    """Proper filters meeting every J-covering sieve whose anchor they contain."""
    L = J.lattice
    out = []
    for F in enumerate_filters(L):
        if not F.proper:
            continue
        # The largest sieve on c avoiding F is down(c) minus F; it covers iff some covering sieve avoids F.
        if all(not J.covers(Sieve(L, c, L.down(c) - F.members)) for c in F.members):
            out.append(F)
    return out
