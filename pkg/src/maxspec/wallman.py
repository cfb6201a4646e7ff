"""Lattice predicates: Wallman bases, conjunctivity and its relatives, normality,
co-atomisticity, the Alexandrov property, and the completely-below machinery."""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .coverage import j_closure, j_ideals, maximal_topology, require_distributive
from .errors import PreconditionError
from .ideals import Ideal, coatoms, enumerate_ideals, enumerate_maximal_ideals, enumerate_prime_ideals, principal_ideal
from .poset_core import FiniteLattice, bounded_sublattices, sublattice_closure
from .topology import FiniteSpace, check_open_sublattice, is_base, max_space
from .verdict import CheckReport

# ---- Wallman bases ---------------------------------------------------------


def wallman_separation_witness(X: FiniteSpace, B: FiniteLattice) -> tuple[str, str] | None:
    """A pair (U, x) with x in U and no V in B such that U u V = X and x not in V."""
    check_open_sublattice(X, B)
    full = frozenset(X.points)
    opens = {b: X.open_of(b) for b in B.elements}
    for u, U in opens.items():
        for x in X.points:
            if x in U and not any(U | V == full and x not in V for V in opens.values()):
                return (u, x)
    return None


def has_wallman_separation(X: FiniteSpace, B: FiniteLattice) -> bool:
    """The separation condition alone, for any bounded sublattice of opens."""
    return wallman_separation_witness(X, B) is None


def is_wallman_base(X: FiniteSpace, B: FiniteLattice) -> bool:
    check_open_sublattice(X, B)
    if not is_base(X, B):
        raise PreconditionError("the sublattice is not a base for the topology")
    return has_wallman_separation(X, B)


# ---- conjunctivity ---------------------------------------------------------


def _cocovers(D: FiniteLattice, a: str) -> frozenset:
    return frozenset(c for c in D.elements if D.join(a, c) == D.top)


def conjunctivity_witness(D: FiniteLattice) -> tuple[str, str] | None:
    """A pair (a, b) with every co-cover of a co-covering b, yet a not below b."""
    require_distributive(D)
    co = {a: _cocovers(D, a) for a in D.elements}
    for a in D.elements:
        for b in D.elements:
            if co[a] <= co[b] and not D.le(a, b):
                return (a, b)
    return None


def is_conjunctive(D: FiniteLattice) -> bool:
    return conjunctivity_witness(D) is None


def eta_lattice(D: FiniteLattice) -> dict[str, frozenset]:
    """d -> the set of (labels of) maximal ideals not containing d."""
    maxs = enumerate_maximal_ideals(D)
    return {d: frozenset(M.label for M in maxs if d not in M) for d in D.elements}


def is_eta_injective(D: FiniteLattice) -> bool:
    eta = eta_lattice(D)
    return len(set(eta.values())) == len(D)


def eta_image(D: FiniteLattice) -> FiniteLattice:
    """Im(eta_D) as a bounded sublattice of the opens of Max(D)."""
    X = max_space(D).space
    ids = {X.label(U) for U in eta_lattice(D).values()}
    B = sublattice_closure(X.open_lattice, ids)
    assert set(B.elements) == ids, "image of a lattice homomorphism must be a sublattice"
    return B


def is_A_conjunctive(A: FiniteLattice, B: FiniteLattice) -> bool:
    """For a in A, b in B: if every c in B co-covering b co-covers some d <= a in B, then b <= a."""
    require_distributive(A)
    top = A.top
    Bs = B.elements
    for a in A.elements:
        below_a = [d for d in Bs if A.le(d, a)]
        for b in Bs:
            if A.le(b, a):
                continue
            if all(any(A.join(c, d) == top for d in below_a) for c in Bs if A.join(c, b) == top):
                return False
    return True


def is_subfit(A: FiniteLattice) -> bool:
    return is_A_conjunctive(A, A)


def is_coatomistic(F: FiniteLattice) -> bool:
    co = coatoms(F)
    return all(F.meet_all(c for c in co if F.le(a, c)) == a for a in F.elements)


# ---- normality -------------------------------------------------------------


def _separation_pairs(D: FiniteLattice, a: str, b: str):
    top = D.top
    for c in D.elements:
        if D.join(c, a) != top:
            continue
        for d in D.elements:
            if D.join(b, d) == top:
                yield c, d


def is_normal(D: FiniteLattice) -> bool:
    require_distributive(D)
    top = D.top
    return all(
        any(D.meet(c, d) == D.bottom for c, d in _separation_pairs(D, a, b))
        for a in D.elements
        for b in D.elements
        if D.join(a, b) == top
    )


def negligible_ideal(D: FiniteLattice) -> Ideal:
    """The closure of the bottom ideal for the maximal topology."""
    return D.cached("negligible", lambda: j_closure(maximal_topology(D), principal_ideal(D, D.bottom)))


def is_seminormal(D: FiniteLattice) -> bool:
    require_distributive(D)
    top = D.top
    N = negligible_ideal(D)
    return all(
        any(D.meet(c, d) in N for c, d in _separation_pairs(D, a, b))
        for a in D.elements
        for b in D.elements
        if D.join(a, b) == top
    )


# ---- Alexandrov algebras ---------------------------------------------------


def alexandrov_witness(D: FiniteLattice, a: str) -> list[tuple[str, str]] | None:
    """A smallest family of pairs (b, c) with join of the c's equal to a, b ^ c = 0 and b v a = 1.

    Exhaustive over families of at most |D| pairs; each c is paired with the
    first b that works for it.
    """
    partner = {}
    for c in D.elements:
        for b in D.elements:
            if D.meet(b, c) == D.bottom and D.join(b, a) == D.top:
                partner[c] = b
                break
    cands = list(partner)
    for r in range(0, min(len(cands), len(D)) + 1):
        for fam in itertools.combinations(cands, r):
            if D.join_all(fam) == a:
                return [(partner[c], c) for c in fam]
    return None


def is_alexandrov_algebra(D: FiniteLattice) -> bool:
    require_distributive(D)
    return is_normal(D) and all(alexandrov_witness(D, a) is not None for a in D.elements)


def is_countably_compact(D: FiniteLattice) -> bool:
    """Every family joining to 1 has a finite subfamily joining to 1, searched literally."""
    els = D.elements
    for r in range(len(els) + 1):
        for fam in itertools.combinations(els, r):
            if D.join_all(fam) != D.top:
                continue
            acc = D.bottom
            for x in fam:
                if acc == D.top:
                    break
                acc = D.join(acc, x)
            if acc != D.top:
                return False
    return True


# ---- well-inside and completely-below -----------------------------------------


def well_inside(A: FiniteLattice, b: str, a: str) -> bool:
    return any(A.meet(c, b) == A.bottom and A.join(c, a) == A.top for c in A.elements)


def completely_below(A: FiniteLattice, order: Sequence[tuple[str, str]] | None = None) -> frozenset:
    """Largest interpolative subrelation of well-inside, as a set of pairs (b, a).

    Pairs lacking an interpolant are deleted one at a time, scanning in
    ``order`` (default: lattice order) until nothing changes.
    """
    if order is None:
        return A.cached("completely_below", lambda: completely_below(A, _default_order(A)))
    rel = {(b, a) for b in A.elements for a in A.elements if well_inside(A, b, a)}
    scan = list(order)
    changed = True
    while changed:
        changed = False
        for b, a in scan:
            if (b, a) in rel and not any((b, m) in rel and (m, a) in rel for m in A.elements):
                rel.discard((b, a))
                changed = True
    return frozenset(rel)


def _default_order(A: FiniteLattice) -> list[tuple[str, str]]:
    return [(b, a) for b in A.elements for a in A.elements]


def is_completely_regular(A: FiniteLattice) -> bool:
    rel = completely_below(A)
    return all(A.join_all(b for (b, x) in rel if x == a) == a for a in A.elements)


def completely_regular_ideals(A: FiniteLattice) -> list[Ideal]:
    rel = completely_below(A)
    return [I for I in enumerate_ideals(A) if all(any((a, b) in rel for b in I.members) for a in I.members)]


def cr_equals_jm_closed(A: FiniteLattice) -> CheckReport:
    """Compare completely regular ideals with ideals closed for the maximal topology.

    Only meaningful for normal subfit frames; otherwise the report names the
    missing hypotheses.
    """
    require_distributive(A)
    missing = [name for name, ok in (("normal", is_normal(A)), ("subfit", is_subfit(A))) if not ok]
    if missing:
        return CheckReport.not_applicable(*missing)
    cr = {I.members for I in completely_regular_ideals(A)}
    jm = {I.members for I in j_ideals(maximal_topology(A))}
    diff = sorted(A.label(m) for m in cr ^ jm)
    return CheckReport.from_bool(cr == jm, witness=diff[0] if diff else None, cr=len(cr), jm_closed=len(jm))


# ---- union-closed primes ---------------------------------------------------


def primes_closed_under_unions(X: FiniteSpace, B: FiniteLattice) -> list[Ideal]:
    """Prime ideals I of B such that any union of members of I that lies in B is in I.

    Scanned literally over subfamilies. Since B is a sublattice of the opens,
    a finite union of its members is their join in B, so on finite spaces
    every prime ideal qualifies.
    """
    check_open_sublattice(X, B)
    out = []
    for P in enumerate_prime_ideals(B):
        members = P.sorted_members()
        closed = True
        for r in range(2, len(members) + 1):
            for fam in itertools.combinations(members, r):
                lab = X.label(frozenset().union(*(X.open_of(u) for u in fam)))
                if lab in B and lab not in P:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            out.append(P)
    return out


def sublattices_of_opens(X: FiniteSpace) -> list[FiniteLattice]:
    return bounded_sublattices(X.open_lattice)
