"""Finite topological spaces, the spectra Spec(D) and Max(D), and the comparison map eta."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import PreconditionError, StructureError
from .ideals import Ideal, enumerate_maximal_ideals, enumerate_prime_ideals, is_maximal_ideal, is_prime_ideal
from .poset_core import FiniteLattice, set_label

POINT_NAMES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class FiniteSpace:
    """A point set with its full family of open sets."""

    points: tuple
    opens: frozenset
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "opens", frozenset(frozenset(u) for u in self.opens))
        if len(set(pts)) != len(pts):
            raise StructureError("duplicate point ids", pts)
        full = frozenset(pts)
        if frozenset() not in self.opens or full not in self.opens:
            raise StructureError("opens must contain the empty set and the whole space")
        for u in self.opens:
            if not u <= full:
                raise StructureError(f"open set {sorted(u)} has unknown points", tuple(sorted(u - full)))
        for u in self.opens:
            for v in self.opens:
                if u | v not in self.opens:
                    raise StructureError("opens not closed under union", (self.label(u), self.label(v)))
                if u & v not in self.opens:
                    raise StructureError("opens not closed under intersection", (self.label(u), self.label(v)))

    @classmethod
    def from_basis(cls, points: Iterable[str], basis: Iterable[Iterable[str]]) -> "FiniteSpace":
        """Topology generated by ``basis``: closed under finite intersections, then unions."""
        points = tuple(points)
        fam = {frozenset(points)} | {frozenset(b) for b in basis}
        changed = True
        while changed:
            changed = False
            for u, v in list(itertools.product(fam, repeat=2)):
                for w in (u & v, u | v):
                    if w not in fam:
                        fam.add(w)
                        changed = True
        fam.add(frozenset())
        return cls(points, frozenset(fam))

    def __len__(self) -> int:
        return len(self.points)

    def label(self, u: Iterable[str]) -> str:
        return set_label(u, self.points)

    def sorted_opens(self) -> list[frozenset]:
        rank = {p: i for i, p in enumerate(self.points)}
        return sorted(self.opens, key=lambda u: (len(u), sorted(rank[p] for p in u)))

    @property
    def open_lattice(self) -> FiniteLattice:
        """The frame of opens; element ids are the open labels."""
        if "lattice" not in self._cache:
            self._cache["lattice"] = FiniteLattice.from_sets({self.label(u): u for u in self.sorted_opens()})
        return self._cache["lattice"]

    def open_of(self, label: str) -> frozenset:
        if "by_label" not in self._cache:
            self._cache["by_label"] = {self.label(u): u for u in self.opens}
        try:
            return self._cache["by_label"][label]
        except KeyError:
            raise PreconditionError(f"{label!r} is not an open set of the space", (label,)) from None

    def neighbourhood(self, x: str) -> frozenset:
        """Smallest open set containing ``x``."""
        out = frozenset(self.points)
        for u in self.opens:
            if x in u:
                out &= u
        return out

    def closure(self, s: Iterable[str]) -> frozenset:
        s = frozenset(s)
        return frozenset(x for x in self.points if self.neighbourhood(x) & s)

    def is_closed(self, s: Iterable[str]) -> bool:
        return frozenset(self.points) - frozenset(s) in self.opens

    def closed_sets(self) -> list[frozenset]:
        full = frozenset(self.points)
        return [full - u for u in self.sorted_opens()]


@dataclass(frozen=True, eq=False)
class ContinuousMap:
    source: FiniteSpace
    target: FiniteSpace
    mapping: Mapping[str, str]

    def __post_init__(self):
        for x in self.source.points:
            if x not in self.mapping:
                raise StructureError(f"map is undefined at point {x!r}", (x,))
            if self.mapping[x] not in self.target.points:
                raise StructureError(f"point {x!r} is sent outside the target", (x, self.mapping[x]))
        for v in self.target.opens:
            if self.preimage(v) not in self.source.opens:
                raise StructureError("map is not continuous", (self.target.label(v),))

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def preimage(self, v: Iterable[str]) -> frozenset:
        v = frozenset(v)
        return frozenset(x for x in self.source.points if self.mapping[x] in v)

    def image(self, u: Iterable[str]) -> frozenset:
        return frozenset(self.mapping[x] for x in u)


# ---- constructors ----------------------------------------------------------


def discrete(n: int) -> FiniteSpace:
    pts = POINT_NAMES[:n] if n <= len(POINT_NAMES) else tuple(f"x{i}" for i in range(n))
    subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(pts, r)]
    return FiniteSpace(pts, frozenset(subsets))


def indiscrete(n: int) -> FiniteSpace:
    pts = POINT_NAMES[:n] if n <= len(POINT_NAMES) else tuple(f"x{i}" for i in range(n))
    return FiniteSpace(pts, frozenset({frozenset(), frozenset(pts)}))


def sierpinski() -> FiniteSpace:
    """Points x, y with opens {}, {x}, {x,y}; x is the open point."""
    return FiniteSpace(("x", "y"), frozenset({frozenset(), frozenset({"x"}), frozenset({"x", "y"})}))


def subspace(X: FiniteSpace, s: Iterable[str]) -> FiniteSpace:
    s = frozenset(s)
    pts = tuple(p for p in X.points if p in s)
    return FiniteSpace(pts, frozenset(u & s for u in X.opens))


def enumerate_spaces(max_points: int) -> list[FiniteSpace]:
    """Every topology on at most ``max_points`` points, one per homeomorphism class.

    Finite topologies correspond to preorders (opens = up-closed sets), so we
    enumerate transitive reflexive relations and deduplicate under relabeling.
    """
    out = []
    for n in range(max_points + 1):
        pts = POINT_NAMES[:n] if n <= len(POINT_NAMES) else tuple(f"x{i}" for i in range(n))
        off = [(i, j) for i in range(n) for j in range(n) if i != j]
        seen = set()
        for bits in itertools.product((False, True), repeat=len(off)):
            rel = {(i, i) for i in range(n)} | {p for p, b in zip(off, bits) if b}
            if any((i, k) not in rel for (i, j) in rel for (j2, k) in rel if j == j2):
                continue
            code = min(
                tuple(sorted((perm[i], perm[j]) for i, j in rel)) for perm in itertools.permutations(range(n))
            )
            if code in seen:
                continue
            seen.add(code)
            subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]
            opens = [u for u in subsets if all(j in u for (i, j) in rel if i in u)]
            out.append(FiniteSpace(pts, frozenset(frozenset(pts[i] for i in u) for u in opens)))
    return out


# ---- spectra ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Spectrum:
    """A space of ideals: each point is labelled by the ideal it stands for."""

    space: FiniteSpace
    ideals: Mapping[str, Ideal]
    basic_open: Mapping[str, frozenset]

    def point_of(self, I: Ideal) -> str:
        return I.label


def _spectrum(D: FiniteLattice, ideals: list[Ideal]) -> Spectrum:
    pts = tuple(I.label for I in ideals)
    by_point = {I.label: I for I in ideals}
    basic = {b: frozenset(I.label for I in ideals if b not in I) for b in D.elements}
    space = FiniteSpace.from_basis(pts, basic.values())
    return Spectrum(space, by_point, basic)


def spec_space(D: FiniteLattice) -> Spectrum:
    """Prime ideals of D with the topology generated by G_b = {P : b not in P}."""
    return D.cached("spec_space", lambda: _spectrum(D, enumerate_prime_ideals(D)))


def max_space(D: FiniteLattice) -> Spectrum:
    return D.cached("max_space", lambda: _spectrum(D, enumerate_maximal_ideals(D)))


def check_open_sublattice(X: FiniteSpace, B: FiniteLattice) -> None:
    """Raise PreconditionError unless B is a bounded sublattice of the frame of opens of X."""
    opens = {b: X.open_of(b) for b in B.elements}
    if opens[B.bottom] or opens[B.top] != frozenset(X.points):
        raise PreconditionError("sublattice must contain the empty set and the whole space")
    for a in B.elements:
        for b in B.elements:
            if opens[B.join(a, b)] != opens[a] | opens[b] or opens[B.meet(a, b)] != opens[a] & opens[b]:
                raise PreconditionError("not a sublattice of the opens", (a, b))


def is_base(X: FiniteSpace, B: FiniteLattice) -> bool:
    """Every open set is a union of members of B."""
    members = [X.open_of(b) for b in B.elements]
    return all(frozenset().union(*(v for v in members if v <= u)) == u for u in X.opens)


@dataclass(frozen=True, eq=False)
class EtaMap:
    """x -> {b in B : x not in b}, with primality/maximality flagged per point."""

    space: FiniteSpace
    base: FiniteLattice
    ideal: Mapping[str, Ideal]
    is_prime: Mapping[str, bool]
    is_maximal: Mapping[str, bool]

    @property
    def lands_in_max(self) -> bool:
        return all(self.is_maximal.values())

    def image(self) -> set[str]:
        return {I.label for I in self.ideal.values()}


def eta_map(X: FiniteSpace, B: FiniteLattice) -> EtaMap:
    check_open_sublattice(X, B)
    ideal, prime, maximal = {}, {}, {}
    for x in X.points:
        I = Ideal(B, frozenset(b for b in B.elements if x not in X.open_of(b)))
        ideal[x], prime[x], maximal[x] = I, is_prime_ideal(I), is_maximal_ideal(I)
    return EtaMap(X, B, ideal, prime, maximal)


# ---- separation and sobriety -------------------------------------------------


def is_T0(X: FiniteSpace) -> bool:
    nb = [X.neighbourhood(x) for x in X.points]
    return len(set(nb)) == len(nb)


def is_T1(X: FiniteSpace) -> bool:
    return all(X.is_closed({x}) for x in X.points)


def is_hausdorff(X: FiniteSpace) -> bool:
    for x, y in itertools.combinations(X.points, 2):
        if not any(x in u and y in v and not (u & v) for u in X.opens for v in X.opens):
            return False
    return True


def has_finite_subcover(cover: Iterable[frozenset], K: Iterable[str]) -> list[frozenset] | None:
    """A finite subfamily of ``cover`` covering ``K``, picked one open per point; None if not a cover."""
    cover = list(cover)
    chosen: list[frozenset] = []
    for x in K:
        if any(x in u for u in chosen):
            continue
        hit = next((u for u in cover if x in u), None)
        if hit is None:
            return None
        chosen.append(hit)
    return chosen


def is_compact_subset(X: FiniteSpace, K: Iterable[str]) -> bool:
    """Every open cover of K drawn from X has a finite subcover.

    The covers tried are the full family of opens and, for each point, the
    family with that point's neighbourhood swapped for the opens avoiding it;
    candidates that fail to cover K are not covers and are skipped.
    """
    K = list(K)
    opens = X.sorted_opens()
    candidates = [opens] + [[X.neighbourhood(x)] + [u for u in opens if x not in u] for x in K]
    for cover in candidates:
        if not frozenset(K) <= frozenset().union(*cover):
            continue
        if has_finite_subcover(cover, K) is None:
            return False
    return True


def is_compact(X: FiniteSpace) -> bool:
    return is_compact_subset(X, X.points)


def is_irreducible_closed(X: FiniteSpace, F: frozenset) -> bool:
    if not F or not X.is_closed(F):
        return False
    closed = X.closed_sets()
    return not any(G < F and H < F and G | H == F for G in closed for H in closed)


def generic_points(X: FiniteSpace, F: frozenset) -> list[str]:
    return [x for x in X.points if X.closure({x}) == F]


def is_sober(X: FiniteSpace) -> bool:
    """Every irreducible closed set has exactly one generic point."""
    return all(len(generic_points(X, F)) == 1 for F in X.closed_sets() if is_irreducible_closed(X, F))


def sobrification(X: FiniteSpace) -> tuple[FiniteSpace, ContinuousMap]:
    """The T0 quotient and its quotient map (finite T0 spaces are sober)."""
    classes: dict[frozenset, list[str]] = {}
    for x in X.points:
        classes.setdefault(X.neighbourhood(x), []).append(x)
    label_of = {}
    pts = []
    for members in classes.values():
        lab = set_label(members, X.points)
        pts.append(lab)
        for x in members:
            label_of[x] = lab
    opens = frozenset(frozenset(label_of[x] for x in u) for u in X.opens)
    Xs = FiniteSpace(tuple(pts), opens)
    return Xs, ContinuousMap(X, Xs, label_of)


def is_dense(X: FiniteSpace, s: Iterable[str]) -> bool:
    return X.closure(s) == frozenset(X.points)


def is_homeomorphism(f: ContinuousMap) -> bool:
    m = f.mapping
    if len(set(m.values())) != len(f.source.points) or set(m.values()) != set(f.target.points):
        return False
    return all(f.image(u) in f.target.opens for u in f.source.opens)


def find_homeomorphism(X: FiniteSpace, Y: FiniteSpace) -> ContinuousMap | None:
    if len(X.points) != len(Y.points) or len(X.opens) != len(Y.opens):
        return None
    for perm in itertools.permutations(Y.points):
        m = dict(zip(X.points, perm))
        if all(frozenset(m[x] for x in u) in Y.opens for u in X.opens):
            return ContinuousMap(X, Y, m)
    return None
