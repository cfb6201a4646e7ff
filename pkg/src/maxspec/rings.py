"""Finite commutative rings with unit: ideals, spectra, the reticulation, the
Jacobson closure formula, almost-maximal ideals, maximal homomorphisms and
conjunctivity criteria.

Elements are opaque string ids at the API boundary and integer indices inside.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import CriterionDisagreement, StructureError
from .ideals import Ideal, enumerate_prime_ideals
from .poset_core import FiniteLattice, FinitePoset
from .topology import ContinuousMap, FiniteSpace, is_homeomorphism, spec_space


class FiniteCommRing:
    """A finite commutative ring with unit, stored as addition and multiplication tables."""

    def __init__(
        self,
        elements: Sequence[str],
        add: Sequence[Sequence[str]],
        mul: Sequence[Sequence[str]],
        zero: str,
        one: str,
        name: str | None = None,
        check: bool = True,
    ):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise StructureError("duplicate element ids", self.elements)
        idx = {e: i for i, e in enumerate(self.elements)}
        self.index = idx
        n = len(self.elements)
        for tname, table in (("add", add), ("mul", mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise StructureError(f"{tname} table is not {n}x{n}")
            for i, row in enumerate(table):
                for j, v in enumerate(row):
                    if v not in idx:
                        raise StructureError(f"{tname} table entry {v!r} is not an element", (self.elements[i], self.elements[j]))
        for e in (zero, one):
            if e not in idx:
                raise StructureError(f"{e!r} is not an element", (e,))
        self._add = [[idx[v] for v in row] for row in add]
        self._mul = [[idx[v] for v in row] for row in mul]
        self._zero, self._one = idx[zero], idx[one]
        self.zero, self.one = zero, one
        self.name = name or f"ring{n}"
        self._cache: dict = {}
        if check:
            self.validate()

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteCommRing({self.name})"

    def cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    # -- arithmetic on ids ------------------------------------------------
    def add(self, a: str, b: str) -> str:
        return self.elements[self._add[self.index[a]][self.index[b]]]

    def mul(self, a: str, b: str) -> str:
        return self.elements[self._mul[self.index[a]][self.index[b]]]

    def neg(self, a: str) -> str:
        i = self.index[a]
        return self.elements[next(j for j in range(len(self)) if self._add[i][j] == self._zero)]

    def power(self, a: str, n: int) -> str:
        i, acc = self.index[a], self._one
        for _ in range(n):
            acc = self._mul[acc][i]
        return self.elements[acc]

    def validate(self) -> None:
        """Check every ring law; the error names the law and a witness tuple."""
        A, M, n, z, u = self._add, self._mul, len(self), self._zero, self._one
        E = self.elements
        for i in range(n):
            if A[z][i] != i:
                raise StructureError("zero is not an additive identity", (E[i],))
            if M[u][i] != i:
                raise StructureError("one is not a multiplicative identity", (E[i],))
            if z not in A[i]:
                raise StructureError("element has no additive inverse", (E[i],))
            for j in range(n):
                if A[i][j] != A[j][i]:
                    raise StructureError("addition is not commutative", (E[i], E[j]))
                if M[i][j] != M[j][i]:
                    raise StructureError("multiplication is not commutative", (E[i], E[j]))
        laws = (
            ("addition is not associative", lambda i, j, k: A[A[i][j]][k] == A[i][A[j][k]]),
            ("multiplication is not associative", lambda i, j, k: M[M[i][j]][k] == M[i][M[j][k]]),
            ("multiplication does not distribute over addition", lambda i, j, k: M[i][A[j][k]] == A[M[i][j]][M[i][k]]),
        )
        for message, holds in laws:
            for i, j, k in itertools.product(range(n), repeat=3):
                if not holds(i, j, k):
                    raise StructureError(message, (E[i], E[j], E[k]))

    def to_tables(self) -> dict:
        E = self.elements
        return {
            "elements": list(E),
            "add": [[E[v] for v in row] for row in self._add],
            "mul": [[E[v] for v in row] for row in self._mul],
            "zero": self.zero,
            "one": self.one,
        }


def zmod(n: int) -> FiniteCommRing:
    if n < 1:
        raise ValueError("n must be at least 1")
    E = [str(i) for i in range(n)]
    add = [[E[(i + j) % n] for j in range(n)] for i in range(n)]
    mul = [[E[(i * j) % n] for j in range(n)] for i in range(n)]
    return FiniteCommRing(E, add, mul, "0", E[1 % n], name=f"Z{n}", check=False)


def ring_product(R: FiniteCommRing, S: FiniteCommRing) -> FiniteCommRing:
    pairs = [(a, b) for a in R.elements for b in S.elements]
    E = [f"({a},{b})" for a, b in pairs]
    pos = {p: i for i, p in enumerate(pairs)}
    add = [[E[pos[(R.add(a, c), S.add(b, d))]] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[E[pos[(R.mul(a, c), S.mul(b, d))]] for (c, d) in pairs] for (a, b) in pairs]
    return FiniteCommRing(
        E, add, mul, f"({R.zero},{S.zero})", f"({R.one},{S.one})", name=f"{R.name}x{S.name}", check=False
    )


def from_tables(spec: Mapping) -> FiniteCommRing:
    return FiniteCommRing(spec["elements"], spec["add"], spec["mul"], spec["zero"], spec["one"], name=spec.get("name"))


def ring_corpus() -> list[FiniteCommRing]:
    """Z/n for 2 <= n <= 60 and the products Z/p x Z/q for p <= q in {2, 3, 5}."""
    out = [zmod(n) for n in range(2, 61)]
    for p, q in itertools.combinations_with_replacement((2, 3, 5), 2):
        out.append(ring_product(zmod(p), zmod(q)))
    return out


# ---- ideals ----------------------------------------------------------------


@dataclass(frozen=True)
class RingIdeal:
    ring: FiniteCommRing = field(compare=False, repr=False)
    members: frozenset

    def __post_init__(self):
        R, m = self.ring, frozenset(self.members)
        object.__setattr__(self, "members", m)
        for x in m:
            if x not in R.index:
                raise StructureError(f"{x!r} is not a ring element", (x,))
        if R.zero not in m:
            raise StructureError("an ideal must contain zero", (R.zero,))
        E, A, M = R.elements, R._add, R._mul
        ids = {R.index[x] for x in m}
        for a in ids:
            for b in ids:
                if A[a][b] not in ids:
                    raise StructureError("not closed under addition", (E[a], E[b]))
            for r in range(len(R)):
                if M[r][a] not in ids:
                    raise StructureError("does not absorb multiplication", (E[r], E[a]))

    @classmethod
    def _trusted(cls, R: "FiniteCommRing", ids: Iterable[int]) -> "RingIdeal":
        """Wrap a set already known to be an ideal (e.g. produced by generation)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", R)
        object.__setattr__(obj, "members", frozenset(R.elements[i] for i in ids))
        return obj

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def proper(self) -> bool:
        return self.ring.one not in self.members

    def sorted_members(self) -> list[str]:
        return sorted(self.members, key=self.ring.index.__getitem__)

    @property
    def label(self) -> str:
        return ideal_label(self)


def _generate(R: FiniteCommRing, gens: Iterable[int]) -> frozenset[int]:
    A, M = R._add, R._mul
    seeds = {M[r][g] for g in gens for r in range(len(R))} | {R._zero}
    out = set(seeds)
    frontier = list(out)
    while frontier:
        nxt = []
        for x in frontier:
            for s in seeds:
                y = A[x][s]
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def ideal_generated(R: FiniteCommRing, gens: Iterable[str]) -> RingIdeal:
    return RingIdeal._trusted(R, _generate(R, (R.index[x] for x in gens)))


def principal(R: FiniteCommRing, a: str) -> RingIdeal:
    return ideal_generated(R, [a])


def ideal_label(I: RingIdeal) -> str:
    """Shortest generator list, e.g. "(6)" or "(2,3)"; ties broken by element order."""
    R = I.ring

    def compute():
        members = sorted(R.index[x] for x in I.members)
        target = frozenset(members)
        for r in range(1, len(members) + 1):
            for gens in itertools.combinations(members, r):
                if _generate(R, gens) == target:
                    return "(" + ",".join(R.elements[g] for g in gens) + ")"
        return "(" + R.zero + ")"

    return R.cached(("label", I.members), compute)


def enumerate_ring_ideals(R: FiniteCommRing) -> list[RingIdeal]:
    def compute():
        seen = {_generate(R, [])}
        frontier = list(seen)
        while frontier:
            nxt = []
            for I in frontier:
                for x in range(len(R)):
                    if x in I:
                        continue
                    J = _generate(R, set(I) | {x})
                    if J not in seen:
                        seen.add(J)
                        nxt.append(J)
            frontier = nxt
        ideals = [RingIdeal._trusted(R, s) for s in seen]
        return sorted(ideals, key=lambda I: (len(I), sorted(R.index[x] for x in I.members)))

    return R.cached("ideals", compute)


def is_prime_ring_ideal(I: RingIdeal) -> bool:
    R = I.ring
    if not I.proper:
        return False
    outside = [R.index[a] for a in R.elements if a not in I]
    inI = {R.index[a] for a in I.members}
    return not any(R._mul[a][b] in inI for a in outside for b in outside)


def is_maximal_ring_ideal(I: RingIdeal) -> bool:
    return I.proper and not any(J.proper and I.members < J.members for J in enumerate_ring_ideals(I.ring))


def prime_ring_ideals(R: FiniteCommRing) -> list[RingIdeal]:
    return R.cached("primes", lambda: [I for I in enumerate_ring_ideals(R) if is_prime_ring_ideal(I)])


def maximal_ring_ideals(R: FiniteCommRing) -> list[RingIdeal]:
    return R.cached("maximals", lambda: [I for I in enumerate_ring_ideals(R) if is_maximal_ring_ideal(I)])


def radical(I: RingIdeal) -> RingIdeal:
    """{a : a^n in I for some n >= 1}; n <= |R| suffices by pigeonhole on powers."""
    R = I.ring
    n = len(R)
    members = set()
    for a in R.elements:
        i, acc = R.index[a], R.index[a]
        for _ in range(n):
            if R.elements[acc] in I:
                members.add(a)
                break
            acc = R._mul[acc][i]
    return RingIdeal(R, frozenset(members))


def ideal_sum(I: RingIdeal, J: RingIdeal) -> RingIdeal:
    return ideal_generated(I.ring, I.members | J.members)


def radical_ring_ideals(R: FiniteCommRing) -> list[RingIdeal]:
    return R.cached("radicals", lambda: [I for I in enumerate_ring_ideals(R) if radical(I) == I])


# ---- spectra ---------------------------------------------------------------


def _zariski(R: FiniteCommRing, ideals: list[RingIdeal]) -> FiniteSpace:
    pts = tuple(P.label for P in ideals)
    basic = [frozenset(P.label for P in ideals if a not in P) for a in R.elements]
    return FiniteSpace.from_basis(pts, basic)


def zariski_spec(R: FiniteCommRing) -> FiniteSpace:
    return R.cached("spec", lambda: _zariski(R, prime_ring_ideals(R)))


def max_spec_ring(R: FiniteCommRing) -> FiniteSpace:
    return R.cached("max", lambda: _zariski(R, maximal_ring_ideals(R)))


# ---- reticulation ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Reticulation:
    """Radical ideals under inclusion, with the map a -> rad((a))."""

    ring: FiniteCommRing
    lattice: FiniteLattice
    ideal_of: Mapping[str, RingIdeal]
    class_of: Mapping[str, str]


def reticulation(R: FiniteCommRing) -> Reticulation:
    def compute():
        rads = radical_ring_ideals(R)
        ideal_of = {I.label: I for I in rads}
        labels = list(ideal_of)
        pairs = [(a, b) for a in labels for b in labels if ideal_of[a].members <= ideal_of[b].members]
        L = FiniteLattice.from_poset(FinitePoset(labels, pairs))
        by_members = {I.members: I.label for I in rads}
        class_of = {a: by_members[radical(principal(R, a)).members] for a in R.elements}
        return Reticulation(R, L, ideal_of, class_of)

    return R.cached("reticulation", compute)


def power_divides(R: FiniteCommRing, a: str, b: str) -> tuple[int, str] | None:
    """A witness (n, c) with a^n = b*c and 1 <= n <= |R|, or None."""
    for n in range(1, len(R) + 1):
        an = R.power(a, n)
        for c in R.elements:
            if R.mul(b, c) == an:
                return (n, c)
    return None


# ---- Jacobson closure ------------------------------------------------------


def jacobson_radical_ring(R: FiniteCommRing, I: RingIdeal) -> RingIdeal:
    """{a : for every b some c has ab + c + abc in I}.

    For fixed a, b the candidates ab + c(1 + ab) range over ab + (1 + ab).
    """
    A, M, n = R._add, R._mul, len(R)
    inI = [R.elements[i] in I for i in range(n)]
    principal_sets = [set(M[y]) for y in range(n)]
    members = []
    for a in range(n):
        ok = True
        for b in range(n):
            x = M[a][b]
            y = A[R._one][x]
            row = A[x]
            if not any(inI[row[v]] for v in principal_sets[y]):
                ok = False
                break
        if ok:
            members.append(R.elements[a])
    return RingIdeal(R, frozenset(members))


def maximal_intersection_above(R: FiniteCommRing, I: RingIdeal) -> RingIdeal:
    members = frozenset(R.elements)
    for M in maximal_ring_ideals(R):
        if I.members <= M.members:
            members &= M.members
    return RingIdeal(R, members)


# ---- admissible families -----------------------------------------------------


def _comaximal(R: FiniteCommRing, I: frozenset, J: frozenset) -> bool:
    """I + J = R, i.e. 1 - a lies in J for some a in I."""
    one, idx = R.one, R.index
    neg = R.cached("neg", lambda: {x: R.neg(x) for x in R.elements})
    return any(R.elements[R._add[idx[one]][idx[neg[a]]]] in J for a in I)


def _radical_of_principal(R: FiniteCommRing, c: str) -> frozenset:
    return R.cached(("rad-principal", c), lambda: radical(principal(R, c)).members)


def _comaximal_with(R: FiniteCommRing, c: str) -> list[frozenset]:
    def compute():
        pc = principal(R, c).members
        return [D.members for D in enumerate_ring_ideals(R) if _comaximal(R, pc, D.members)]

    return R.cached(("comaximal", c), compute)


def _admissible_members(R: FiniteCommRing, c: str, I: frozenset) -> bool:
    return all(_comaximal(R, I, D) for D in _comaximal_with(R, c))


def admissible(R: FiniteCommRing, c: str, I: RingIdeal) -> bool:
    """Every ideal D with (c) + D = R also has I + D = R.

    A family of elements is admissible for c exactly when the ideal it
    generates is; finitely many d's generate any ideal of a finite ring.
    """
    return _admissible_members(R, c, I.members)


def admissible_ideals(R: FiniteCommRing, c: str) -> list[RingIdeal]:
    """Admissible ideals generated by families of elements whose power lies in (c)."""

    def compute():
        S_c = _radical_of_principal(R, c)
        return [I for I in enumerate_ring_ideals(R) if I.members <= S_c and _admissible_members(R, c, I.members)]

    return R.cached(("admissible", c), compute)


def is_almost_maximal(R: FiniteCommRing, P: RingIdeal) -> bool:
    """No c outside P has an admissible family lying entirely inside P.

    Admissibility is upward closed in the family, so the largest candidate
    family inside P, namely P intersected with rad((c)), decides the question.
    That intersection is already an ideal.
    """
    if not is_prime_ring_ideal(P):
        raise StructureError("almost-maximality is defined for prime ideals", tuple(P.sorted_members()))
    for c in R.elements:
        if c in P:
            continue
        if _admissible_members(R, c, P.members & _radical_of_principal(R, c)):
            return False
    return True


def is_almost_maximal_by_families(R: FiniteCommRing, P: RingIdeal) -> bool:
    """The same condition by enumerating every subset of rad((c)) as a family."""
    for c in R.elements:
        if c in P:
            continue
        S_c = sorted(_radical_of_principal(R, c), key=R.index.__getitem__)
        for r in range(len(S_c) + 1):
            for fam in itertools.combinations(S_c, r):
                if not all(x in P for x in fam):
                    continue
                gen = frozenset(R.elements[i] for i in _generate(R, (R.index[x] for x in fam)))
                if _admissible_members(R, c, gen):
                    return False
    return True


# ---- homomorphisms ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RingHom:
    source: FiniteCommRing
    target: FiniteCommRing
    mapping: Mapping[str, str]

    def __post_init__(self):
        R, S, f = self.source, self.target, self.mapping
        for a in R.elements:
            if a not in f or f[a] not in S.index:
                raise StructureError("map is undefined or leaves the target", (a,))
        if f[R.one] != S.one:
            raise StructureError("map is not unital", (R.one, f[R.one]))
        for a in R.elements:
            for b in R.elements:
                if f[R.add(a, b)] != S.add(f[a], f[b]):
                    raise StructureError("map does not preserve addition", (a, b))
                if f[R.mul(a, b)] != S.mul(f[a], f[b]):
                    raise StructureError("map does not preserve multiplication", (a, b))

    def __call__(self, a: str) -> str:
        return self.mapping[a]

    def preimage(self, J: RingIdeal) -> RingIdeal:
        return RingIdeal(self.source, frozenset(a for a in self.source.elements if self.mapping[a] in J))

    def extension(self, I: RingIdeal) -> RingIdeal:
        return ideal_generated(self.target, {self.mapping[a] for a in I.members})


def _ring_generators(R: FiniteCommRing) -> list[int]:
    """Greedy generators of R as a ring (together with 1)."""
    gens: list[int] = []
    span = _subring(R, [])
    for x in range(len(R)):
        if x not in span:
            gens.append(x)
            span = _subring(R, gens)
    return gens


def _subring(R: FiniteCommRing, gens: Iterable[int]) -> set[int]:
    out = {R._zero, R._one} | set(gens)
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in list(out):
                for c in (R._add[a][b], R._mul[a][b]):
                    if c not in out:
                        out.add(c)
                        changed = True
    return out


def ring_homs(R: FiniteCommRing, S: FiniteCommRing) -> list[RingHom]:
    """Every unital ring homomorphism R -> S, by assigning images to ring generators."""
    gens = _ring_generators(R)
    out = []
    for images in itertools.product(range(len(S)), repeat=len(gens)):
        f = {R._zero: S._zero, R._one: S._one}
        ok = True
        for g, im in zip(gens, images):
            if f.get(g, im) != im:
                ok = False
                break
            f[g] = im
        frontier = True
        while ok and frontier:
            frontier = False
            for a, fa in list(f.items()):
                for b, fb in list(f.items()):
                    for c, fc in ((R._add[a][b], S._add[fa][fb]), (R._mul[a][b], S._mul[fa][fb])):
                        if c not in f:
                            f[c] = fc
                            frontier = True
                        elif f[c] != fc:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok and len(f) == len(R):
            try:
                out.append(RingHom(R, S, {R.elements[a]: S.elements[b] for a, b in f.items()}))
            except StructureError:
                pass
    return out


def find_ring_isomorphism(R: FiniteCommRing, S: FiniteCommRing) -> RingHom | None:
    if len(R) != len(S):
        return None
    for f in ring_homs(R, S):
        if len(set(f.mapping.values())) == len(S):
            return f
    return None


def is_maximal_ring_hom(f: RingHom) -> bool:
    """Preimages of maximal ideals are maximal; cross-checked against the family criterion."""
    by_preimage = all(is_maximal_ring_ideal(f.preimage(M)) for M in maximal_ring_ideals(f.target))
    by_families = maximal_ring_hom_by_families(f)
    if by_preimage != by_families:
        raise CriterionDisagreement(f"preimage test {by_preimage} but family criterion {by_families}")
    return by_preimage


def maximal_ring_hom_by_families(f: RingHom) -> bool:
    """For every c and admissible family for c, the image family is admissible for f(c) in the target."""
    R, S = f.source, f.target
    for c in R.elements:
        for I in admissible_ideals(R, c):
            if not admissible(S, f(c), f.extension(I)):
                return False
    return True


# ---- conjunctivity ---------------------------------------------------------


def conjunctive_ring_sober_form(R: FiniteCommRing) -> bool:
    """Elements lying in the same maximal ideals lie in the same prime ideals."""
    maxs, primes = maximal_ring_ideals(R), prime_ring_ideals(R)
    sig_m = {a: frozenset(i for i, M in enumerate(maxs) if a in M) for a in R.elements}
    sig_p = {a: frozenset(i for i, P in enumerate(primes) if a in P) for a in R.elements}
    return all(sig_p[a] == sig_p[b] for a in R.elements for b in R.elements if sig_m[a] == sig_m[b])


def conjunctive_ring_general_form(R: FiniteCommRing) -> bool:
    """For every c and admissible family for c: whenever every member has a power in
    an ideal K, so does c."""
    rads = radical_ring_ideals(R)
    for c in R.elements:
        for I in admissible_ideals(R, c):
            for K in rads:
                if I.members <= K.members and c not in K:
                    return False
    return True


def conjunctive_ring_reticulation_form(R: FiniteCommRing) -> bool:
    from .wallman import is_conjunctive

    return is_conjunctive(reticulation(R).lattice)


def is_conjunctive_ring(R: FiniteCommRing) -> bool:
    """All three criteria, which must agree on finite rings (their maximal spectra are sober)."""
    results = {
        "sober": conjunctive_ring_sober_form(R),
        "general": conjunctive_ring_general_form(R),
        "reticulation": conjunctive_ring_reticulation_form(R),
    }
    if len(set(results.values())) != 1:
        raise CriterionDisagreement(f"conjunctivity criteria disagree on {R.name}: {results}")
    return results["sober"]


def spec_to_reticulation_map(R: FiniteCommRing) -> ContinuousMap:
    """P -> {radical ideals contained in P}, as a map into the prime spectrum of L(R)."""
    ret = reticulation(R)
    L = ret.lattice
    target = spec_space(L)
    mapping = {}
    for P in prime_ring_ideals(R):
        down = frozenset(lab for lab, I in ret.ideal_of.items() if I.members <= P.members)
        mapping[P.label] = Ideal(L, down).label
    return ContinuousMap(zariski_spec(R), target.space, mapping)


def spec_reticulation_agreement(R: FiniteCommRing) -> bool:
    try:
        f = spec_to_reticulation_map(R)
    except StructureError:
        return False
    return is_homeomorphism(f)


def prime_factor_count(n: int) -> int:
    count, p = 0, 2
    while p * p <= n:
        if n % p == 0:
            count += 1
            while n % p == 0:
                n //= p
        p += 1
    return count + (1 if n > 1 else 0)
