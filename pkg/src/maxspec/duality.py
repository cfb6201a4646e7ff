"""Spaces with Wallman bases versus conjunctive lattices: the functors H and K,
maximal homomorphisms, roundtrip and naturality checks, and co-atom spectra."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import PreconditionError, StructureError
from .ideals import Ideal, coatoms, enumerate_maximal_ideals, is_maximal_ideal, principal_ideal
from .poset_core import FiniteLattice, LatticeHom, is_lattice_hom
from .topology import (
    ContinuousMap,
    FiniteSpace,
    check_open_sublattice,
    eta_map,
    find_homeomorphism,
    is_base,
    is_homeomorphism,
    is_T0,
    max_space,
)
from .verdict import CheckReport
from .wallman import eta_image, eta_lattice, has_wallman_separation, is_conjunctive


@dataclass(frozen=True, eq=False)
class TopDLatObject:
    """A finite space together with a sublattice of its opens that is a base."""

    space: FiniteSpace
    base: FiniteLattice

    def __post_init__(self):
        try:
            check_open_sublattice(self.space, self.base)
        except PreconditionError as exc:
            raise StructureError(str(exc), exc.witness) from None
        if not is_base(self.space, self.base):
            raise StructureError("the sublattice is not a base for the topology")


def in_TopDLatW(o: TopDLatObject) -> bool:
    """T0, Wallman base, and eta hits every maximal ideal of the base."""
    if not is_T0(o.space) or not has_wallman_separation(o.space, o.base):
        return False
    eta = eta_map(o.space, o.base)
    if not eta.lands_in_max:
        return False
    return eta.image() == {M.label for M in enumerate_maximal_ideals(o.base)}


def is_maximal_hom(f: LatticeHom) -> bool:
    """Preimages of maximal ideals of the target are maximal in the source."""
    return all(is_maximal_ideal(Ideal(f.source, f.preimage(M.members))) for M in enumerate_maximal_ideals(f.target))


# ---- arrows ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TopDLatArrow:
    """A continuous map whose inverse image sends the target base into the source base.

    ``restriction`` maps target-base ids to source-base ids; it is recomputed
    from the point map and must agree with any table supplied.
    """

    source: TopDLatObject
    target: TopDLatObject
    mapping: Mapping[str, str]
    restriction: Mapping[str, str] = field(default=None)

    def __post_init__(self):
        f = ContinuousMap(self.source.space, self.target.space, self.mapping)
        X, Y = self.source.space, self.target.space
        table = {}
        for v in self.target.base.elements:
            u = X.label(f.preimage(Y.open_of(v)))
            if u not in self.source.base:
                raise StructureError("inverse image does not restrict to the bases", (v,))
            table[v] = u
        if self.restriction is not None and dict(self.restriction) != table:
            bad = next(v for v in table if self.restriction.get(v) != table[v])
            raise StructureError("supplied base restriction disagrees with the point map", (bad,))
        object.__setattr__(self, "restriction", table)

    @property
    def continuous_map(self) -> ContinuousMap:
        return ContinuousMap(self.source.space, self.target.space, self.mapping)


def functor_H(o: TopDLatObject) -> FiniteLattice:
    if not in_TopDLatW(o):
        raise PreconditionError("object is not in the Wallman subcategory")
    return o.base


def functor_H_arrow(f: TopDLatArrow) -> LatticeHom:
    """The inverse image restricted to the bases, a homomorphism target base -> source base."""
    h = LatticeHom(f.target.base, f.source.base, dict(f.restriction))
    if not is_lattice_hom(h):
        raise StructureError("restricted inverse image is not a lattice homomorphism")
    return h


def functor_K(D: FiniteLattice) -> TopDLatObject:
    if not is_conjunctive(D):
        raise PreconditionError("lattice is not conjunctive")
    return TopDLatObject(max_space(D).space, eta_image(D))


def functor_K_arrow(f: LatticeHom) -> TopDLatArrow:
    """Max(f): M -> f^{-1}(M), from the maximal spectrum of the target to that of the source."""
    if not is_maximal_hom(f):
        raise PreconditionError("homomorphism is not maximal")
    src, tgt = functor_K(f.target), functor_K(f.source)
    mapping = {M.label: Ideal(f.source, f.preimage(M.members)).label for M in enumerate_maximal_ideals(f.target)}
    return TopDLatArrow(src, tgt, mapping)


# ---- roundtrips ------------------------------------------------------------


def eta_point_map(o: TopDLatObject) -> ContinuousMap:
    """x -> eta(x), as a map into Max(B)."""
    eta = eta_map(o.space, o.base)
    if not eta.lands_in_max:
        raise PreconditionError("eta does not land in the maximal spectrum")
    return ContinuousMap(o.space, max_space(o.base).space, {x: I.label for x, I in eta.ideal.items()})


def roundtrip_object(o: TopDLatObject) -> CheckReport:
    """eta: X -> Max(B) is a homeomorphism carrying each b in B onto {M : b not in M}."""
    if not in_TopDLatW(o):
        return CheckReport.not_applicable("object in the Wallman subcategory")
    f = eta_point_map(o)
    if not is_homeomorphism(f):
        return CheckReport.from_bool(False, witness="eta is not a homeomorphism")
    spec = max_space(o.base)
    for b in o.base.elements:
        if f.image(o.space.open_of(b)) != spec.basic_open[b]:
            return CheckReport.from_bool(False, witness=b)
    return CheckReport.from_bool(True)


def roundtrip_lattice(D: FiniteLattice) -> CheckReport:
    """eta_D: D -> Im(eta_D) is a lattice isomorphism, and K(D) lies in the Wallman subcategory."""
    if not is_conjunctive(D):
        return CheckReport.not_applicable("conjunctive")
    K = functor_K(D)
    X = K.space
    eta = {d: X.label(U) for d, U in eta_lattice(D).items()}
    h = LatticeHom(D, K.base, eta)
    if len(set(eta.values())) != len(D) or set(eta.values()) != set(K.base.elements) or not is_lattice_hom(h):
        return CheckReport.from_bool(False, witness="eta_D is not an isomorphism onto its image")
    if not in_TopDLatW(K):
        return CheckReport.from_bool(False, witness="K(D) is not in the Wallman subcategory")
    return CheckReport.from_bool(True)


def naturality_space_arrow(f: TopDLatArrow) -> CheckReport:
    """eta_Y . f == Max(H f) . eta_X as maps X -> Max(C)."""
    Hf = functor_H_arrow(f)
    if not is_maximal_hom(Hf):
        return CheckReport.from_bool(False, witness="H(f) is not maximal")
    eta_X, eta_Y = eta_point_map(f.source), eta_point_map(f.target)
    B = f.source.base
    maxB = {M.label: M for M in enumerate_maximal_ideals(B)}
    for x in f.source.space.points:
        left = eta_Y(f.mapping[x])
        M = maxB[eta_X(x)]
        right = Ideal(Hf.source, Hf.preimage(M.members)).label
        if left != right:
            return CheckReport.from_bool(False, witness=x)
    return CheckReport.from_bool(True)


def naturality_lattice_arrow(g: LatticeHom) -> CheckReport:
    """eta_{D'} . g == H(K g) . eta_D as maps D -> Im(eta_{D'})."""
    if not is_maximal_hom(g):
        return CheckReport.not_applicable("maximal homomorphism")
    Kg = functor_K_arrow(g)
    HKg = functor_H_arrow(Kg)
    X_src = Kg.target.space  # Max(D)
    X_tgt = Kg.source.space  # Max(D')
    eta_D, eta_E = eta_lattice(g.source), eta_lattice(g.target)
    for d in g.source.elements:
        left = X_tgt.label(eta_E[g(d)])
        right = HKg(X_src.label(eta_D[d]))
        if left != right:
            return CheckReport.from_bool(False, witness=d)
    return CheckReport.from_bool(True)


# ---- co-atom spectra -------------------------------------------------------


def t1_max_space(F: FiniteLattice) -> FiniteSpace:
    """Co-atoms, with opens generated by {b : b not below a} for each a."""
    co = coatoms(F)
    basis = [frozenset(b for b in co if not F.le(b, a)) for a in F.elements]
    return FiniteSpace.from_basis(co, basis)


def coatom_spectrum_map(F: FiniteLattice) -> ContinuousMap:
    """b -> the principal ideal of b, into Max(F)."""
    return ContinuousMap(t1_max_space(F), max_space(F).space, {b: principal_ideal(F, b).label for b in coatoms(F)})


def is_T1Frm(F: FiniteLattice) -> bool:
    """Finite frames are compact, so membership reduces to conjunctivity."""
    return is_conjunctive(F)


def frame_hom_maximal_coatom_condition(f: LatticeHom) -> bool:
    """For every co-atom b of the target, the join of {a : f(a) <= b} is a co-atom of the source."""
    src, tgt = f.source, f.target
    src_co = set(coatoms(src))
    return all(src.join_all(a for a in src.elements if tgt.le(f(a), b)) in src_co for b in coatoms(tgt))


def t1_duality_check(X: FiniteSpace) -> CheckReport:
    """Max of the opens of a T1 space is homeomorphic to X via co-atom labels."""
    from .topology import is_T1

    if not is_T1(X):
        return CheckReport.not_applicable("T1")
    F = X.open_lattice
    full = frozenset(X.points)
    to_coatom = {}
    for x in X.points:
        lab = X.label(full - {x})
        if lab not in coatoms(F):
            return CheckReport.from_bool(False, witness=x)
        to_coatom[x] = lab
    co_space = t1_max_space(F)
    f = ContinuousMap(X, co_space, to_coatom)
    g = coatom_spectrum_map(F)
    ok = is_homeomorphism(f) and is_homeomorphism(g) and in_TopDLatW(TopDLatObject(X, F))
    return CheckReport.from_bool(ok, witness=None if ok else X.points)


def homeomorphic(X: FiniteSpace, Y: FiniteSpace) -> bool:
    return find_homeomorphism(X, Y) is not None
