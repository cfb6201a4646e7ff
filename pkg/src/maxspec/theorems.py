"""Registry of corpus-wide property checks, one per acceptance criterion.

Each check sweeps a deterministic corpus (lattices, spaces, rings) and counts
instances that pass, fail, or fall outside the hypotheses of the statement.
"""
from __future__ import annotations

import functools
import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from . import coverage, duality, ideals, rings, topology, wallman
from .errors import CriterionDisagreement, PreconditionError
from .poset_core import (
    CorpusLattice,
    FiniteLattice,
    boolean,
    bounded_sublattices,
    enumerate_corpus,
    find_isomorphism,
    fixture,
    lattice_homs,
)
from .verdict import CheckReport, Verdict


@dataclass(frozen=True)
class SweepConfig:
    max_size: int = 8
    max_points: int = 4
    ring_max_n: int = 60
    product_primes: tuple[int, ...] = (2, 3, 5)
    compact_max_frame: int = 6
    family_bruteforce_max: int = 8
    # Sublattices that are not bases are swept only on spaces this small.
    separation_extension_points: int = 3


@dataclass
class TheoremResult:
    theorem_id: str
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0
    counterexample: str | None = None
    requirement_failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and not self.requirement_failures

    def record(self, outcome, instance: str) -> None:
        if isinstance(outcome, CheckReport):
            if outcome.verdict is Verdict.HYPOTHESES_NOT_MET:
                self.not_applicable += 1
                return
            if outcome.witness is not None and outcome.verdict is Verdict.FAILS:
                instance = f"{instance} (witness {outcome.witness})"
            outcome = outcome.verdict is Verdict.HOLDS
        if outcome:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = instance

    def require(self, condition: bool, message: str) -> None:
        if not condition:
            self.requirement_failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        s = f"{status} {self.theorem_id}: {self.passed} pass, {self.failed} fail, {self.not_applicable} n/a"
        if self.counterexample:
            s += f"; first counterexample: {self.counterexample}"
        if self.requirement_failures:
            s += "; unmet: " + "; ".join(self.requirement_failures)
        return s

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "ok": self.ok,
            "pass": self.passed,
            "fail": self.failed,
            "not_applicable": self.not_applicable,
            "counterexample": self.counterexample,
            "unmet_requirements": self.requirement_failures,
            "notes": self.notes,
        }


# ---- corpora ---------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def lattice_corpus(max_size: int) -> tuple[CorpusLattice, ...]:
    return tuple(enumerate_corpus(max_size))


@functools.lru_cache(maxsize=None)
def space_corpus(max_points: int) -> tuple[topology.FiniteSpace, ...]:
    return tuple(topology.enumerate_spaces(max_points))


@functools.lru_cache(maxsize=None)
def rings_for(max_n: int, primes: tuple[int, ...]) -> tuple[rings.FiniteCommRing, ...]:
    out = [rings.zmod(n) for n in range(2, max_n + 1)]
    for p, q in itertools.combinations_with_replacement(primes, 2):
        out.append(rings.ring_product(rings.zmod(p), rings.zmod(q)))
    return tuple(out)


def _rings(cfg: SweepConfig):
    return rings_for(cfg.ring_max_n, tuple(cfg.product_primes))


def _space_name(X: topology.FiniteSpace) -> str:
    return "space[" + ",".join(X.label(u) for u in X.sorted_opens()) + "]"


def is_boolean_lattice(D: FiniteLattice) -> bool:
    return all(any(D.meet(a, b) == D.bottom and D.join(a, b) == D.top for b in D.elements) for a in D.elements)


def _wallman_objects(cfg: SweepConfig) -> list[duality.TopDLatObject]:
    out = []
    for X in space_corpus(cfg.max_points):
        for B in _base_sublattices(X):
            o = duality.TopDLatObject(X, B)
            if duality.in_TopDLatW(o):
                out.append(o)
    return out


def _base_sublattices(X: topology.FiniteSpace) -> list[FiniteLattice]:
    """Bounded sublattices of the opens that are bases.

    A base closed under finite unions contains every open of a finite space,
    so only the full frame qualifies; larger frames skip the enumeration.
    """
    if len(X.opens) <= 8:
        return [B for B in bounded_sublattices(X.open_lattice) if topology.is_base(X, B)]
    return [X.open_lattice]


# ---- checks ----------------------------------------------------------------


def check_max_implies_prime(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("max-implies-prime")
    for c in lattice_corpus(cfg.max_size):
        for M in ideals.enumerate_maximal_ideals(c.lattice):
            r.record(ideals.is_prime_ideal(M), f"{c.name}: {M.label}")
    return r


def check_wallman_iff_eta_in_max(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("wallman-iff-eta-in-max")
    extension = 0
    for X in space_corpus(cfg.max_points):
        for B in _base_sublattices(X):
            lhs = wallman.is_wallman_base(X, B)
            rhs = topology.eta_map(X, B).lands_in_max
            r.record(lhs == rhs, f"{_space_name(X)} with base of {len(B)} opens")
        if len(X) <= cfg.separation_extension_points:
            for B in bounded_sublattices(X.open_lattice):
                extension += 1
                ok = wallman.has_wallman_separation(X, B) == topology.eta_map(X, B).lands_in_max
                r.record(ok, f"{_space_name(X)} with sublattice {B.elements}")
    r.notes.append(
        "on finite spaces a base sublattice is the whole frame of opens; "
        f"the separation condition was also compared on {extension} arbitrary bounded sublattices"
    )
    return r


def check_conjunctive_triple(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("conjunctive-triple-equivalence")
    verdicts = {}
    for c in lattice_corpus(cfg.max_size):
        D = c.lattice
        a = wallman.is_conjunctive(D)
        b = wallman.is_eta_injective(D)
        s = coverage.is_subcanonical(coverage.maximal_topology(D))
        verdicts[c.name] = a
        r.record(a == b == s, f"{c.name}: conjunctive={a} eta-injective={b} subcanonical={s}")
    for name, expected in (("C3", False), ("L5", False), ("B2", True), ("B3", True)):
        r.require(verdicts.get(name) is expected, f"{name} must appear with conjunctive={expected}")
    return r


def check_eta_image_is_wallman(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("eta-image-is-wallman")
    for c in lattice_corpus(cfg.max_size):
        X = topology.max_space(c.lattice).space
        r.record(wallman.is_wallman_base(X, wallman.eta_image(c.lattice)), c.name)
    return r


def check_kd_equals_jacobson(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("kD-equals-jacobson")
    for c in lattice_corpus(cfg.max_size):
        D = c.lattice
        J = coverage.maximal_topology(D)
        for I in ideals.enumerate_ideals(D):
            a = coverage.j_closure(J, I)
            b = ideals.jacobson_closure(D, I)
            m = ideals.meet_of_maximals_above(D, I)
            r.record(a == b == m, f"{c.name}: {I.label}")
    return r


def check_dlatmax(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("dlatmax")
    for c in lattice_corpus(cfg.max_size):
        D = c.lattice
        comps = {frozenset(D.elements) - F.members for F in coverage.j_prime_filters(coverage.maximal_topology(D))}
        maxs = {M.members for M in ideals.enumerate_maximal_ideals(D)}
        r.record(comps == maxs, c.name)
    return r


def check_compact_thm(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("compact-thm")
    total = bases = 0
    for c in lattice_corpus(cfg.max_size):
        A = c.lattice
        if len(A) > cfg.compact_max_frame:
            continue
        for B in bounded_sublattices(A):
            total += 1
            try:
                coverage.check_base_sublattice(A, B)
            except PreconditionError:
                continue
            bases += 1
            if not wallman.is_A_conjunctive(A, B):
                r.not_applicable += 1
                continue
            eq = coverage.topology_equal(coverage.maximal_topology(B), coverage.induced_canonical(A, B))
            r.record(eq, f"{c.name} with sublattice {B.elements}")
    r.notes.append(f"{bases} of {total} bounded sublattices are bases; in a finite frame only the frame itself is")
    r.require(r.passed >= 1, "at least one A-conjunctive base instance")
    return r


def check_normal_seminormal(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("conjunctive-normal-seminormal")
    for c in lattice_corpus(cfg.max_size):
        D = c.lattice
        n, s = wallman.is_normal(D), wallman.is_seminormal(D)
        if wallman.is_conjunctive(D):
            r.record(n == s, f"{c.name}: normal={n} seminormal={s}")
        X = topology.max_space(D).space
        discrete = len(X.opens) == 2 ** len(X)
        r.record(s and discrete and topology.is_hausdorff(X), f"{c.name}: seminormal={s} Max discrete={discrete}")
    r.notes.append("degenerate on finite lattices: every one is semi-normal and every maximal spectrum is discrete")
    return r


def check_duality_roundtrips(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("duality-roundtrips")
    objs = _wallman_objects(cfg)
    for o in objs:
        r.record(duality.roundtrip_object(o), f"object {_space_name(o.space)}")
    for c in lattice_corpus(cfg.max_size):
        rep = duality.roundtrip_lattice(c.lattice)
        if rep.verdict is not Verdict.HYPOTHESES_NOT_MET:
            r.record(rep, f"lattice {c.name}")
    arrows = 0
    for o1, o2 in itertools.product(objs, repeat=2):
        for images in itertools.product(o2.space.points, repeat=len(o1.space)):
            f = duality.TopDLatArrow(o1, o2, dict(zip(o1.space.points, images)))
            arrows += 1
            r.record(duality.naturality_space_arrow(f), f"arrow {_space_name(o1.space)} -> {_space_name(o2.space)}")
    conj = [c for c in lattice_corpus(cfg.max_size) if wallman.is_conjunctive(c.lattice)]
    for c1, c2 in itertools.product(conj, repeat=2):
        for g in lattice_homs(c1.lattice, c2.lattice):
            arrows += 1
            r.record(duality.naturality_lattice_arrow(g), f"hom {c1.name} -> {c2.name}: {g.mapping}")
    r.notes.append(
        f"{len(objs)} Wallman objects (finite ones are discrete spaces with all opens), {arrows} arrows"
    )
    r.require(len(objs) >= 3, "at least three Wallman objects")
    return r


def check_conjunctive_coatomistic(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("conjunctive-iff-coatomistic")
    verdicts = {}
    for c in lattice_corpus(cfg.max_size):
        a, b = wallman.is_conjunctive(c.lattice), wallman.is_coatomistic(c.lattice)
        verdicts[c.name] = a
        r.record(a == b, f"{c.name}: conjunctive={a} coatomistic={b}")
    for name, expected in (("C3", False), ("L5", False), ("B2", True), ("B3", True)):
        r.require(verdicts.get(name) is expected, f"{name} must appear with conjunctive={expected}")
    return r


def check_t1_duality(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("t1-duality")
    for X in space_corpus(cfg.max_points):
        r.record(duality.t1_duality_check(X), _space_name(X))
    r.require(r.passed == cfg.max_points + 1, "one T1 space per size, all of them discrete")
    return r


def check_alexandrov(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("alexandrov-negative/positive")
    r.record(not wallman.is_alexandrov_algebra(fixture("C3")), "C3 must not be an Alexandrov algebra")
    booleans = 0
    for c in lattice_corpus(cfg.max_size):
        D = c.lattice
        if is_boolean_lattice(D):
            booleans += 1
            r.record(wallman.is_alexandrov_algebra(D), c.name)
        # Closed form: a family exists iff the join of everything well inside a is a.
        for a in D.elements:
            closed = D.join_all(b for b in D.elements if wallman.well_inside(D, b, a)) == a
            r.record(closed == (wallman.alexandrov_witness(D, a) is not None), f"{c.name}: witness search at {a}")
    r.require(booleans >= 3, "at least three Boolean lattices")
    return r


def check_cr_equals_jm_closed(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("cr-equals-jm-closed")
    for c in lattice_corpus(cfg.max_size):
        r.record(wallman.cr_equals_jm_closed(c.lattice), c.name)
    r.require(r.passed >= 3, "at least three non-vacuous instances")
    return r


def check_reticulation_boolean(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("reticulation-boolean")
    for n in range(2, cfg.ring_max_n + 1):
        L = rings.reticulation(rings.zmod(n)).lattice
        oracle = boolean(rings.prime_factor_count(n))
        r.record(find_isomorphism(L, oracle) is not None, f"Z{n}")
    return r


def check_spec_reticulation(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("spec-reticulation-agreement")
    for R in _rings(cfg):
        r.record(rings.spec_reticulation_agreement(R), R.name)
    return r


def check_ring_jacobson(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("ring-jacobson")
    for R in _rings(cfg):
        for I in rings.enumerate_ring_ideals(R):
            a = rings.jacobson_radical_ring(R, I)
            b = rings.maximal_intersection_above(R, I)
            r.record(a == b, f"{R.name}: {I.label}")
    R12 = rings.zmod(12)
    r.require(
        rings.jacobson_radical_ring(R12, rings.principal(R12, "0")).label == "(6)",
        "Z12 with I=(0) must give (6)",
    )
    return r


def check_ring_criteria(cfg: SweepConfig) -> TheoremResult:
    r = TheoremResult("ring-criteria-agreement")
    for R in _rings(cfg):
        try:
            r.record(rings.is_conjunctive_ring(R), f"{R.name}: conjunctive")
        except CriterionDisagreement as exc:
            r.record(False, f"{R.name}: {exc}")
        for P in rings.prime_ring_ideals(R):
            am = rings.is_almost_maximal(R, P)
            r.record(am == rings.is_maximal_ring_ideal(P), f"{R.name}: {P.label}")
            if len(R) <= cfg.family_bruteforce_max:
                r.record(am == rings.is_almost_maximal_by_families(R, P), f"{R.name}: {P.label} by families")
    r.notes.append("degenerate on finite rings: primes are maximal, so every ring is conjunctive")
    return r


REGISTRY: dict[str, tuple[str, Callable[[SweepConfig], TheoremResult]]] = {
    "max-implies-prime": ("maximal ideals are prime", check_max_implies_prime),
    "wallman-iff-eta-in-max": ("Wallman base iff eta lands in Max(B)", check_wallman_iff_eta_in_max),
    "conjunctive-triple-equivalence": ("conjunctive iff eta_D injective iff J_m subcanonical", check_conjunctive_triple),
    "eta-image-is-wallman": ("Im(eta_D) is a Wallman base of Max(D)", check_eta_image_is_wallman),
    "kD-equals-jacobson": ("J_m-closure = k_D = meet of maximal ideals above", check_kd_equals_jacobson),
    "dlatmax": ("complements of J_m-prime filters are the maximal ideals", check_dlatmax),
    "compact-thm": ("A-conjunctive base: J_m(B) = induced canonical topology", check_compact_thm),
    "conjunctive-normal-seminormal": ("conjunctive: normal iff semi-normal", check_normal_seminormal),
    "duality-roundtrips": ("H and K roundtrips and naturality", check_duality_roundtrips),
    "conjunctive-iff-coatomistic": ("finite frames: conjunctive iff co-atomistic", check_conjunctive_coatomistic),
    "t1-duality": ("T1 spaces recovered from co-atoms of their opens", check_t1_duality),
    "alexandrov-negative/positive": ("Alexandrov: false on C3, true on Boolean lattices", check_alexandrov),
    "cr-equals-jm-closed": ("normal subfit: CR ideals = J_m-closed ideals", check_cr_equals_jm_closed),
    "reticulation-boolean": ("L(Z/n) is Boolean on the prime divisors of n", check_reticulation_boolean),
    "spec-reticulation-agreement": ("Spec(R) homeomorphic to Spec(L(R))", check_spec_reticulation),
    "ring-jacobson": ("K_A formula = meet of maximal ideals above", check_ring_jacobson),
    "ring-criteria-agreement": ("conjunctivity criteria agree; almost-maximal iff maximal", check_ring_criteria),
}


def run_theorem(theorem_id: str, cfg: SweepConfig | None = None) -> TheoremResult:
    if theorem_id not in REGISTRY:
        raise KeyError(f"unknown theorem id {theorem_id!r}; valid ids: {', '.join(REGISTRY)}")
    cfg = cfg or SweepConfig()
    start = time.perf_counter()
    result = REGISTRY[theorem_id][1](cfg)
    result.seconds = time.perf_counter() - start
    return result


def run_all(cfg: SweepConfig | None = None, ids: list[str] | None = None) -> list[TheoremResult]:
    return [run_theorem(t, cfg) for t in (ids or list(REGISTRY))]
