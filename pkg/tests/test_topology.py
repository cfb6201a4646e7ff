import itertools

import pytest
from hypothesis import given

from maxspec import coverage
from maxspec.errors import PreconditionError, StructureError
from maxspec.ideals import enumerate_maximal_ideals, enumerate_prime_ideals
from maxspec.poset_core import FiniteLattice, bounded_sublattices, find_isomorphism, fixture
from maxspec.topology import (
    ContinuousMap,
    FiniteSpace,
    discrete,
    enumerate_spaces,
    eta_map,
    find_homeomorphism,
    indiscrete,
    is_base,
    is_compact,
    is_compact_subset,
    is_dense,
    is_hausdorff,
    is_homeomorphism,
    is_sober,
    is_T0,
    is_T1,
    max_space,
    sierpinski,
    sobrification,
    spec_space,
)
from maxspec.wallman import has_wallman_separation, primes_closed_under_unions

from conftest import CORPUS, SPACES, spaces


def test_space_counts():
    # Topologies on n points up to homeomorphism, n = 0..4 (OEIS A001930).
    counts = [sum(1 for X in SPACES if len(X) == n) for n in range(5)]
    assert counts == [1, 1, 3, 9, 33]


def test_spaces_pairwise_non_homeomorphic():
    for X, Y in itertools.combinations(SPACES, 2):
        if len(X) == len(Y) and len(X.opens) == len(Y.opens):
            assert find_homeomorphism(X, Y) is None


def test_open_family_must_be_closed():
    with pytest.raises(StructureError):
        FiniteSpace(("x", "y", "z"), frozenset({frozenset(), frozenset("xyz"), frozenset("x"), frozenset("y")}))


def test_spec_space_examples():
    C3 = fixture("C3")
    spec = spec_space(C3)
    X = spec.space
    assert set(X.points) == {"{0}", "{0,m}"}
    assert X.opens == {frozenset(), frozenset({"{0}"}), frozenset(X.points)}
    assert spec.basic_open["m"] == frozenset({"{0}"})
    assert find_homeomorphism(X, sierpinski()) is not None
    B2 = spec_space(fixture("B2")).space
    assert len(B2) == 2 and len(B2.opens) == 4
    assert len(spec_space(fixture("C1")).space) == 0


def test_max_space_examples():
    assert len(max_space(fixture("C3")).space) == 1
    for name, n in (("B2", 2), ("B3", 3)):
        X = max_space(fixture(name)).space
        assert len(X) == n and len(X.opens) == 2**n


def test_eta_examples():
    X = discrete(2)
    eta = eta_map(X, X.open_lattice)
    assert eta.ideal["x"].members == frozenset({"{}", "{y}"})
    assert eta.ideal["y"].members == frozenset({"{}", "{x}"})
    assert eta.lands_in_max
    S = sierpinski()
    eta = eta_map(S, S.open_lattice)
    assert eta.ideal["x"].members == frozenset({"{}"})
    assert eta.ideal["y"].members == frozenset({"{}", "{x}"})
    assert not eta.is_maximal["x"] and eta.is_maximal["y"]


def test_eta_requires_sublattice():
    X = discrete(2)
    # {∅, {x}} misses the whole space
    bad = FiniteLattice.from_leq(["{}", "{x}"], [("{}", "{x}")], reflexive=True)
    with pytest.raises(PreconditionError):
        eta_map(X, bad)


def test_separation_examples():
    S = sierpinski()
    assert is_T0(S) and not is_T1(S) and is_sober(S)
    I2 = indiscrete(2)
    assert not is_T0(I2) and not is_sober(I2)


@pytest.mark.parametrize("X", SPACES, ids=lambda X: f"{len(X)}pt-{len(X.opens)}opens")
def test_predicates_per_space(X):
    assert is_compact(X)
    if is_T1(X):
        assert len(X.opens) == 2 ** len(X)
        assert is_hausdorff(X)
    # finite spaces: sober iff T0
    assert is_sober(X) == is_T0(X)
    for k in range(len(X) + 1):
        for K in itertools.combinations(X.points, k):
            assert is_compact_subset(X, K)


def test_sobrification_examples():
    Xs, eta = sobrification(indiscrete(2))
    assert len(Xs) == 1
    S = sierpinski()
    Ss, eta = sobrification(S)
    assert is_homeomorphism(eta)
    D3 = discrete(3)
    assert is_homeomorphism(sobrification(D3)[1])


@given(spaces)
def test_sobrification_properties(X):
    Xs, eta = sobrification(X)
    assert is_T0(Xs) and is_sober(Xs)
    assert is_dense(Xs, eta.image(X.points))
    # opens correspond bijectively
    assert len(Xs.opens) == len(X.opens)


def test_dense_and_homeomorphism_examples():
    S = sierpinski()
    assert is_dense(S, {"x"})
    assert not is_dense(S, {"y"})
    X = discrete(2)
    assert is_homeomorphism(ContinuousMap(X, X, {"x": "x", "y": "y"}))
    assert not is_homeomorphism(ContinuousMap(X, discrete(1), {"x": "x", "y": "x"}))


def test_continuity_enforced():
    S = sierpinski()
    with pytest.raises(StructureError):
        ContinuousMap(S, S, {"x": "y", "y": "x"})


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_max_space_is_t1(c):
    X = max_space(c.lattice).space
    assert is_T1(X)
    assert len(X.opens) == 2 ** len(X)


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_spec_opens_iso_coherent_ideals(c):
    D = c.lattice
    frame = coverage.j_ideals_frame(coverage.coherent_topology(D))
    assert find_isomorphism(frame, spec_space(D).space.open_lattice) is not None


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_spec_points_are_primes(c):
    D = c.lattice
    assert set(spec_space(D).space.points) == {P.label for P in enumerate_prime_ideals(D)}
    assert set(max_space(D).space.points) == {M.label for M in enumerate_maximal_ideals(D)}


def _small_pairs():
    for X in SPACES:
        if len(X) <= 3:
            for B in bounded_sublattices(X.open_lattice):
                yield X, B


def test_sobrification_matches_max_for_wallman_surjective():
    checked = 0
    for X, B in _small_pairs():
        eta = eta_map(X, B)
        if not has_wallman_separation(X, B) or not eta.lands_in_max:
            continue
        maxs = {M.label for M in enumerate_maximal_ideals(B)}
        if eta.image() != maxs:
            continue
        if not is_base(X, B):
            continue
        checked += 1
        Xs, _ = sobrification(X)
        assert find_homeomorphism(Xs, max_space(B).space) is not None
    assert checked >= 3


def test_maximality_from_union_closure():
    checked = 0
    for X, B in _small_pairs():
        if not eta_map(X, B).lands_in_max:
            continue
        if not is_sober(max_space(B).space):
            continue
        maxs = {M.members for M in enumerate_maximal_ideals(B)}
        for P in primes_closed_under_unions(X, B):
            checked += 1
            assert P.members in maxs
    assert checked >= 3
