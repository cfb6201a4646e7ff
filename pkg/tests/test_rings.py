import itertools
import math

import pytest

from maxspec import rings as Rg
from maxspec.errors import StructureError
from maxspec.poset_core import boolean, find_isomorphism, fixture
from maxspec.topology import find_homeomorphism, max_space
from maxspec.wallman import is_conjunctive, is_eta_injective

CORPUS = Rg.ring_corpus()
SMALL = [R for R in CORPUS if len(R) <= 12]
TINY = [R for R in CORPUS if len(R) <= 8]

NON_ASSOCIATIVE = {
    "elements": ["0", "1", "a", "b"],
    "add": [["0", "1", "a", "b"], ["1", "0", "b", "a"], ["a", "b", "0", "1"], ["b", "a", "1", "0"]],
    "mul": [["0", "0", "0", "0"], ["0", "1", "a", "b"], ["0", "a", "a", "1"], ["0", "b", "1", "b"]],
    "zero": "0",
    "one": "1",
}


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_divisors(n):
    return [p for p in divisors(n) if p > 1 and all(p % q for q in range(2, p))]


def zn_ideal(n, d):
    """The ideal dZ/nZ for d dividing n."""
    return frozenset(str(x) for x in range(0, n, d)) if d < n else frozenset({"0"})


def ideal_oracle(R):
    """Additive subgroups absorbing multiplication, by subset enumeration."""
    out = set()
    others = [x for x in R.elements if x != R.zero]
    for r in range(len(others) + 1):
        for comb in itertools.combinations(others, r):
            s = frozenset(comb) | {R.zero}
            if all(R.add(a, b) in s and R.neg(a) in s for a in s for b in s) and all(
                R.mul(a, x) in s for a in s for x in R.elements
            ):
                out.add(s)
    return out


def radical_oracle(R, I):
    out = set()
    for a in R.elements:
        p = a
        for _ in range(len(R)):
            if p in I:
                out.add(a)
                break
            p = R.mul(p, a)
    return frozenset(out)


def members(xs):
    return {I.members for I in xs}


# ---- constructors ----------------------------------------------------------


def test_zero_ring():
    Z1 = Rg.zmod(1)
    assert len(Z1) == 1 and Z1.zero == Z1.one
    assert Rg.prime_ring_ideals(Z1) == [] and Rg.maximal_ring_ideals(Z1) == []
    assert len(Rg.zariski_spec(Z1)) == 0
    assert Rg.is_conjunctive_ring(Z1)


def test_crt_isomorphism():
    Z6, P = Rg.zmod(6), Rg.ring_product(Rg.zmod(2), Rg.zmod(3))
    f = Rg.find_ring_isomorphism(Z6, P)
    assert f is not None and len(set(f.mapping.values())) == 6
    assert Rg.find_ring_isomorphism(Rg.zmod(4), Rg.ring_product(Rg.zmod(2), Rg.zmod(2))) is None


def test_non_associative_table_rejected():
    with pytest.raises(StructureError) as exc:
        Rg.from_tables(NON_ASSOCIATIVE)
    assert "not associative" in str(exc.value)
    assert exc.value.witness == ("a", "a", "b")


def test_tables_roundtrip():
    for R in (Rg.zmod(6), Rg.ring_product(Rg.zmod(2), Rg.zmod(3))):
        S = Rg.from_tables(R.to_tables())
        assert S.to_tables() == R.to_tables()


@pytest.mark.parametrize("R", CORPUS, ids=lambda R: R.name)
def test_corpus_rings_validate(R):
    R.validate()


# ---- ideals ----------------------------------------------------------------


def test_z12_examples():
    R = Rg.zmod(12)
    assert sorted(I.label for I in Rg.enumerate_ring_ideals(R)) == sorted(["(0)", "(2)", "(3)", "(4)", "(6)", "(1)"])
    assert sorted(P.label for P in Rg.prime_ring_ideals(R)) == ["(2)", "(3)"]
    assert sorted(M.label for M in Rg.maximal_ring_ideals(R)) == ["(2)", "(3)"]
    assert Rg.radical(Rg.principal(R, "0")).label == "(6)"
    assert Rg.radical(Rg.principal(Rg.zmod(4), "0")).label == "(2)"
    for S in (R, Rg.zmod(4), Rg.zmod(7)):
        one = Rg.principal(S, S.one)
        assert Rg.radical(one).members == frozenset(S.elements)


@pytest.mark.parametrize("n", range(1, 61))
def test_zmod_ideals_are_divisor_ideals(n):
    R = Rg.zmod(n)
    assert members(Rg.enumerate_ring_ideals(R)) == {zn_ideal(n, d) for d in divisors(n)}
    assert members(Rg.prime_ring_ideals(R)) == {zn_ideal(n, p) for p in prime_divisors(n)}
    assert members(Rg.maximal_ring_ideals(R)) == {zn_ideal(n, p) for p in prime_divisors(n)}
    rad_n = math.prod(prime_divisors(n))
    assert Rg.radical(Rg.principal(R, "0")).members == zn_ideal(n, rad_n)


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_ideals_match_subset_oracle(R):
    ideals = ideal_oracle(R)
    assert members(Rg.enumerate_ring_ideals(R)) == ideals
    for I in Rg.enumerate_ring_ideals(R):
        assert Rg.radical(I).members == radical_oracle(R, I.members)


def test_invalid_ideal_rejected():
    with pytest.raises(StructureError):
        Rg.RingIdeal(Rg.zmod(6), frozenset({"0", "1"}))


# ---- spectra and reticulation ----------------------------------------------


def test_spectrum_examples():
    X = Rg.zariski_spec(Rg.zmod(12))
    assert sorted(X.points) == ["(2)", "(3)"] and len(X.opens) == 4
    assert len(Rg.zariski_spec(Rg.zmod(4))) == 1
    assert len(Rg.max_spec_ring(Rg.zmod(12))) == 2


def test_reticulation_examples():
    ret = Rg.reticulation(Rg.zmod(12))
    assert find_isomorphism(ret.lattice, fixture("B2")) is not None
    assert sorted(ret.ideal_of) == sorted(["(6)", "(2)", "(3)", "(1)"])
    assert ret.class_of["2"] == ret.class_of["8"] == "(2)"
    assert Rg.power_divides(Rg.zmod(12), "2", "8") is not None
    assert Rg.power_divides(Rg.zmod(12), "8", "2") is not None
    assert find_isomorphism(Rg.reticulation(Rg.zmod(4)).lattice, fixture("C2")) is not None


@pytest.mark.parametrize("n", range(2, 61))
def test_reticulation_is_boolean(n):
    L = Rg.reticulation(Rg.zmod(n)).lattice
    assert len(Rg.radical_ring_ideals(Rg.zmod(n))) == 2 ** len(prime_divisors(n))
    assert find_isomorphism(L, boolean(len(prime_divisors(n)))) is not None


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_class_order_matches_radical_inclusion(R):
    ret = Rg.reticulation(R)
    for a, b in itertools.product(R.elements, repeat=2):
        wit = Rg.power_divides(R, a, b)
        incl = radical_oracle(R, Rg.principal(R, a).members) <= radical_oracle(R, Rg.principal(R, b).members)
        assert (wit is not None) == incl
        assert (wit is not None) == ret.lattice.le(ret.class_of[a], ret.class_of[b])
        if wit is not None:
            k, c = wit
            assert R.power(a, k) == R.mul(b, c)


@pytest.mark.parametrize("R", CORPUS, ids=lambda R: R.name)
def test_spec_agrees_with_reticulation(R):
    assert Rg.spec_reticulation_agreement(R)
    L = Rg.reticulation(R).lattice
    assert find_homeomorphism(Rg.zariski_spec(R), max_space(L).space) is not None


def test_spec_agreement_examples():
    for n, pts in ((12, 2), (4, 1), (30, 3)):
        R = Rg.zmod(n)
        assert Rg.spec_reticulation_agreement(R)
        assert len(Rg.zariski_spec(R)) == pts


# ---- Jacobson radical and almost-maximal ideals ----------------------------


def test_jacobson_examples():
    R12, R4 = Rg.zmod(12), Rg.zmod(4)
    assert Rg.jacobson_radical_ring(R12, Rg.principal(R12, "0")).label == "(6)"
    assert Rg.jacobson_radical_ring(R4, Rg.principal(R4, "0")).label == "(2)"
    assert Rg.jacobson_radical_ring(R12, Rg.principal(R12, "1")).members == frozenset(R12.elements)
    # a=2, b=1: 2 + 2c + c = 2 + 3c is never 0 mod 12
    assert not any(R12.add("2", R12.mul("3", c)) == "0" for c in R12.elements)


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_jacobson_matches_independent_intersection(R):
    ideals = ideal_oracle(R)
    full = frozenset(R.elements)
    maxs = [I for I in ideals if I != full and not any(I < J for J in ideals if J != full)]
    for I in Rg.enumerate_ring_ideals(R):
        above = [M for M in maxs if I.members <= M]
        oracle = frozenset.intersection(*above) if above else full
        assert Rg.jacobson_radical_ring(R, I).members == oracle


def test_almost_maximal_examples():
    R = Rg.zmod(12)
    P2, P3 = Rg.principal(R, "2"), Rg.principal(R, "3")
    assert Rg.is_almost_maximal(R, P2) and Rg.is_maximal_ring_ideal(P2)
    assert Rg.is_almost_maximal(R, P3)


@pytest.mark.parametrize("R", TINY, ids=lambda R: R.name)
def test_almost_maximal_reduction_matches_families(R):
    for P in Rg.prime_ring_ideals(R):
        assert Rg.is_almost_maximal(R, P) == Rg.is_almost_maximal_by_families(R, P)


# ---- homomorphisms ---------------------------------------------------------


def test_maximal_ring_hom_examples():
    R12, R4, R6, R2 = Rg.zmod(12), Rg.zmod(4), Rg.zmod(6), Rg.zmod(2)
    q = Rg.RingHom(R12, R4, {str(i): str(i % 4) for i in range(12)})
    assert q.preimage(Rg.principal(R4, "2")).label == "(2)"
    assert Rg.is_maximal_ring_hom(q)
    p = Rg.RingHom(R6, R2, {str(i): str(i % 2) for i in range(6)})
    assert p.preimage(Rg.principal(R2, "0")).label == "(2)"
    assert Rg.is_maximal_ring_hom(p)
    assert Rg.is_maximal_ring_hom(Rg.RingHom(R12, R12, {x: x for x in R12.elements}))


def test_non_unital_map_rejected():
    R6, R2 = Rg.zmod(6), Rg.zmod(2)
    with pytest.raises(StructureError):
        Rg.RingHom(R6, R2, {x: "0" for x in R6.elements})


@pytest.mark.parametrize("m", range(1, 13))
def test_ring_homs_between_cyclic_rings(m):
    for n in range(1, 13):
        homs = Rg.ring_homs(Rg.zmod(m), Rg.zmod(n))
        assert len(homs) == (1 if m % n == 0 else 0)


def test_maximal_hom_criteria_agree_on_small_rings():
    count = 0
    for R, S in itertools.product(SMALL, repeat=2):
        for f in Rg.ring_homs(R, S):
            count += 1
            # raises CriterionDisagreement if the two routes disagree
            Rg.is_maximal_ring_hom(f)
    assert count > 0


# ---- conjunctivity ---------------------------------------------------------


@pytest.mark.parametrize("R", CORPUS, ids=lambda R: R.name)
def test_conjunctivity_criteria(R):
    assert Rg.conjunctive_ring_sober_form(R) == Rg.conjunctive_ring_reticulation_form(R)
    assert Rg.is_conjunctive_ring(R)
    L = Rg.reticulation(R).lattice
    assert is_conjunctive(L) == is_eta_injective(L)
