import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import minimal_transversals
from stanleyloc.errors import AmbientMismatch, DomainError, ExponentOverflow, ParseError
from stanleyloc.monomial import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VariableSet,
    as_prime,
    colon,
    contains,
    divides,
    gcd_monomial,
    ideal,
    lcm_monomial,
    localize,
    minimal_primes,
    minimalize,
    parse_ideal,
    parse_monomial,
    project_monomial,
)

XY = VariableSet(("x", "y"))
XYZW = VariableSet(("x", "y", "z", "w"))


def m(text, amb=XY):
    return parse_monomial(text, amb)


def test_divides():
    assert divides(m("1"), m("x^2*y"))
    assert not divides(m("x*y"), m("x"))
    assert divides(m("x"), m("x*y"))


def test_gcd_lcm():
    assert gcd_monomial(m("x^2*y"), m("x*y^3")) == m("x*y")
    assert gcd_monomial(m("x^2*y"), m("1")) == m("1")
    assert lcm_monomial(m("x^2"), m("y")) == m("x^2*y")


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        divides(m("x"), parse_monomial("x", XYZW))
    with pytest.raises(AmbientMismatch):
        colon(ideal("x y", "x"), parse_monomial("x", XYZW))


def test_minimalize():
    xyz = VariableSet(("x", "y", "z"))
    assert minimalize([m("x^2"), m("x"), m("x*y")]) == ideal("x y", "x")
    assert minimalize([parse_monomial("x*y", xyz), parse_monomial("x*z", xyz)]).generators == (
        parse_monomial("x*z", xyz), parse_monomial("x*y", xyz))
    assert minimalize([], XY).is_zero()
    assert minimalize([m("x"), m("1"), m("y")]).is_unit()


def test_contains():
    I = ideal("x y", "x*y")
    assert not contains(I, m("x"))
    assert contains(I, m("x^2*y"))
    assert contains(MonomialIdeal.unit(XY), m("1"))
    assert not any(contains(MonomialIdeal.zero(XY), Monomial(XY, e)) for e in product(range(3), repeat=2))


def test_colon_examples():
    assert colon(ideal("x y", "x*y"), m("x")) == ideal("x y", "y")
    assert colon(ideal("x y", "x^2", "x*y"), m("x")) == ideal("x y", "x", "y")
    I = ideal("x y z w", "x*y", "x*z", "x*w")
    assert colon(I, parse_monomial("x", XYZW)) == ideal("x y z w", "y", "z", "w")
    assert colon(I, XYZW.one()) == I


def test_as_prime():
    assert as_prime(ideal("x y", "x", "y")) == MonomialPrime.on(XY, "xy")
    assert as_prime(ideal("x y", "x*y")) is None
    assert as_prime(MonomialIdeal.zero(XY)) == MonomialPrime(XY, frozenset())
    assert as_prime(MonomialIdeal.unit(XY)) is None


def test_minimal_primes_examples():
    assert minimal_primes(ideal("x y", "x*y")) == {MonomialPrime.on(XY, ["x"]), MonomialPrime.on(XY, ["y"])}
    assert minimal_primes(ideal("x y", "x^2", "x*y")) == {MonomialPrime.on(XY, ["x"])}
    assert minimal_primes(ideal("x y z w", "x*y", "x*z", "x*w")) == {
        MonomialPrime.on(XYZW, ["x"]), MonomialPrime.on(XYZW, ["y", "z", "w"])}
    with pytest.raises(DomainError):
        minimal_primes(MonomialIdeal.unit(XY))
    with pytest.raises(DomainError):
        minimal_primes(MonomialIdeal.zero(XY))


def test_localize_examples():
    assert localize(ideal("x y z", "x*y*z"), "z") == ideal("x y", "x*y")
    assert localize(ideal("x y z w", "x*y", "x*z", "x*w"), "w") == ideal("x y z", "x")
    assert localize(ideal("x y z", "x^2*y", "y*z"), "z") == ideal("x y", "y")
    assert localize(ideal("x y", "x*y"), "x").ambient.names == ("y",)
    with pytest.raises(DomainError):
        localize(ideal("x y", "x*y"), 5)
    with pytest.raises(DomainError):
        localize(ideal("x y", "x*y"), "q")


def test_exponent_overflow():
    with pytest.raises(ExponentOverflow):
        Monomial(XY, (2**31, 0))
    with pytest.raises(ParseError):
        parse_monomial("x^99999999999", XY)


def test_parse_ideal():
    text = """
    # a comment
    vars x y z
    gen x^2*y
    gen x*x*y
    gen y*z
    """
    I = parse_ideal(text)
    assert I == ideal("x y z", "x^2*y", "y*z")
    assert parse_ideal("vars x y\ngen 1\ngen x").is_unit()
    assert parse_ideal("vars x y\n").is_zero()
    for bad in ["gen x\n", "vars x y\ngen q", "vars x y\ngen x^0", "vars x x", "vars x\nfoo x", ""]:
        with pytest.raises(ParseError):
            parse_ideal(bad)


# ---------------------------------------------------------------------------
# properties

exps = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)
XYZ = VariableSet(("x", "y", "z"))


def _ideal(vectors):
    return MonomialIdeal.from_exponents(XYZ, vectors)


@settings(max_examples=200, deadline=None)
@given(st.lists(exps, min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_minimalize_canonical(vectors, rnd):
    I = _ideal(vectors)
    gens = list(I.generators)
    # inject redundant multiples and shuffle
    extra = [g * Monomial(XYZ, (rnd.randint(0, 2), rnd.randint(0, 2), rnd.randint(0, 2))) for g in gens]
    mixed = gens + extra + gens
    rnd.shuffle(mixed)
    J = minimalize(mixed)
    assert J == I
    assert minimalize(J.generators) == J
    assert list(J.generators) == sorted(J.generators)
    for a in J.generators:
        for b in J.generators:
            assert a == b or not divides(a, b)


@settings(max_examples=200, deadline=None)
@given(st.lists(exps, min_size=0, max_size=5), exps)
def test_colon_membership_oracle(vectors, a):
    I = _ideal(vectors)
    u = Monomial(XYZ, a)
    Q = colon(I, u)
    bound = max((sum(v) for v in vectors), default=0) + sum(a) + 2
    for e in product(range(bound + 1), repeat=3):
        if sum(e) > bound:
            continue
        v = Monomial(XYZ, e)
        assert contains(Q, v) == contains(I, v * u)


@settings(max_examples=300, deadline=None)
@given(st.lists(exps, min_size=0, max_size=5), exps, st.integers(0, 2))
def test_localize_commutes_with_colon(vectors, a, j):
    I = _ideal(vectors)
    u = Monomial(XYZ, a)
    assert localize(colon(I, u), j) == colon(localize(I, j), project_monomial(u, j))


@settings(max_examples=200, deadline=None)
@given(st.lists(exps, min_size=1, max_size=5), exps, st.integers(0, 2))
def test_membership_transport(vectors, e, j):
    I = _ideal(vectors)
    u = Monomial(XYZ, e)
    if contains(I, u):
        assert contains(localize(I, j), project_monomial(u, j))


def test_minimal_primes_match_transversal_oracle():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 6)
        amb = VariableSet(tuple(f"x{i}" for i in range(1, n + 1)))
        vecs = []
        for _ in range(rng.randint(1, 5)):
            e = [0] * n
            while not any(e):
                e = [rng.choice([0, 0, 1, 2]) for _ in range(n)]
            vecs.append(tuple(e))
        I = MonomialIdeal.from_exponents(amb, vecs)
        expected = minimal_transversals([g.support() for g in I.generators], n)
        assert {p.variables for p in minimal_primes(I)} == expected
