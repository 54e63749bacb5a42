import random

import pytest

from oracles import is_partition_of_complement
from stanleyloc.checks import random_ideal
from stanleyloc.decomposition import (
    StanleyDecomposition,
    StanleySpace,
    localize_decomposition,
    sdepth_of,
    space_contains,
    verification_box,
    verify,
)
from stanleyloc.engine import sdepth_decomposition
from stanleyloc.errors import AmbientMismatch, DomainError, InvalidObject
from stanleyloc.monomial import Monomial, MonomialIdeal, VariableSet, ideal, parse_monomial


def decomp(I, *spaces):
    amb = I.ambient
    return StanleyDecomposition(I, tuple(StanleySpace.of(parse_monomial(u, amb), z.split()) for u, z in spaces))


EX33 = decomp(ideal("x y", "x*y"), ("x", "x"), ("1", "y"))
EX35 = decomp(ideal("x y z", "x*y*z"), ("1", "x z"), ("y", "x y"), ("z*y", "y z"))


def test_space_contains():
    amb = VariableSet(("x", "y"))
    xKx = StanleySpace.of(parse_monomial("x", amb), ["x"])
    assert space_contains(xKx, parse_monomial("x^3", amb))
    assert not space_contains(xKx, parse_monomial("x*y", amb))
    u = parse_monomial("x*y^2", amb)
    point = StanleySpace(u, frozenset())
    members = [Monomial(amb, (a, b)) for a in range(4) for b in range(4) if space_contains(point, Monomial(amb, (a, b)))]
    assert members == [u]
    with pytest.raises(AmbientMismatch):
        space_contains(xKx, parse_monomial("x", VariableSet(("x",))))


def test_verify_examples():
    assert verify(EX33).ok
    assert verify(EX35).ok
    bad = decomp(ideal("x y", "x*y"), ("x", "x"), ("1", "x y"))
    v = verify(bad)
    assert v.kind == "overlap"
    assert str(v.witness) == "x"


def test_verify_gap_and_leak():
    gap = decomp(ideal("x y z", "x*y*z"), ("1", "x z"), ("y", "x y"))
    v = verify(gap)
    assert v.kind == "gap"
    assert v.witness.exponents[1] >= 1 and v.witness.exponents[2] >= 1
    leak = decomp(ideal("x y", "x*y"), ("x", "x y"), ("1", "y"))
    assert verify(leak).kind == "leak"


def test_ambient_mismatch_in_spaces():
    with pytest.raises(AmbientMismatch):
        StanleyDecomposition(ideal("x y", "x*y"), (StanleySpace(VariableSet(("x",)).one(), frozenset()),))


def test_sdepth_of():
    assert sdepth_of(EX35) == 2
    assert sdepth_of(EX33) == 1
    amb = VariableSet(("x", "y", "z"))
    free = StanleyDecomposition(MonomialIdeal.zero(amb), (StanleySpace(amb.one(), frozenset(range(3))),))
    assert verify(free).ok and sdepth_of(free) == 3
    with pytest.raises(DomainError):
        sdepth_of(StanleyDecomposition(ideal("x y", "x*y"), ()))


def test_localize_decomposition_examples():
    D2 = localize_decomposition(EX35, "z")
    assert D2 == decomp(ideal("x y", "x*y"), ("1", "x"), ("y", "y"))
    assert sdepth_of(D2) == 1
    D3 = localize_decomposition(EX33, "x")
    assert D3.ideal == ideal("y", "y")
    assert D3.spaces == (StanleySpace(D3.ambient.one(), frozenset()),)
    assert sdepth_of(D3) == 0


def test_localize_when_every_space_is_free_in_j():
    D = decomp(ideal("x y z", "x*y"), ("1", "x z"), ("y", "y z"))
    assert verify(D).ok
    D2 = localize_decomposition(D, "z")
    assert len(D2.spaces) == len(D.spaces)
    assert sorted(s.dim for s in D2.spaces) == sorted(s.dim - 1 for s in D.spaces)


def test_localize_rejects_invalid_input():
    broken = decomp(ideal("x y z", "x*y*z"), ("1", "x z"), ("y", "x y"))
    with pytest.raises(InvalidObject):
        localize_decomposition(broken, "z")


def test_nilpotent_corner_gives_empty_decomposition():
    # x^2 in I: no space has x free, and x -> 1 gives the unit ideal
    D = decomp(ideal("x y", "x^2"), ("1", "y"), ("x", "y"))
    assert verify(D).ok
    D2 = localize_decomposition(D, "x")
    assert D2.spaces == () and D2.ideal.is_unit() and verify(D2).ok


def test_decomposition_equality_is_order_insensitive():
    a = decomp(ideal("x y", "x*y"), ("x", "x"), ("1", "y"))
    b = decomp(ideal("x y", "x*y"), ("1", "y"), ("x", "x"))
    assert a == b and hash(a) == hash(b)


def _perturbations(D, rng):
    spaces = list(D.spaces)
    n = len(D.ambient)
    i = rng.randrange(len(spaces))
    s = spaces[i]
    yield tuple(spaces[:i] + spaces[i + 1:])
    missing = [j for j in range(n) if j not in s.free_vars]
    if missing:
        yield tuple(spaces[:i] + [StanleySpace(s.offset, s.free_vars | {rng.choice(missing)})] + spaces[i + 1:])
    j = rng.randrange(n)
    e = list(s.offset.exponents)
    e[j] += 1
    yield tuple(spaces[:i] + [StanleySpace(Monomial(D.ambient, tuple(e)), s.free_vars)] + spaces[i + 1:])


def test_verify_matches_set_semantics_and_perturbations_flip():
    rng = random.Random(5)
    for _ in range(60):
        I = random_ideal(rng, max_vars=3)
        _, D = sdepth_decomposition(I)
        n = len(I.ambient)
        as_raw = lambda sp: [(s.offset.exponents, s.free_vars) for s in sp]
        bound = max(verification_box(D)) + 2
        assert verify(D).ok
        assert is_partition_of_complement(I.exponents, as_raw(D.spaces), n, bound)
        for spaces in _perturbations(D, rng):
            P = StanleyDecomposition(I, spaces)
            big = max(verification_box(P)) + 2
            assert not verify(P).ok
            assert verify(P).ok == is_partition_of_complement(I.exponents, as_raw(spaces), n, big)
