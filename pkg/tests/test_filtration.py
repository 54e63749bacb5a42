import random

import pytest

from stanleyloc.checks import random_ideal
from stanleyloc.decomposition import StanleySpace, localize_decomposition, sdepth_of, verify
from stanleyloc.engine import sdepth
from stanleyloc.errors import InvalidObject
from stanleyloc.filtration import (
    FiltrationStep,
    PrimeFiltration,
    fdepth,
    fdepth_of,
    filtration_to_decomposition,
    is_clean,
    is_pretty_clean,
    localize_filtration,
    random_filtration,
    verify_filtration,
)
from stanleyloc.monomial import MonomialIdeal, MonomialPrime, VariableSet, ideal, parse_monomial


def filt(I, *steps):
    amb = I.ambient
    return PrimeFiltration(I, tuple(
        FiltrationStep(parse_monomial(u, amb), MonomialPrime.on(amb, p.split())) for u, p in steps))


XY_F = filt(ideal("x y", "x*y"), ("y", "x"), ("1", "y"))
X2XY_F = filt(ideal("x y", "x^2", "x*y"), ("x", "x y"), ("1", "x"))


def test_verify_filtration_examples():
    assert verify_filtration(XY_F).ok
    assert verify_filtration(X2XY_F).ok
    bad = filt(ideal("x y", "x*y"), ("x", "x"))
    v = verify_filtration(bad)
    assert not v.ok and v.index == 0 and "(y)" in v.reason


def test_verify_filtration_failure_modes():
    short = filt(ideal("x y", "x*y"), ("y", "x"))
    v = verify_filtration(short)
    assert v.index == 1 and "not at S" in v.reason
    repeat = filt(ideal("x y", "x*y"), ("y", "x"), ("y", "x"), ("1", "y"))
    assert verify_filtration(repeat).index == 1


def test_clean_predicates():
    assert is_clean(XY_F) and is_pretty_clean(XY_F)
    assert not is_clean(X2XY_F)
    assert is_pretty_clean(X2XY_F)
    # (x) before (x, y): a smaller prime comes first
    swapped = filt(ideal("x y", "x^2", "x*y"), ("y", "x"), ("x", "x y"), ("1", "x y"))
    assert verify_filtration(swapped).ok
    assert not is_pretty_clean(swapped)
    with pytest.raises(InvalidObject):
        is_clean(filt(ideal("x y", "x*y"), ("x", "x")))


def test_fdepth_of_examples():
    assert fdepth_of(XY_F) == 1
    assert fdepth_of(X2XY_F) == 0
    amb = VariableSet(("x", "y", "z"))
    zero = PrimeFiltration(MonomialIdeal.zero(amb), (FiltrationStep(amb.one(), MonomialPrime(amb, frozenset())),))
    assert fdepth_of(zero) == 3


def test_fdepth_search_examples():
    value, F = fdepth(ideal("x y", "x*y"))
    assert value == 1 and verify_filtration(F).ok and fdepth_of(F) == 1
    value, F = fdepth(ideal("x y", "x^2", "x*y"))
    assert value == 0 and verify_filtration(F).ok


def test_fdepth_never_exceeds_sdepth():
    rng = random.Random(12)
    for _ in range(40):
        I = random_ideal(rng, max_vars=3)
        value, F = fdepth(I)
        assert value == fdepth_of(F)
        assert value <= sdepth(I)[0]


def test_filtration_to_decomposition_examples():
    D = filtration_to_decomposition(XY_F)
    amb = XY_F.ambient
    assert D.space_set() == {StanleySpace.of(parse_monomial("y", amb), ["y"]), StanleySpace.of(amb.one(), ["x"])}
    assert verify(D).ok
    D = filtration_to_decomposition(X2XY_F)
    amb = X2XY_F.ambient
    assert D.space_set() == {StanleySpace(parse_monomial("x", amb), frozenset()), StanleySpace.of(amb.one(), ["y"])}
    amb3 = VariableSet(("x", "y", "z"))
    zero = PrimeFiltration(MonomialIdeal.zero(amb3), (FiltrationStep(amb3.one(), MonomialPrime(amb3, frozenset())),))
    D = filtration_to_decomposition(zero)
    assert D.spaces == (StanleySpace(amb3.one(), frozenset({0, 1, 2})),) and verify(D).ok


def test_localize_filtration_examples():
    G = localize_filtration(XY_F, "y")
    assert G == filt(ideal("x", "x"), ("1", "x"))
    G = localize_filtration(X2XY_F, "y")
    assert G == filt(ideal("x", "x"), ("1", "x"))
    F = filt(ideal("x y z", "x*y"), ("y", "x"), ("1", "y"))
    G = localize_filtration(F, "z")
    assert len(G.steps) == 2 and G.ideal == ideal("x y", "x*y")


def test_random_filtrations_localize_consistently():
    rng = random.Random(21)
    for _ in range(40):
        I = random_ideal(rng, max_vars=3)
        F = random_filtration(I, rng)
        assert verify_filtration(F).ok
        D = filtration_to_decomposition(F)
        assert verify(D).ok and sdepth_of(D) == fdepth_of(F)
        for j in range(len(I.ambient)):
            G = localize_filtration(F, j)
            assert verify_filtration(G).ok
            assert G.support() <= {p.project(j) for p in F.support() if j not in p.variables}
            if G.steps:
                assert fdepth_of(G) >= fdepth_of(F) - 1
            # D(localized F) equals the localized D(F)
            assert filtration_to_decomposition(G).space_set() == localize_decomposition(D, j).space_set()
