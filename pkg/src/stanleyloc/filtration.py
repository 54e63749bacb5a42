"""Prime filtrations of S/I: verification, clean/pretty clean, fdepth and localization."""

from __future__ import annotations

import random
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import product

from .decomposition import StanleyDecomposition, StanleySpace
from .engine import DEFAULT_LIMITS, Limits, NodeBudget
from .errors import AmbientMismatch, DomainError, InvalidObject, ResourceLimit, TheoremViolation
from .monomial import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VarRef,
    as_prime,
    colon,
    contains,
    ideal_sum,
    localize,
    minimal_primes,
    project_monomial,
)


@dataclass(frozen=True)
class FiltrationStep:
    offset: Monomial
    prime: MonomialPrime

    def __post_init__(self):
        if self.offset.ambient != self.prime.ambient:
            raise AmbientMismatch("step offset and prime over different variables")

    def __str__(self) -> str:
        return f"({self.offset}, {self.prime})"


@dataclass(frozen=True)
class PrimeFiltration:
    ideal: MonomialIdeal
    steps: tuple[FiltrationStep, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        for s in self.steps:
            if s.offset.ambient != self.ideal.ambient:
                raise AmbientMismatch(f"step {s} not over the ideal's variables")

    @property
    def ambient(self):
        return self.ideal.ambient

    def support(self) -> frozenset[MonomialPrime]:
        return frozenset(s.prime for s in self.steps)

    def chain(self) -> list[MonomialIdeal]:
        """I_0, I_1, ..., I_r obtained by adjoining the offsets one at a time."""
        out = [self.ideal]
        for s in self.steps:
            out.append(ideal_sum(out[-1], s.offset))
        return out

    def __str__(self) -> str:
        return f"{self.ideal}: " + " ".join(str(s) for s in self.steps)


@dataclass(frozen=True)
class FiltrationVerdict:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        return "Valid" if self.ok else f"BadStep({self.index}): {self.reason}"


def verify_filtration(F: PrimeFiltration) -> FiltrationVerdict:
    current = F.ideal
    for i, step in enumerate(F.steps):
        if contains(current, step.offset):
            return FiltrationVerdict(False, i, f"{step.offset} already lies in {current}; inclusion not strict")
        q = colon(current, step.offset)
        if q != step.prime.to_ideal():
            return FiltrationVerdict(False, i, f"{current} : {step.offset} = {q}, not {step.prime}")
        current = ideal_sum(current, step.offset)
    if not current.is_unit():
        return FiltrationVerdict(False, len(F.steps), f"chain ends at {current}, not at S")
    return FiltrationVerdict(True)


def _require_valid(F: PrimeFiltration) -> None:
    verdict = verify_filtration(F)
    if not verdict:
        raise InvalidObject(f"invalid prime filtration: {verdict.describe()}")


def _min_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    if I.is_unit():
        return frozenset()
    if I.is_zero():
        return frozenset({MonomialPrime(I.ambient, frozenset())})
    return minimal_primes(I)


def _has_containment(primes) -> bool:
    return any(p < q for p in primes for q in primes)


def is_clean(F: PrimeFiltration) -> bool:
    _require_valid(F)
    supp = F.support()
    clean = supp == _min_primes(F.ideal)
    if clean == _has_containment(supp):
        raise TheoremViolation(
            f"clean={clean} disagrees with the no-containment test on support {sorted(map(str, supp))}"
        )
    return clean


def is_pretty_clean(F: PrimeFiltration) -> bool:
    _require_valid(F)
    primes = [s.prime for s in F.steps]
    return not any(primes[i] < primes[j] for i in range(len(primes)) for j in range(i + 1, len(primes)))


def fdepth_of(F: PrimeFiltration) -> int:
    _require_valid(F)
    if not F.steps:
        raise DomainError("the unit ideal has an empty filtration and no fdepth")
    return min(s.prime.dim for s in F.steps)


def filtration_to_decomposition(F: PrimeFiltration) -> StanleyDecomposition:
    """D(F): one space ``x^a K[Z]`` per step, Z the variables outside the prime."""
    _require_valid(F)
    return StanleyDecomposition(F.ideal, tuple(StanleySpace(s.offset, s.prime.complement()) for s in F.steps))


def localize_filtration(F: PrimeFiltration, j: VarRef) -> PrimeFiltration:
    """Image filtration after sending ``j`` to 1; steps whose prime contains ``j`` vanish."""
    j = F.ambient.index(j)
    _require_valid(F)
    out = PrimeFiltration(
        localize(F.ideal, j),
        tuple(FiltrationStep(project_monomial(s.offset, j), s.prime.project(j))
              for s in F.steps if j not in s.prime.variables),
    )
    verdict = verify_filtration(out)
    if not verdict:
        raise TheoremViolation(f"localized filtration failed verification: {verdict.describe()}")
    return out


# ---------------------------------------------------------------------------
# search

def offset_box(I: MonomialIdeal, slack: int = 0) -> list[tuple[int, ...]]:
    """Candidate offset exponents: the box ``[0, g + slack]``, g the lcm exponent."""
    if slack < 0:
        raise ValueError("slack must be non-negative")
    g = I.lcm_exponent()
    return list(product(*(range(x + slack + 1) for x in g)))


def prime_steps(J: MonomialIdeal, box) -> list[FiltrationStep]:
    """All one-step extensions of ``J`` with offsets in ``box``."""
    out = []
    for a in box:
        u = Monomial(J.ambient, a)
        if contains(J, u):
            continue
        p = as_prime(colon(J, u))
        if p is not None:
            out.append(FiltrationStep(u, p))
    return out


@contextmanager
def _recursion(depth: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, depth + 200))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def fdepth(I: MonomialIdeal, limits: Limits = DEFAULT_LIMITS, slack: int = 0) -> tuple[int, PrimeFiltration]:
    """Largest fdepth over prime filtrations whose offsets lie in the g-box (plus ``slack``).

    Memoized over the intermediate ideals; a branch stops early once it
    reaches the smallest dimension among the current minimal primes, which
    every filtration of that ideal must visit.
    """
    if I.is_unit():
        raise DomainError("fdepth needs a proper ideal")
    box = offset_box(I, slack)
    if len(box) > 64 * limits.max_poset:
        raise ResourceLimit(f"offset box has {len(box)} points")
    budget = NodeBudget(limits.max_nodes)
    n = len(I.ambient)
    memo: dict[MonomialIdeal, tuple[int, FiltrationStep | None]] = {}

    def best(J: MonomialIdeal) -> int:
        if J.is_unit():
            return n + 1  # no further steps
        if J in memo:
            return memo[J][0]
        cap = min(p.dim for p in _min_primes(J))
        value, choice = -1, None
        for step in prime_steps(J, box):
            budget.tick()
            if step.prime.dim <= value:
                continue
            v = min(step.prime.dim, best(ideal_sum(J, step.offset)))
            if v > value:
                value, choice = v, step
                if value >= cap:
                    break
        if choice is None:
            raise AssertionError(f"no prime step from {J}")  # pragma: no cover
        memo[J] = (value, choice)
        return value

    with _recursion(len(box) * 4):
        value = best(I)
    steps = []
    J = I
    while not J.is_unit():
        step = memo[J][1]
        steps.append(step)
        J = ideal_sum(J, step.offset)
    F = PrimeFiltration(I, tuple(steps))
    _require_valid(F)
    return value, F


def random_filtration(I: MonomialIdeal, rng: random.Random, slack: int = 0) -> PrimeFiltration:
    """A valid prime filtration chosen by a uniform random walk over one-step extensions."""
    if I.is_unit():
        return PrimeFiltration(I, ())
    box = offset_box(I, slack)
    J, steps = I, []
    while not J.is_unit():
        step = rng.choice(prime_steps(J, box))
        steps.append(step)
        J = ideal_sum(J, step.offset)
    return PrimeFiltration(I, tuple(steps))
