"""Exact Stanley depth of S/I through interval partitions of the characteristic poset.

The characteristic poset of S/I is the set of exponent vectors ``e <= g``
with ``x^e`` outside I, where ``g`` is the lcm exponent of the minimal
generators. For a partition of it into intervals ``[c, d]``, the value is the
minimum of ``rho(d) = #{j : d_j = g_j}``; sdepth(S/I) is the maximum value
over all partitions.

Any interval splits into sub-intervals whose upper point agrees with the
lower point off ``Z(d)`` and with ``g`` on ``Z(d)``, without changing rho.
The search only enumerates these *normalized* intervals, and in a partition
the lexicographically least uncovered point must be the lower end of the
interval covering it, which fixes the branching point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod
from typing import Sequence

from .decomposition import StanleyDecomposition, StanleySpace, verify
from .errors import DomainError, InvalidObject, ResourceLimit, TheoremViolation
from .monomial import Monomial, MonomialIdeal

DEFAULT_MAX_POSET = 5000
DEFAULT_MAX_NODES = 10**7

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Limits:
    max_poset: int = DEFAULT_MAX_POSET
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self):
        if self.max_poset < 1 or self.max_nodes < 1:
            raise ValueError("resource limits must be positive")


DEFAULT_LIMITS = Limits()


class NodeBudget:
    """Counts search nodes and raises once the budget is spent."""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimit(f"search node budget of {self.limit} exhausted")


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class CharacteristicPoset:
    ideal: MonomialIdeal
    g: Vector
    points: tuple[Vector, ...]
    index: dict = field(compare=False, repr=False, hash=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, e: Vector) -> bool:
        return tuple(e) in self.index

    def rho(self, d: Sequence[int]) -> int:
        return sum(1 for x, y in zip(d, self.g) if x == y)

    def free_set(self, d: Sequence[int]) -> frozenset[int]:
        return frozenset(j for j, (x, y) in enumerate(zip(d, self.g)) if x == y)


def build_poset(I: MonomialIdeal, max_points: int = DEFAULT_MAX_POSET) -> CharacteristicPoset:
    if I.is_unit():
        raise DomainError("S/I is zero for the unit ideal; no characteristic poset")
    g = I.lcm_exponent()
    volume = prod(x + 1 for x in g)
    if volume > 64 * max_points:
        raise ResourceLimit(f"poset box has {volume} lattice points, limit is {max_points} poset points")
    gens = I.exponents
    points = []
    for e in product(*(range(x + 1) for x in g)):
        if not any(leq(u, e) for u in gens):
            points.append(e)
            if len(points) > max_points:
                raise ResourceLimit(f"characteristic poset exceeds {max_points} points")
    return CharacteristicPoset(I, g, tuple(points), {p: i for i, p in enumerate(points)})


@dataclass(frozen=True, order=True)
class Interval:
    lower: Vector
    upper: Vector

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(self.lower))
        object.__setattr__(self, "upper", tuple(self.upper))
        if len(self.lower) != len(self.upper) or not leq(self.lower, self.upper):
            raise ValueError(f"not an interval: {self.lower} .. {self.upper}")

    def points(self):
        return product(*(range(a, b + 1) for a, b in zip(self.lower, self.upper)))

    def __contains__(self, e) -> bool:
        return leq(self.lower, e) and leq(e, self.upper)


@dataclass(frozen=True)
class IntervalPartition:
    g: Vector
    intervals: tuple[Interval, ...]

    @property
    def value(self) -> int:
        if not self.intervals:
            raise DomainError("empty partition has no value")
        return min(sum(1 for x, y in zip(iv.upper, self.g) if x == y) for iv in self.intervals)

    def to_json(self) -> dict:
        return {
            "g": list(self.g),
            "value": self.value,
            "intervals": [{"lower": list(iv.lower), "upper": list(iv.upper)} for iv in self.intervals],
        }

    @classmethod
    def from_json(cls, data: dict) -> IntervalPartition:
        return cls(
            tuple(data["g"]),
            tuple(Interval(tuple(iv["lower"]), tuple(iv["upper"])) for iv in data["intervals"]),
        )


def check_partition(poset: CharacteristicPoset, P: IntervalPartition) -> str | None:
    """Return a reason string if ``P`` does not partition ``poset``, else None."""
    if tuple(P.g) != poset.g:
        return f"partition uses g={P.g}, poset has g={poset.g}"
    seen: dict[Vector, Interval] = {}
    for iv in P.intervals:
        if len(iv.upper) != len(poset.g):
            return f"interval {iv} has wrong length"
        if iv.upper not in poset:
            return f"upper point {iv.upper} is not in the poset"
        for e in iv.points():
            if e in seen:
                return f"point {e} lies in two intervals"
            seen[e] = iv
    if len(seen) != len(poset):
        missing = next(p for p in poset.points if p not in seen)
        return f"point {missing} is not covered"
    return None


@dataclass(frozen=True)
class _Candidate:
    mask: int
    upper: Vector
    rho: int


def _candidates(poset: CharacteristicPoset) -> list[list[_Candidate]]:
    """Normalized intervals starting at each point, widest and lex-largest first."""
    g = poset.g
    idx = poset.index
    out = []
    for c in poset.points:
        open_coords = [j for j in range(len(g)) if c[j] < g[j]]
        cands = []
        for k in range(len(open_coords), -1, -1):
            for Z in combinations(open_coords, k):
                d = list(c)
                for j in Z:
                    d[j] = g[j]
                d = tuple(d)
                if d not in idx:
                    continue
                mask = 0
                for e in product(*(range(a, b + 1) for a, b in zip(c, d))):
                    mask |= 1 << idx[e]
                cands.append(_Candidate(mask, d, poset.rho(d)))
        cands.sort(key=lambda cd: (-cd.rho, tuple(-x for x in cd.upper)))
        out.append(cands)
    return out


def _cover(npts: int, cands: list[list[_Candidate]], t: int, budget: NodeBudget) -> list[tuple[int, _Candidate]] | None:
    """Exact cover of all points by candidates with rho >= t, or None."""
    full = (1 << npts) - 1
    usable = [[cd for cd in cs if cd.rho >= t] for cs in cands]
    if any(not cs for cs in usable):
        return None

    def options(covered: int):
        free = full & ~covered
        p = (free & -free).bit_length() - 1
        return p, iter([cd for cd in usable[p] if not cd.mask & covered])

    failed: set[int] = set()
    chosen: list[tuple[int, _Candidate]] = []
    stack = [(0, *options(0))]
    while stack:
        covered, p, it = stack[-1]
        for cd in it:
            nxt = covered | cd.mask
            if nxt in failed:
                continue
            budget.tick()
            chosen.append((p, cd))
            if nxt == full:
                return chosen
            stack.append((nxt, *options(nxt)))
            break
        else:
            failed.add(covered)
            stack.pop()
            if chosen:
                chosen.pop()
    return None


def sdepth(I: MonomialIdeal, limits: Limits = DEFAULT_LIMITS) -> tuple[int, IntervalPartition]:
    """sdepth(S/I) with an optimal interval partition as witness."""
    poset = build_poset(I, limits.max_poset)
    cands = _candidates(poset)
    budget = NodeBudget(limits.max_nodes)
    top = min(len(poset.g), max(cd.rho for cd in cands[0]))
    for t in range(top, -1, -1):
        found = _cover(len(poset), cands, t, budget)
        if found is not None:
            intervals = tuple(Interval(poset.points[p], cd.upper) for p, cd in found)
            part = IntervalPartition(poset.g, intervals)
            return part.value, part
    raise AssertionError("the singleton partition always exists")  # pragma: no cover


def partition_to_decomposition(I: MonomialIdeal, P: IntervalPartition,
                               max_points: int = DEFAULT_MAX_POSET) -> StanleyDecomposition:
    """Stanley decomposition induced by an interval partition.

    ``[c, d]`` contributes ``x^e K[Z(d)]`` for each ``e`` in the interval that
    agrees with ``c`` on ``Z(d)``; a normalized interval yields one space.
    """
    poset = build_poset(I, max_points)
    reason = check_partition(poset, P)
    if reason:
        raise InvalidObject(f"not a partition of the characteristic poset: {reason}")
    amb = I.ambient
    spaces = []
    for iv in P.intervals:
        Z = poset.free_set(iv.upper)
        ranges = [range(iv.lower[j], iv.lower[j] + 1) if j in Z else range(iv.lower[j], iv.upper[j] + 1)
                  for j in range(len(amb))]
        for e in product(*ranges):
            spaces.append(StanleySpace(Monomial(amb, e), Z))
    D = StanleyDecomposition(I, tuple(spaces))
    verdict = verify(D)
    if not verdict:
        raise TheoremViolation(f"decomposition from partition failed verification: {verdict.describe()}")
    return D


def sdepth_decomposition(I: MonomialIdeal, limits: Limits = DEFAULT_LIMITS) -> tuple[int, StanleyDecomposition]:
    value, part = sdepth(I, limits)
    return value, partition_to_decomposition(I, part, limits.max_poset)
