"""Stanley decompositions of S/I: exact verification and localization."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .errors import AmbientMismatch, DomainError, InvalidObject, TheoremViolation
from .monomial import (
    Monomial,
    MonomialIdeal,
    VariableSet,
    VarRef,
    format_monomial,
    localize,
    project_monomial,
)


@dataclass(frozen=True)
class StanleySpace:
    """The space ``offset * K[free_vars]``."""

    offset: Monomial
    free_vars: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "free_vars", frozenset(self.free_vars))
        n = len(self.offset.ambient)
        if any(not 0 <= v < n for v in self.free_vars):
            raise ValueError(f"free variables {sorted(self.free_vars)} out of range")

    @classmethod
    def of(cls, offset: Monomial, names: Iterable[VarRef]) -> StanleySpace:
        return cls(offset, frozenset(offset.ambient.index(v) for v in names))

    @property
    def ambient(self) -> VariableSet:
        return self.offset.ambient

    @property
    def dim(self) -> int:
        return len(self.free_vars)

    @property
    def free_names(self) -> tuple[str, ...]:
        return tuple(self.ambient.names[i] for i in sorted(self.free_vars))

    def __str__(self) -> str:
        head = "" if self.offset.is_one() else str(self.offset)
        body = ",".join(self.free_names)
        return f"{head}K[{body}]" if body else f"{head}K"


def _in_space(offset: tuple[int, ...], free: frozenset[int], e: tuple[int, ...]) -> bool:
    for j, (o, x) in enumerate(zip(offset, e)):
        if j in free:
            if x < o:
                return False
        elif x != o:
            return False
    return True


def space_contains(s: StanleySpace, u: Monomial) -> bool:
    if s.ambient != u.ambient:
        raise AmbientMismatch("space and monomial over different variables")
    return _in_space(s.offset.exponents, s.free_vars, u.exponents)


@dataclass(frozen=True)
class StanleyDecomposition:
    ideal: MonomialIdeal
    spaces: tuple[StanleySpace, ...]

    def __post_init__(self):
        spaces = tuple(self.spaces)
        object.__setattr__(self, "spaces", spaces)
        for s in spaces:
            if s.ambient != self.ideal.ambient:
                raise AmbientMismatch(
                    f"space {s} lives over {s.ambient.names}, ideal over {self.ideal.ambient.names}"
                )

    @property
    def ambient(self) -> VariableSet:
        return self.ideal.ambient

    def space_set(self) -> frozenset[StanleySpace]:
        return frozenset(self.spaces)

    def __eq__(self, other):
        # direct sums are unordered
        if not isinstance(other, StanleyDecomposition):
            return NotImplemented
        return self.ideal == other.ideal and self.space_set() == other.space_set()

    def __hash__(self):
        return hash((self.ideal, self.space_set()))

    def __str__(self) -> str:
        return " ⊕ ".join(str(s) for s in self.spaces) if self.spaces else "0"


@dataclass(frozen=True)
class Verdict:
    """Result of :func:`verify`: ``kind`` is valid, overlap, gap or leak."""

    kind: str
    witness: Monomial | None = None
    spaces: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return self.kind == "valid"

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "Valid"
        where = f" (spaces {', '.join(map(str, self.spaces))})" if self.spaces else ""
        return f"{self.kind.capitalize()}({self.witness}){where}"


VALID = Verdict("valid")


def verification_box(D: StanleyDecomposition) -> tuple[int, ...]:
    """Per-coordinate bound B beyond which no membership test can change."""
    n = len(D.ambient)
    vecs = list(D.ideal.exponents) + [s.offset.exponents for s in D.spaces]
    return tuple(1 + max((v[j] for v in vecs), default=0) for j in range(n))


def verify(D: StanleyDecomposition) -> Verdict:
    """Decide whether the spaces partition the monomials outside the ideal.

    Every exponent vector in the box ``[0, B]`` is tested; coordinates larger
    than ``B_j`` behave exactly like ``B_j`` against all offsets and
    generators, so the finite check settles the infinite condition.
    """
    amb = D.ambient
    gens = D.ideal.exponents
    spaces = [(s.offset.exponents, s.free_vars) for s in D.spaces]
    box = verification_box(D)
    for e in product(*(range(b + 1) for b in box)):
        hits = [i for i, (o, z) in enumerate(spaces) if _in_space(o, z, e)]
        in_ideal = any(all(a <= b for a, b in zip(g, e)) for g in gens)
        if in_ideal:
            if hits:
                return Verdict("leak", Monomial(amb, e), (hits[0],))
        elif not hits:
            return Verdict("gap", Monomial(amb, e))
        elif len(hits) > 1:
            return Verdict("overlap", Monomial(amb, e), tuple(hits[:2]))
    return VALID


def sdepth_of(D: StanleyDecomposition) -> int:
    if not D.spaces:
        if D.ideal.is_unit():
            return 0
        raise DomainError("a proper ideal needs at least one Stanley space")
    return min(s.dim for s in D.spaces)


def project_space(s: StanleySpace, j: int) -> StanleySpace:
    if j not in s.free_vars:
        raise DomainError(f"variable {s.ambient.names[j]} is not free in {s}")
    return StanleySpace(
        project_monomial(s.offset, j),
        frozenset(v - (v > j) for v in s.free_vars if v != j),
    )


def localize_decomposition(D: StanleyDecomposition, j: VarRef) -> StanleyDecomposition:
    """Keep the spaces with ``j`` free and drop ``j`` from each of them.

    The input must verify; the image is re-verified over the localized ideal.
    """
    j = D.ambient.index(j)
    verdict = verify(D)
    if not verdict:
        raise InvalidObject(f"input decomposition is not valid: {verdict.describe()}")
    out = StanleyDecomposition(
        localize(D.ideal, j),
        tuple(project_space(s, j) for s in D.spaces if j in s.free_vars),
    )
    check = verify(out)
    if not check:
        raise TheoremViolation(f"localized decomposition failed verification: {check.describe()}")
    return out


# ---------------------------------------------------------------------------
# text / JSON

def format_space_line(s: StanleySpace, keyword: str = "space") -> str:
    return f"{keyword} {s.offset} | {' '.join(s.free_names)}".rstrip()


def format_decomposition(D: StanleyDecomposition) -> str:
    out = ["vars " + " ".join(D.ambient.names)]
    out += [f"gen {g}" for g in D.ideal.generators]
    out += [format_space_line(s) for s in D.spaces]
    return "\n".join(out) + "\n"


def decomposition_to_json(D: StanleyDecomposition) -> dict:
    names = D.ambient.names
    return {
        "vars": list(names),
        "gens": [str(g) for g in D.ideal.generators],
        "spaces": [
            {"offset": format_monomial(s.offset.exponents, names), "free": list(s.free_names)}
            for s in D.spaces
        ],
    }
