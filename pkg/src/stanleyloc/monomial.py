"""Monomials and monomial ideals over a named, ordered set of variables.

Everything here is exact and purely combinatorial: a monomial is an exponent
vector, an ideal is its canonical minimal generating set. The coefficient
field never appears.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Sequence, Union

from .errors import AmbientMismatch, DomainError, ExponentOverflow, ParseError

# Exponents are stored as Python ints but treated as bounded machine words.
MAX_EXPONENT = 2**31 - 1

VarRef = Union[int, str]

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not name or not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def of(cls, *names: str) -> VariableSet:
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, var: VarRef) -> int:
        if isinstance(var, str):
            try:
                return self.names.index(var)
            except ValueError:
                raise DomainError(f"unknown variable {var!r}; have {' '.join(self.names)}") from None
        if not 0 <= var < len(self.names):
            raise DomainError(f"variable index {var} out of range for {len(self.names)} variables")
        return var

    def project(self, j: VarRef) -> VariableSet:
        """Drop variable ``j``, keeping the order of the rest."""
        j = self.index(j)
        return VariableSet(self.names[:j] + self.names[j + 1:])

    def monomial(self, exponents: Sequence[int]) -> Monomial:
        return Monomial(self, tuple(exponents))

    def one(self) -> Monomial:
        return Monomial(self, (0,) * len(self.names))

    def var(self, v: VarRef, power: int = 1) -> Monomial:
        j = self.index(v)
        e = [0] * len(self.names)
        e[j] = power
        return Monomial(self, tuple(e))


@dataclass(frozen=True)
class Monomial:
    ambient: VariableSet
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != len(self.ambient):
            raise ValueError(f"exponent vector {exps} has wrong length for {len(self.ambient)} variables")
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {exps}")
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        _same(self, other)
        return Monomial(self.ambient, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        _same(self, other)
        if not divides(other, self):
            raise DomainError(f"{other} does not divide {self}")
        return Monomial(self.ambient, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __lt__(self, other: Monomial) -> bool:
        return self.exponents < other.exponents

    def __str__(self) -> str:
        return format_monomial(self.exponents, self.ambient.names)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _same(*objs) -> VariableSet:
    first = objs[0].ambient
    for o in objs[1:]:
        if o.ambient is not first and o.ambient != first:
            raise AmbientMismatch(f"variable sets differ: {first.names} vs {o.ambient.names}")
    return first


def divides(u: Monomial, v: Monomial) -> bool:
    _same(u, v)
    return all(a <= b for a, b in zip(u.exponents, v.exponents))


def gcd_monomial(u: Monomial, v: Monomial) -> Monomial:
    _same(u, v)
    return Monomial(u.ambient, tuple(map(min, u.exponents, v.exponents)))


def lcm_monomial(u: Monomial, v: Monomial) -> Monomial:
    _same(u, v)
    return Monomial(u.ambient, tuple(map(max, u.exponents, v.exponents)))


def project_monomial(u: Monomial, j: VarRef) -> Monomial:
    """Delete coordinate ``j``: the image of ``u`` under the variable-to-one map."""
    j = u.ambient.index(j)
    e = u.exponents
    return Monomial(u.ambient.project(j), e[:j] + e[j + 1:])


def _minimal_exponents(vectors: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    # Sorting by degree first means a divisor is always seen before its multiples.
    cands = sorted(set(vectors), key=lambda e: (sum(e), e))
    kept: list[tuple[int, ...]] = []
    for e in cands:
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators, sorted lexicographically.

    Build instances with :func:`minimalize` (or :meth:`from_exponents`); the
    constructor trusts that ``generators`` is already canonical.
    """

    ambient: VariableSet
    generators: tuple[Monomial, ...]

    @classmethod
    def from_exponents(cls, ambient: VariableSet, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
        mins = _minimal_exponents(tuple(v) for v in vectors)
        return cls(ambient, tuple(Monomial(ambient, e) for e in mins))

    @classmethod
    def zero(cls, ambient: VariableSet) -> MonomialIdeal:
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: VariableSet) -> MonomialIdeal:
        return cls(ambient, (ambient.one(),))

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exponents for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def lcm_exponent(self) -> tuple[int, ...]:
        """Componentwise maximum over the minimal generators (zeros for the zero ideal)."""
        n = len(self.ambient)
        if not self.generators:
            return (0,) * n
        return tuple(max(col) for col in zip(*self.exponents))

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self} in K[{','.join(self.ambient.names)}]"


def minimalize(gens: Iterable[Monomial], ambient: VariableSet | None = None) -> MonomialIdeal:
    gens = list(gens)
    if not gens:
        if ambient is None:
            raise ValueError("ambient variable set required for an empty generator list")
        return MonomialIdeal.zero(ambient)
    amb = _same(*gens)
    if ambient is not None and ambient != amb:
        raise AmbientMismatch(f"variable sets differ: {ambient.names} vs {amb.names}")
    return MonomialIdeal.from_exponents(amb, (g.exponents for g in gens))


def ideal_sum(I: MonomialIdeal, *gens: Monomial) -> MonomialIdeal:
    """The ideal ``(I, gens...)``."""
    if gens:
        _same(I, *gens)
    return MonomialIdeal.from_exponents(I.ambient, chain(I.exponents, (g.exponents for g in gens)))


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    _same(I, u)
    e = u.exponents
    return any(all(a <= b for a, b in zip(g, e)) for g in I.exponents)


def colon(I: MonomialIdeal, a: Monomial) -> MonomialIdeal:
    """``I : a``, generated by ``u / gcd(u, a)`` over the minimal generators ``u``."""
    _same(I, a)
    ae = a.exponents
    return MonomialIdeal.from_exponents(
        I.ambient, (tuple(g - min(g, x) for g, x in zip(ge, ae)) for ge in I.exponents)
    )


@dataclass(frozen=True)
class MonomialPrime:
    ambient: VariableSet
    variables: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "variables", frozenset(self.variables))
        if any(not 0 <= v < len(self.ambient) for v in self.variables):
            raise ValueError(f"prime variables {sorted(self.variables)} out of range")

    @classmethod
    def on(cls, ambient: VariableSet, names: Iterable[VarRef]) -> MonomialPrime:
        return cls(ambient, frozenset(ambient.index(v) for v in names))

    @property
    def dim(self) -> int:
        """Krull dimension of S/P."""
        return len(self.ambient) - len(self.variables)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.ambient.names[i] for i in sorted(self.variables))

    def complement(self) -> frozenset[int]:
        return frozenset(range(len(self.ambient))) - self.variables

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_exponents(
            self.ambient, (self.ambient.var(i).exponents for i in self.variables)
        )

    def project(self, j: VarRef) -> MonomialPrime:
        """Image in the ring without ``j``; only meaningful when ``j`` is not in the prime."""
        j = self.ambient.index(j)
        if j in self.variables:
            raise DomainError(f"variable {self.ambient.names[j]} lies in the prime")
        return MonomialPrime(self.ambient.project(j), frozenset(v - (v > j) for v in self.variables))

    def __le__(self, other: MonomialPrime) -> bool:
        _same(self, other)
        return self.variables <= other.variables

    def __lt__(self, other: MonomialPrime) -> bool:
        _same(self, other)
        return self.variables < other.variables

    def __str__(self) -> str:
        return "(" + ", ".join(self.names) + ")" if self.variables else "(0)"


def as_prime(I: MonomialIdeal) -> MonomialPrime | None:
    """The prime ``I`` is, or ``None``. The zero ideal is the prime on no variables."""
    if I.is_unit():
        return None
    vs = []
    for g in I.generators:
        if g.degree != 1:
            return None
        vs.append(g.exponents.index(1))
    return MonomialPrime(I.ambient, frozenset(vs))


def minimal_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Minimal primes of S/I: the minimal transversals of the generator supports."""
    if I.is_unit() or I.is_zero():
        raise DomainError("minimal primes need a proper nonzero ideal")
    supports = [g.support() for g in I.generators]
    found: set[frozenset[int]] = set()

    def grow(chosen: frozenset[int]) -> None:
        for s in supports:
            if not s & chosen:
                break
        else:
            found.add(chosen)
            return
        for v in sorted(s):
            grow(chosen | {v})

    grow(frozenset())
    minimal = [t for t in found if not any(o < t for o in found)]
    return frozenset(MonomialPrime(I.ambient, t) for t in minimal)


def localize(I: MonomialIdeal, j: VarRef) -> MonomialIdeal:
    """Send variable ``j`` to 1: delete that coordinate from every generator."""
    j = I.ambient.index(j)
    return MonomialIdeal.from_exponents(I.ambient.project(j), (e[:j] + e[j + 1:] for e in I.exponents))


# ---------------------------------------------------------------------------
# text format

def format_monomial(exponents: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, ambient: VariableSet, line: int | None = None) -> Monomial:
    text = text.strip()
    if not text:
        raise ParseError("empty monomial", line)
    exps = [0] * len(ambient)
    if text == "1":
        return Monomial(ambient, tuple(exps))
    for factor in text.split("*"):
        factor = factor.strip()
        name, _, power = factor.partition("^")
        name = name.strip()
        if name not in ambient.names:
            raise ParseError(f"unknown variable {name!r} in {text!r}", line)
        if power:
            try:
                k = int(power)
            except ValueError:
                raise ParseError(f"bad exponent in {factor!r}", line) from None
            if k < 1:
                raise ParseError(f"exponent must be >= 1 in {factor!r}", line)
        else:
            k = 1
        exps[ambient.names.index(name)] += k
    try:
        return Monomial(ambient, tuple(exps))
    except ExponentOverflow as exc:
        raise ParseError(str(exc), line) from None


def significant_lines(text: str):
    """Yield ``(lineno, keyword, rest)`` for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        keyword, _, rest = s.partition(" ")
        yield no, keyword, rest.strip()


def parse_vars_line(keyword: str, rest: str, line: int) -> VariableSet:
    if keyword != "vars":
        raise ParseError("first line must be 'vars <names>'", line)
    try:
        return VariableSet(tuple(rest.split()))
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def parse_ideal(text: str) -> MonomialIdeal:
    lines = list(significant_lines(text))
    if not lines:
        raise ParseError("empty ideal file")
    no, kw, rest = lines[0]
    ambient = parse_vars_line(kw, rest, no)
    gens = []
    for no, kw, rest in lines[1:]:
        if kw != "gen":
            raise ParseError(f"expected 'gen', got {kw!r}", no)
        gens.append(parse_monomial(rest, ambient, no))
    return minimalize(gens, ambient)


def format_ideal(I: MonomialIdeal) -> str:
    out = ["vars " + " ".join(I.ambient.names)]
    out += [f"gen {g}" for g in I.generators]
    return "\n".join(out) + "\n"


def ideal(names: str | Sequence[str], *gens: str) -> MonomialIdeal:
    """Shorthand: ``ideal("x y", "x^2", "x*y")``."""
    if isinstance(names, str):
        names = names.split()
    amb = VariableSet(tuple(names))
    return minimalize([parse_monomial(g, amb) for g in gens], amb)
