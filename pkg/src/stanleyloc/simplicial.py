"""Simplicial complexes, Stanley-Reisner ideals and links."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable

from .engine import DEFAULT_LIMITS, Limits, sdepth
from .errors import DomainError, TheoremViolation
from .monomial import MonomialIdeal, VariableSet, localize

_XNAME = re.compile(r"^x(\d+)$")


def _maximal(sets: Iterable[frozenset]) -> frozenset[frozenset]:
    sets = set(sets)
    return frozenset(s for s in sets if not any(s < t for t in sets))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets on an ordered vertex list.

    Integer vertex ``i`` corresponds to variable ``x{i}``. No facets is the
    void complex; the single facet ``∅`` is the empty complex.
    """

    vertices: tuple[Hashable, ...]
    facets: frozenset[frozenset]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        facets = _maximal(frozenset(f) for f in self.facets)
        vs = set(verts)
        for f in facets:
            if not f <= vs:
                raise ValueError(f"facet {sorted(f)} uses unknown vertices")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_facets(cls, n_or_vertices, facets: Iterable[Iterable]) -> SimplicialComplex:
        verts = tuple(range(1, n_or_vertices + 1)) if isinstance(n_or_vertices, int) else tuple(n_or_vertices)
        return cls(verts, frozenset(frozenset(f) for f in facets))

    @classmethod
    def simplex(cls, n_or_vertices) -> SimplicialComplex:
        verts = tuple(range(1, n_or_vertices + 1)) if isinstance(n_or_vertices, int) else tuple(n_or_vertices)
        return cls(verts, frozenset({frozenset(verts)}))

    def is_void(self) -> bool:
        return not self.facets

    def is_face(self, F: Iterable) -> bool:
        F = frozenset(F)
        return any(F <= f for f in self.facets)

    def faces(self) -> set[frozenset]:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(frozenset(c) for c in combinations(f, k))
        return out

    @property
    def variables(self) -> VariableSet:
        return VariableSet(tuple(_vertex_name(v) for v in self.vertices))

    def __str__(self) -> str:
        if self.is_void():
            return "void"
        body = ", ".join("{" + ",".join(map(str, sorted(f, key=self.vertices.index))) + "}"
                         for f in sorted(self.facets, key=lambda f: sorted(map(self.vertices.index, f))))
        return f"<{body}> on [{','.join(map(str, self.vertices))}]"


def _vertex_name(v) -> str:
    return f"x{v}" if isinstance(v, int) else str(v)


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal of the minimal non-faces."""
    if delta.is_void():
        raise DomainError("the void complex has no Stanley-Reisner ring")
    amb = delta.variables
    pos = {v: i for i, v in enumerate(delta.vertices)}
    gens = []
    for k in range(len(delta.vertices) + 1):
        for G in combinations(delta.vertices, k):
            G = frozenset(G)
            if not delta.is_face(G) and all(delta.is_face(G - {v}) for v in G):
                e = [0] * len(amb)
                for v in G:
                    e[pos[v]] = 1
                gens.append(tuple(e))
    return MonomialIdeal.from_exponents(amb, gens)


def complex_from_ideal(I: MonomialIdeal) -> SimplicialComplex:
    if not I.is_squarefree():
        raise DomainError(f"{I} is not squarefree")
    if I.is_unit():
        raise DomainError("the unit ideal corresponds to the void complex")
    names = I.ambient.names
    matches = [_XNAME.match(nm) for nm in names]
    if all(matches) and len({int(m.group(1)) for m in matches}) == len(names):
        verts = tuple(int(m.group(1)) for m in matches)
    else:
        verts = names
    supports = [g.support() for g in I.generators]
    faces = []
    for k in range(len(verts) + 1):
        for F in combinations(range(len(verts)), k):
            F = frozenset(F)
            if not any(s <= F for s in supports):
                faces.append(frozenset(verts[i] for i in F))
    return SimplicialComplex(verts, frozenset(faces))


def link(delta: SimplicialComplex, F: Iterable) -> SimplicialComplex:
    """Faces G disjoint from F with G ∪ F a face, on the vertices outside F."""
    F = frozenset(F)
    if not F <= set(delta.vertices):
        raise DomainError(f"{sorted(F, key=str)} contains unknown vertices")
    if not delta.is_face(F):
        raise DomainError(f"{sorted(F, key=str)} is not a face")
    verts = tuple(v for v in delta.vertices if v not in F)
    return SimplicialComplex(verts, frozenset(f - F for f in delta.facets if F <= f))


def iterated_link(delta: SimplicialComplex, F: Iterable) -> SimplicialComplex:
    """Link of F taken one vertex at a time, last vertex first.

    The result must coincide with the direct link.
    """
    F = frozenset(F)
    order = sorted(F, key=delta.vertices.index, reverse=True)
    current = delta
    for v in order:
        current = link(current, {v})
    direct = link(delta, F)
    if current != direct:
        raise TheoremViolation(f"iterated link {current} differs from direct link {direct}")
    return current


def check_link_lemma(delta: SimplicialComplex, v) -> bool:
    """Does sending x_v to 1 in I_Δ give the Stanley-Reisner ideal of link_Δ({v})?"""
    if v not in delta.vertices or not delta.is_face({v}):
        raise DomainError(f"{v} is not a vertex of a face")
    lhs = localize(stanley_reisner_ideal(delta), delta.vertices.index(v))
    rhs = stanley_reisner_ideal(link(delta, {v}))
    return lhs == rhs


def sdepth_complex(delta: SimplicialComplex, limits: Limits = DEFAULT_LIMITS) -> int:
    """sdepth K[Δ]."""
    return sdepth(stanley_reisner_ideal(delta), limits)[0]
