"""Random instance generators and per-instance checks of the localization results.

Each ``check_*`` function returns a list of failure descriptions (empty on
success) so sweeps can report every counterexample instead of stopping at
the first one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .decomposition import localize_decomposition, sdepth_of, verify
from .engine import DEFAULT_LIMITS, Limits, sdepth, sdepth_decomposition
from .filtration import (
    PrimeFiltration,
    fdepth,
    fdepth_of,
    is_clean,
    is_pretty_clean,
    localize_filtration,
    random_filtration,
    verify_filtration,
)
from .monomial import Monomial, MonomialIdeal, VariableSet, colon, localize, project_monomial
from .simplicial import (
    SimplicialComplex,
    check_link_lemma,
    iterated_link,
    link,
    sdepth_complex,
)

NAMES = ("x", "y", "z", "w", "v", "u")


def random_ideal(rng: random.Random, max_vars: int = 4, max_exp: int = 2, max_gens: int = 5,
                 min_vars: int = 1) -> MonomialIdeal:
    """A proper nonzero monomial ideal with small exponents."""
    n = rng.randint(min_vars, max_vars)
    amb = VariableSet(NAMES[:n] if n <= len(NAMES) else tuple(f"x{i}" for i in range(1, n + 1)))
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        e = [0] * n
        while not any(e):
            e = [rng.randint(0, max_exp) for _ in range(n)]
        gens.append(tuple(e))
    return MonomialIdeal.from_exponents(amb, gens)


def random_monomial(rng: random.Random, ambient: VariableSet, max_exp: int = 3) -> Monomial:
    return Monomial(ambient, tuple(rng.randint(0, max_exp) for _ in range(len(ambient))))


def random_complex(rng: random.Random, max_vertices: int = 6, min_vertices: int = 1) -> SimplicialComplex:
    n = rng.randint(min_vertices, max_vertices)
    verts = list(range(1, n + 1))
    facets = []
    for _ in range(rng.randint(1, 4)):
        facets.append([v for v in verts if rng.random() < 0.5])
    return SimplicialComplex.from_facets(n, facets)


@dataclass
class SweepResult:
    name: str
    instances: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_sdepth_localization(I: MonomialIdeal, limits: Limits = DEFAULT_LIMITS) -> list[str]:
    """sdepth(T/φ(I)) >= sdepth(S/I) - 1 for every variable (vacuous when φ(I) = T)."""
    before = sdepth(I, limits)[0]
    out = []
    for j, name in enumerate(I.ambient.names):
        J = localize(I, j)
        if J.is_unit():
            continue
        after = sdepth(J, limits)[0]
        if after < before - 1:
            out.append(f"{I}, {name} -> 1: sdepth {before} -> {after}")
    return out


def check_decomposition_localization(I: MonomialIdeal, limits: Limits = DEFAULT_LIMITS) -> list[str]:
    """The optimal decomposition localizes to a valid decomposition of T/φ(I)."""
    _, D = sdepth_decomposition(I, limits)
    out = []
    for j, name in enumerate(I.ambient.names):
        D2 = localize_decomposition(D, j)
        verdict = verify(D2)
        if not verdict:
            out.append(f"{I}, {name} -> 1: {verdict.describe()}")
        if D2.spaces and sdepth_of(D2) < sdepth_of(D) - 1:
            out.append(f"{I}, {name} -> 1: localized decomposition lost more than one dimension")
    return out


def check_colon_commutes(I: MonomialIdeal, a: Monomial, j: int) -> list[str]:
    lhs = localize(colon(I, a), j)
    rhs = colon(localize(I, j), project_monomial(a, j))
    return [] if lhs == rhs else [f"{I} : {a}, var {I.ambient.names[j]}: {lhs} != {rhs}"]


def check_filtration_localization(F: PrimeFiltration) -> list[str]:
    """Localized filtration is valid; (pretty) cleanness and fdepth drop by at most one survive."""
    out = []
    clean, pretty = is_clean(F), is_pretty_clean(F)
    f_before = fdepth_of(F)
    supp = F.support()
    for j, name in enumerate(F.ambient.names):
        G = localize_filtration(F, j)
        if not verify_filtration(G):
            out.append(f"{F}, {name}: invalid image")
            continue
        if G.support() != {p.project(j) for p in supp if j not in p.variables}:
            out.append(f"{F}, {name}: support of image not the projected surviving primes")
        if clean and not is_clean(G):
            out.append(f"{F}, {name}: clean filtration lost cleanness")
        if pretty and not is_pretty_clean(G):
            out.append(f"{F}, {name}: pretty clean filtration lost pretty cleanness")
        if G.steps and fdepth_of(G) < f_before - 1:
            out.append(f"{F}, {name}: fdepth dropped by more than one")
    return out


def check_fdepth_localization(I: MonomialIdeal, limits: Limits = DEFAULT_LIMITS) -> list[str]:
    """fdepth(T/φ(I)) >= fdepth(S/I) - 1, and fdepth <= sdepth on both sides."""
    out = []
    f_before = fdepth(I, limits)[0]
    s_before = sdepth(I, limits)[0]
    if f_before > s_before:
        out.append(f"{I}: fdepth {f_before} > sdepth {s_before}")
    for j, name in enumerate(I.ambient.names):
        J = localize(I, j)
        if J.is_unit():
            continue
        f_after = fdepth(J, limits)[0]
        if f_after < f_before - 1:
            out.append(f"{I}, {name} -> 1: fdepth {f_before} -> {f_after}")
        s_after = sdepth(J, limits)[0]
        if f_after > s_after:
            out.append(f"{J}: fdepth {f_after} > sdepth {s_after}")
    return out


def check_links(delta: SimplicialComplex, faces, limits: Limits = DEFAULT_LIMITS) -> list[str]:
    """Link lemma at every vertex of a face, and the link sdepth bound for ``faces``."""
    out = []
    for v in delta.vertices:
        if delta.is_face({v}) and not check_link_lemma(delta, v):
            out.append(f"{delta}: link lemma fails at vertex {v}")
    base = sdepth_complex(delta, limits)
    for F in faces:
        direct = link(delta, F)
        stepwise = iterated_link(delta, F)
        s_direct = sdepth_complex(direct, limits)
        s_step = sdepth_complex(stepwise, limits)
        if direct != stepwise or s_direct != s_step:
            out.append(f"{delta}, F={sorted(F)}: direct and iterated links disagree")
        if s_direct < base - len(F):
            out.append(f"{delta}, F={sorted(F)}: sdepth link {s_direct} < {base} - {len(F)}")
    return out


def random_faces(rng: random.Random, delta: SimplicialComplex, max_size: int = 2, count: int = 2):
    faces = [F for F in delta.faces() if 1 <= len(F) <= max_size]
    rng.shuffle(faces)
    return faces[:count]


# ---------------------------------------------------------------------------
# sweeps driven by the CLI

def sweep_sdepth(rng, count, limits=DEFAULT_LIMITS) -> SweepResult:
    res = SweepResult("sdepth-localization")
    for _ in range(count):
        I = random_ideal(rng)
        res.instances += 1
        res.checks += len(I.ambient)
        res.failures += check_sdepth_localization(I, limits)
    return res


def sweep_decompositions(rng, count, limits=DEFAULT_LIMITS) -> SweepResult:
    res = SweepResult("decomposition-localization")
    for _ in range(count):
        I = random_ideal(rng)
        res.instances += 1
        res.checks += len(I.ambient)
        res.failures += check_decomposition_localization(I, limits)
    return res


def sweep_colon(rng, count, limits=DEFAULT_LIMITS) -> SweepResult:
    res = SweepResult("colon-commutation")
    for _ in range(count):
        I = random_ideal(rng)
        a = random_monomial(rng, I.ambient)
        j = rng.randrange(len(I.ambient))
        res.instances += 1
        res.checks += 1
        res.failures += check_colon_commutes(I, a, j)
    return res


def sweep_filtrations(rng, count, limits=DEFAULT_LIMITS) -> SweepResult:
    res = SweepResult("filtration-localization")
    for k in range(count):
        I = random_ideal(rng, max_vars=3)
        F = fdepth(I, limits)[1] if k % 2 == 0 else random_filtration(I, rng)
        res.instances += 1
        res.checks += len(I.ambient)
        res.failures += check_filtration_localization(F)
    return res


def sweep_fdepth(rng, count, limits=DEFAULT_LIMITS) -> SweepResult:
    res = SweepResult("fdepth-localization")
    for _ in range(count):
        I = random_ideal(rng, max_vars=3)
        res.instances += 1
        res.checks += len(I.ambient) + 1
        res.failures += check_fdepth_localization(I, limits)
    return res


def sweep_links(rng, count, limits=DEFAULT_LIMITS) -> SweepResult:
    res = SweepResult("links")
    for _ in range(count):
        delta = random_complex(rng)
        faces = random_faces(rng, delta)
        res.instances += 1
        res.checks += len(delta.vertices) + len(faces)
        res.failures += check_links(delta, faces, limits)
    return res


SWEEPS = {
    "sdepth": sweep_sdepth,
    "decomposition": sweep_decompositions,
    "colon": sweep_colon,
    "filtration": sweep_filtrations,
    "fdepth": sweep_fdepth,
    "links": sweep_links,
}
