"""Text and JSON readers/writers for ideals, decompositions, filtrations,
certificates and simplicial complexes.

Text formats share the ideal header::

    # comment
    vars x y z
    gen x*y          # or: ideal path/to/ideal.txt
    space x | x      # decomposition line, free variables after the bar
    step y | x       # filtration line, prime variables after the bar

Complexes use ``vertices n`` followed by ``facet i j k`` lines (1-based).
"""

from __future__ import annotations

import json
from pathlib import Path

from .decomposition import StanleyDecomposition, StanleySpace, decomposition_to_json, format_decomposition
from .engine import IntervalPartition
from .errors import ParseError
from .filtration import FiltrationStep, PrimeFiltration
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    VariableSet,
    format_ideal,
    minimalize,
    parse_ideal,
    parse_monomial,
    parse_vars_line,
    significant_lines,
)
from .simplicial import SimplicialComplex

def _var_indices(ambient: VariableSet, names: str, line: int) -> frozenset[int]:
    out = set()
    for nm in names.split():
        if nm not in ambient.names:
            raise ParseError(f"unknown variable {nm!r}", line)
        out.add(ambient.names.index(nm))
    return frozenset(out)


def _read_ideal_ref(ref: str, base: Path | None, line: int) -> MonomialIdeal:
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = base / path
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read ideal file {ref!r}: {exc.strerror}", line) from None
    return parse_ideal(text)


def parse_structured(text: str, base: Path | None = None):
    """Parse an ideal, decomposition or filtration from the text format."""
    lines = list(significant_lines(text))
    if not lines:
        raise ParseError("empty input")
    no, kw, rest = lines[0]
    if kw == "vertices":
        return parse_complex(text)
    ambient = parse_vars_line(kw, rest, no)
    gens, ref_ideal = [], None
    spaces, steps = [], []
    for no, kw, rest in lines[1:]:
        if kw == "gen":
            gens.append(parse_monomial(rest, ambient, no))
        elif kw == "ideal":
            ref_ideal = _read_ideal_ref(rest, base, no)
            if ref_ideal.ambient != ambient:
                raise ParseError("referenced ideal has different variables", no)
        elif kw in ("space", "step"):
            mono, bar, names = rest.partition("|")
            if not bar:
                raise ParseError(f"expected '{kw} <monomial> | <vars>'", no)
            u = parse_monomial(mono, ambient, no)
            vs = _var_indices(ambient, names, no)
            if kw == "space":
                spaces.append(StanleySpace(u, vs))
            else:
                steps.append(FiltrationStep(u, MonomialPrime(ambient, vs)))
        else:
            raise ParseError(f"unknown keyword {kw!r}", no)
    if ref_ideal is not None and gens:
        raise ParseError("use either 'ideal <file>' or inline 'gen' lines, not both")
    I = ref_ideal if ref_ideal is not None else minimalize(gens, ambient)
    if spaces and steps:
        raise ParseError("a file holds either spaces or steps, not both")
    if spaces:
        return StanleyDecomposition(I, tuple(spaces))
    if steps:
        return PrimeFiltration(I, tuple(steps))
    return I


def parse_complex(text: str) -> SimplicialComplex:
    lines = list(significant_lines(text))
    if not lines or lines[0][1] != "vertices":
        raise ParseError("first line must be 'vertices <n>'")
    no, _, rest = lines[0]
    try:
        n = int(rest)
    except ValueError:
        raise ParseError("vertex count must be an integer", no) from None
    if n < 0:
        raise ParseError("vertex count must be non-negative", no)
    facets = []
    for no, kw, rest in lines[1:]:
        if kw != "facet":
            raise ParseError(f"expected 'facet', got {kw!r}", no)
        try:
            f = [int(t) for t in rest.split()]
        except ValueError:
            raise ParseError("facet entries must be integers", no) from None
        if any(not 1 <= v <= n for v in f):
            raise ParseError(f"facet vertex out of range 1..{n}", no)
        facets.append(f)
    return SimplicialComplex.from_facets(n, facets)


# ---------------------------------------------------------------------------
# writers

def format_filtration(F: PrimeFiltration) -> str:
    out = ["vars " + " ".join(F.ambient.names)]
    out += [f"gen {g}" for g in F.ideal.generators]
    out += [f"step {s.offset} | {' '.join(s.prime.names)}".rstrip() for s in F.steps]
    return "\n".join(out) + "\n"


def format_complex(delta: SimplicialComplex) -> str:
    """Text form; vertices are renumbered 1..n in their stored order."""
    pos = {v: i + 1 for i, v in enumerate(delta.vertices)}
    out = [f"vertices {len(delta.vertices)}"]
    for f in sorted(delta.facets, key=lambda f: sorted(pos[v] for v in f)):
        out.append(("facet " + " ".join(str(pos[v]) for v in sorted(f, key=pos.get))).rstrip())
    return "\n".join(out) + "\n"


def format_any(obj) -> str:
    if isinstance(obj, MonomialIdeal):
        return format_ideal(obj)
    if isinstance(obj, StanleyDecomposition):
        return format_decomposition(obj)
    if isinstance(obj, PrimeFiltration):
        return format_filtration(obj)
    if isinstance(obj, SimplicialComplex):
        return format_complex(obj)
    raise TypeError(f"cannot format {type(obj).__name__}")


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ambient.names), "gens": [str(g) for g in I.generators]}


def filtration_to_json(F: PrimeFiltration) -> dict:
    return {
        "vars": list(F.ambient.names),
        "gens": [str(g) for g in F.ideal.generators],
        "steps": [{"offset": str(s.offset), "prime": list(s.prime.names)} for s in F.steps],
    }


def complex_to_json(delta: SimplicialComplex) -> dict:
    return {
        "vertices": list(delta.vertices),
        "facets": sorted(sorted(f, key=delta.vertices.index) for f in delta.facets),
    }


def to_json(obj) -> dict:
    if isinstance(obj, MonomialIdeal):
        return ideal_to_json(obj)
    if isinstance(obj, StanleyDecomposition):
        return decomposition_to_json(obj)
    if isinstance(obj, PrimeFiltration):
        return filtration_to_json(obj)
    if isinstance(obj, SimplicialComplex):
        return complex_to_json(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def certificate_to_json(I: MonomialIdeal, P: IntervalPartition, D: StanleyDecomposition) -> dict:
    return {
        "ideal": ideal_to_json(I),
        "sdepth": P.value,
        "partition": P.to_json(),
        "decomposition": decomposition_to_json(D),
    }


# ---------------------------------------------------------------------------
# JSON readers

def _json_ideal(data: dict) -> MonomialIdeal:
    try:
        amb = VariableSet(tuple(data["vars"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad 'vars' entry: {exc}") from None
    return minimalize([parse_monomial(g, amb) for g in data.get("gens", [])], amb)


def from_json(data: dict):
    """Inverse of :func:`to_json`; a certificate yields its decomposition."""
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if "decomposition" in data:
        return from_json(data["decomposition"])
    if "facets" in data:
        verts = data.get("vertices")
        if isinstance(verts, int):
            return SimplicialComplex.from_facets(verts, data["facets"])
        return SimplicialComplex(tuple(verts), frozenset(frozenset(f) for f in data["facets"]))
    I = _json_ideal(data)
    amb = I.ambient
    try:
        if "spaces" in data:
            return StanleyDecomposition(I, tuple(
                StanleySpace(parse_monomial(s["offset"], amb), _var_indices(amb, " ".join(s["free"]), None))
                for s in data["spaces"]))
        if "steps" in data:
            return PrimeFiltration(I, tuple(
                FiltrationStep(parse_monomial(s["offset"], amb),
                               MonomialPrime(amb, _var_indices(amb, " ".join(s["prime"]), None)))
                for s in data["steps"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed JSON entry: {exc}") from None
    return I


def load(path: str | Path):
    """Read any supported object from a text or JSON file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return from_json(data)
    return parse_structured(text, base=path.parent)
