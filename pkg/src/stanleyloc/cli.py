"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 verification or inequality failure,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Callable

from . import checks
from .decomposition import (
    StanleyDecomposition,
    StanleySpace,
    localize_decomposition,
    sdepth_of,
    verify,
)
from .engine import DEFAULT_MAX_NODES, DEFAULT_MAX_POSET, Limits, partition_to_decomposition, sdepth
from .errors import (
    AmbientMismatch,
    DomainError,
    InvalidObject,
    ParseError,
    ResourceLimit,
    StanleyLocError,
    TheoremViolation,
)
from .filtration import (
    PrimeFiltration,
    fdepth,
    is_clean,
    is_pretty_clean,
    localize_filtration,
    verify_filtration,
)
from .formats import certificate_to_json, format_any, load, to_json
from .monomial import MonomialIdeal, ideal, localize, parse_monomial
from .simplicial import (
    SimplicialComplex,
    check_link_lemma,
    iterated_link,
    link,
    sdepth_complex,
    stanley_reisner_ideal,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_RESOURCE = 0, 1, 2, 3


class Failure(Exception):
    """Raised by a command to finish with exit code 2 after printing its report."""


@dataclass
class RunConfig:
    json: bool = False
    seed: int = 0
    max_poset: int = DEFAULT_MAX_POSET
    max_nodes: int = DEFAULT_MAX_NODES
    certificate: bool = False

    @property
    def limits(self) -> Limits:
        return Limits(self.max_poset, self.max_nodes)


class Reporter:
    """Collects human lines and a JSON payload; emits one of them."""

    def __init__(self, cfg: RunConfig, out=None):
        self.cfg = cfg
        self.out = out or sys.stdout
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def put(self, **kw) -> None:
        self.data.update(kw)

    def flush(self) -> None:
        if self.cfg.json:
            self.out.write(json.dumps(self.data, indent=2, sort_keys=True) + "\n")
        else:
            self.out.write("\n".join(self.lines) + ("\n" if self.lines else ""))


def _load_ideal(path: str) -> MonomialIdeal:
    obj = load(path)
    if isinstance(obj, (StanleyDecomposition, PrimeFiltration)):
        return obj.ideal
    if isinstance(obj, SimplicialComplex):
        return stanley_reisner_ideal(obj)
    return obj


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_unit():
        raise DomainError("S/I is zero for the unit ideal")


def _comparison_note(before: int, after: int) -> str:
    if after > before:
        return "strict increase"
    if after == before - 1:
        return "equality"
    return "strict"


# ---------------------------------------------------------------------------
# commands

def cmd_sdepth(args, cfg: RunConfig, rep: Reporter) -> None:
    I = _load_ideal(args.file)
    _require_proper(I)
    value, part = sdepth(I, cfg.limits)
    rep.line(f"I = {I}")
    rep.line(f"sdepth = {value}")
    rep.put(ideal=str(I), sdepth=value)
    if cfg.certificate:
        D = partition_to_decomposition(I, part, cfg.max_poset)
        verdict = verify(D)
        if not verdict:
            raise TheoremViolation(f"certificate decomposition failed verification: {verdict.describe()}")
        rep.line(f"g = {list(part.g)}")
        rep.line("partition:")
        for iv in part.intervals:
            rep.line(f"  [{list(iv.lower)}, {list(iv.upper)}]")
        rep.line(f"decomposition: {D}")
        rep.line("certificate (verify with `stanleyloc verify`):")
        rep.line(format_any(D).rstrip())
        rep.put(certificate=certificate_to_json(I, part, D))


def cmd_fdepth(args, cfg: RunConfig, rep: Reporter) -> None:
    I = _load_ideal(args.file)
    _require_proper(I)
    value, F = fdepth(I, cfg.limits, slack=args.slack)
    rep.line(f"I = {I}")
    rep.line(f"fdepth = {value} (offsets searched in the lcm box + {args.slack})")
    rep.put(ideal=str(I), fdepth=value, offset_slack=args.slack)
    if cfg.certificate:
        rep.line("filtration (verify with `stanleyloc verify`):")
        rep.line(format_any(F).rstrip())
        rep.line(f"clean = {is_clean(F)}, pretty clean = {is_pretty_clean(F)}")
        rep.put(certificate=to_json(F), clean=is_clean(F), pretty_clean=is_pretty_clean(F))


def cmd_localize(args, cfg: RunConfig, rep: Reporter) -> None:
    I = _load_ideal(args.file)
    J = localize(I, args.var)
    rep.line(f"I = {I}")
    rep.line(f"phi(I) = {J}   ({args.var} -> 1, over K[{','.join(J.ambient.names)}])")
    rep.put(ideal=str(I), var=args.var, localized=str(J), localized_vars=list(J.ambient.names))
    if not args.sdepth_both:
        return
    _require_proper(I)
    before = sdepth(I, cfg.limits)[0]
    rep.line(f"sdepth S/I = {before}")
    rep.put(sdepth_before=before)
    if J.is_unit():
        rep.line("T/phi(I) = 0; inequality vacuous: PASS")
        rep.put(sdepth_after=None, status="PASS", note="vacuous")
        return
    after = sdepth(J, cfg.limits)[0]
    ok = after >= before - 1
    note = _comparison_note(before, after)
    rep.line(f"sdepth T/phi(I) = {after}")
    rep.line(f"check {after} >= {before} - 1: {'PASS' if ok else 'FAIL'} ({note})")
    rep.put(sdepth_after=after, status="PASS" if ok else "FAIL", note=note)
    if not ok:
        raise Failure()


def _describe_filtration(F: PrimeFiltration, rep: Reporter, prefix: str = "") -> bool:
    verdict = verify_filtration(F)
    rep.line(f"{prefix}filtration of {F.ideal}: {verdict.describe()}")
    rep.put(**{f"{prefix}verdict": verdict.describe()})
    if verdict:
        rep.line(f"{prefix}clean = {is_clean(F)}, pretty clean = {is_pretty_clean(F)}")
        rep.put(**{f"{prefix}clean": is_clean(F), f"{prefix}pretty_clean": is_pretty_clean(F)})
    return verdict.ok


def cmd_verify(args, cfg: RunConfig, rep: Reporter) -> None:
    obj = load(args.file)
    if isinstance(obj, StanleyDecomposition):
        verdict = verify(obj)
        rep.line(f"decomposition of S/I, I = {obj.ideal}: {obj}")
        rep.line(f"verdict: {verdict.describe()}")
        rep.put(kind="decomposition", ideal=str(obj.ideal), verdict=verdict.describe())
        if verdict:
            rep.line(f"sdepth(D) = {sdepth_of(obj)}")
            rep.put(sdepth=sdepth_of(obj))
        else:
            raise Failure()
    elif isinstance(obj, PrimeFiltration):
        rep.put(kind="filtration")
        if not _describe_filtration(obj, rep):
            raise Failure()
    else:
        raise ParseError("verify expects a decomposition or filtration file")


def cmd_transform(args, cfg: RunConfig, rep: Reporter) -> None:
    obj = load(args.file)
    if isinstance(obj, StanleyDecomposition):
        verdict = verify(obj)
        if not verdict:
            rep.line(f"input decomposition: {verdict.describe()}")
            rep.put(verdict=verdict.describe())
            raise Failure()
        out = localize_decomposition(obj, args.var)
        rep.line(f"# {obj}  --({args.var} -> 1)-->  {out}: Valid")
    elif isinstance(obj, PrimeFiltration):
        verdict = verify_filtration(obj)
        if not verdict:
            rep.line(f"input filtration: {verdict.describe()}")
            rep.put(verdict=verdict.describe())
            raise Failure()
        out = localize_filtration(obj, args.var)
        rep.line(f"# {len(obj.steps)} steps --({args.var} -> 1)--> {len(out.steps)} steps: Valid")
    else:
        raise ParseError("transform expects a decomposition or filtration file")
    text = format_any(out)
    rep.put(result=to_json(out), verdict="Valid")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        rep.line(f"# written to {args.output}")
    else:
        rep.line(text.rstrip())


def _parse_vertex(delta: SimplicialComplex, token: str):
    for v in delta.vertices:
        if str(v) == token:
            return v
    raise DomainError(f"unknown vertex {token!r}")


def cmd_link(args, cfg: RunConfig, rep: Reporter) -> None:
    delta = load(args.file)
    if not isinstance(delta, SimplicialComplex):
        raise ParseError("link expects a complex file")
    tokens = [t for chunk in args.vertices for t in chunk.replace(",", " ").split()]
    F = frozenset(_parse_vertex(delta, t) for t in tokens)
    lk = link(delta, F)
    rep.line(f"complex: {delta}")
    rep.line(f"link of {{{','.join(map(str, sorted(F, key=delta.vertices.index)))}}}: {lk}")
    rep.line(f"Stanley-Reisner ideal of link: {stanley_reisner_ideal(lk)}")
    rep.put(complex=to_json(delta), face=sorted(F, key=delta.vertices.index), link=to_json(lk),
            link_ideal=str(stanley_reisner_ideal(lk)))
    if not args.check:
        return
    failed = False
    lemma = {}
    for v in sorted(F, key=delta.vertices.index):
        ok = check_link_lemma(delta, v)
        lemma[str(v)] = ok
        failed |= not ok
        rep.line(f"phi_{v}(I_delta) = I_link({v}): {'PASS' if ok else 'FAIL'}")
    base = sdepth_complex(delta, cfg.limits)
    s_direct = sdepth_complex(lk, cfg.limits)
    s_iter = sdepth_complex(iterated_link(delta, F), cfg.limits)
    ok = s_direct >= base - len(F) and s_direct == s_iter
    failed |= not ok
    rep.line(f"sdepth K[delta] = {base}; sdepth K[link] = {s_direct} (iterated: {s_iter})")
    rep.line(f"check {s_direct} >= {base} - {len(F)}: {'PASS' if ok else 'FAIL'}")
    rep.put(lemma=lemma, sdepth_complex=base, sdepth_link=s_direct, sdepth_link_iterated=s_iter,
            status="PASS" if ok else "FAIL")
    if failed:
        raise Failure()


# The four worked examples: ideal, decomposition given in the text, variable
# sent to 1, expected sdepth before/after and the printed image ideal.
WORKED_EXAMPLES = [
    ("x y", ["x*y"], [("x", "x"), ("1", "y")], "x", 1, 0, "(y)"),
    ("x y", ["x^2", "x*y"], [("x", ""), ("1", "y")], "y", 0, 0, "(x)"),
    ("x y z", ["x*y*z"], [("1", "x z"), ("y", "x y"), ("z*y", "y z")], "z", 2, 1, "(x*y)"),
    ("x y z w", ["x*y", "x*z", "x*w"], [("x", "x"), ("1", "y z"), ("w", "y z w")], "w", 1, 2, "(x)"),
]


def run_worked_examples(limits: Limits) -> list[dict]:
    rows = []
    for names, gens, spaces, var, exp_before, exp_after, exp_image in WORKED_EXAMPLES:
        I = ideal(names, *gens)
        amb = I.ambient
        D = StanleyDecomposition(I, tuple(StanleySpace.of(parse_monomial(u, amb), z.split())
                                          for u, z in spaces))
        d_ok = verify(D).ok
        D2 = localize_decomposition(D, var) if d_ok else None
        before = sdepth(I, limits)[0]
        J = localize(I, var)
        after = sdepth(J, limits)[0]
        ok = (before, after, str(J)) == (exp_before, exp_after, exp_image) and d_ok and after >= before - 1
        rows.append({
            "ideal": str(I), "sdepth_before": before, "var": var, "localized": str(J),
            "sdepth_after": after, "decomposition": str(D), "decomposition_valid": d_ok,
            "localized_decomposition": str(D2) if D2 else None,
            "inequality": _comparison_note(before, after),
            "expected": [exp_before, exp_after, exp_image], "status": "PASS" if ok else "FAIL",
        })
    return rows


def cmd_paper_examples(args, cfg: RunConfig, rep: Reporter) -> None:
    rows = run_worked_examples(cfg.limits)
    header = f"{'I':<22} {'sdepth':>6}  {'var':<3} {'phi(I)':<8} {'sdepth':>6}  {'check':<16} status"
    rep.line(header)
    rep.line("-" * len(header))
    for r in rows:
        rep.line(f"{r['ideal']:<22} {r['sdepth_before']:>6}  {r['var']:<3} {r['localized']:<8} "
                 f"{r['sdepth_after']:>6}  {r['inequality']:<16} {r['status']}")
    for r in rows:
        rep.line(f"  {r['decomposition']}  ->  {r['localized_decomposition']}")
    rep.put(examples=rows)
    if any(r["status"] != "PASS" for r in rows):
        raise Failure()


def cmd_sweep(args, cfg: RunConfig, rep: Reporter) -> None:
    rng = random.Random(cfg.seed)
    names = args.property or list(checks.SWEEPS)
    rep.line(f"seed = {cfg.seed}")
    rep.put(seed=cfg.seed, results={})
    failed = False
    for name in names:
        res = checks.SWEEPS[name](rng, args.count, cfg.limits)
        status = "PASS" if res.ok else "FAIL"
        failed |= not res.ok
        rep.line(f"{res.name:<28} instances={res.instances:<5} checks={res.checks:<6} {status}")
        for f in res.failures[:5]:
            rep.line(f"    {f}")
        rep.data["results"][name] = {
            "instances": res.instances, "checks": res.checks, "failures": res.failures, "status": status,
        }
    if failed:
        raise Failure()


# ---------------------------------------------------------------------------

def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # The same flags are accepted before or after the subcommand.
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized subcommands")
    p.add_argument("--max-poset", type=int, default=d(DEFAULT_MAX_POSET), help="max characteristic poset points")
    p.add_argument("--max-nodes", type=int, default=d(DEFAULT_MAX_NODES), help="max search nodes")
    p.add_argument("--certificate", action="store_true", default=d(False),
                   help="emit a verified witness with the result")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stanleyloc",
        description="Stanley depth, prime filtrations and localization of monomial ideals.",
        parents=[_global_options(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_options(False)]

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=common, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("sdepth", cmd_sdepth, "Stanley depth of S/I")
    sp.add_argument("file")
    sp = add("fdepth", cmd_fdepth, "largest fdepth over prime filtrations of S/I")
    sp.add_argument("file")
    sp.add_argument("--slack", type=int, default=0, help="extend the offset box beyond the lcm exponent")
    sp = add("localize", cmd_localize, "send one variable to 1")
    sp.add_argument("file")
    sp.add_argument("--var", required=True)
    sp.add_argument("--sdepth-both", action="store_true", help="compare sdepth before and after")
    sp = add("verify", cmd_verify, "verify a Stanley decomposition or prime filtration")
    sp.add_argument("file")
    sp = add("transform", cmd_transform, "localize a decomposition or filtration and re-verify")
    sp.add_argument("file")
    sp.add_argument("--var", required=True)
    sp.add_argument("-o", "--output")
    sp = add("link", cmd_link, "link of a face in a simplicial complex")
    sp.add_argument("file")
    sp.add_argument("--vertices", nargs="*", default=[], help="vertices of the face (1-based)")
    sp.add_argument("--check", action="store_true")
    add("paper-examples", cmd_paper_examples, "reproduce the four worked examples")
    sp = add("sweep", cmd_sweep, "randomized property sweeps")
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--property", action="append", choices=sorted(checks.SWEEPS))
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    err = sys.stderr
    if args.max_poset < 1 or args.max_nodes < 1:
        err.write("error: resource limits must be positive\n")
        return EXIT_INPUT
    cfg = RunConfig(args.json, args.seed, args.max_poset, args.max_nodes, args.certificate)
    rep = Reporter(cfg, out)
    try:
        args.func(args, cfg, rep)
    except Failure:
        rep.flush()
        return EXIT_VERIFY
    except ResourceLimit as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (InvalidObject, TheoremViolation) as exc:
        rep.flush()
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except (ParseError, DomainError, AmbientMismatch) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (StanleyLocError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    rep.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
