"""Command-line front end.

Exit codes: ``analyze`` returns 0 for a smooth staircase, 1 for a singular
one; ``census`` returns 0 when every check passes, 1 on a violation. Every
command returns 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .arrow import classify_standard
from .bunch import build_bunch, verify_bunch
from .census import SUITES, parse_suites, run_census
from .classify import classify
from .cotangent import class_report
from .monomial import render_monomial
from .oracle import hom_system, tangent_dimension
from .staircase import (StaircaseError, add_box, box, dump, load, thicken, truncate,
                        two_box_union)


def _widths(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _arrow(a) -> str:
    return f"{_vec(a.tail)} -> {_vec(a.head)}"


def analysis(beta, oracle: bool = True) -> dict:
    report = class_report(beta)
    structure = classify(beta)
    bunch = build_bunch(beta)
    check = verify_bunch(beta, bunch)
    out = {
        "schema": 1,
        "r": beta.r,
        "n": beta.n,
        "widths": list(beta.widths),
        "minimal_generators": [list(g) for g in beta.minimal_generators],
        "dim": report.dim,
        "rn": report.rn,
        "smooth": report.smooth,
        "minimal_arrows": len(beta.minimal_generators) * beta.n,
        "zero_minimal_arrows": report.zero_count,
        "zero_standard_minimal_arrows": len(report.zero_standard),
        "zero_nonstandard_minimal_arrows": len(report.zero_nonstandard),
        "live_nonstandard_minimal_arrows": [_arrow(a) for a in report.nonzero_nonstandard],
        "witnesses": [_arrow(a) for a in structure.rigid_nonstandard_witnesses],
        "is_box": structure.is_box,
        "is_compound_box": structure.is_compound_box,
        "decomposition": structure.decomposition.to_dict() if structure.decomposition else None,
        "classes": [{"vector": list(c.vector), "canonical": _arrow(c.canonical),
                     "size": len(c.heads),
                     "standard_for": (None if classify_standard(c.canonical) is None
                                      else classify_standard(c.canonical) + 1)}
                    for c in report.classes],
        "bunch": {f"x{i + 1}": [_arrow(a) for a in sorted(bunch.per_variable[i])]
                  for i in sorted(bunch.per_variable)},
        "bunch_ok": check.ok,
        "oracle": None,
    }
    if oracle:
        t = tangent_dimension(beta)
        out["oracle"] = {"tangent_dimension": t, "agree": t == report.dim}
    return out


def render_analysis(a: dict) -> str:
    gens = ", ".join(render_monomial(g) for g in a["minimal_generators"])
    lines = [
        f"r={a['r']} n={a['n']}",
        f"widths: {' '.join(map(str, a['widths']))}",
        f"minimal generators: {gens}",
        f"cotangent dimension: {a['dim']} (rn = {a['rn']})",
        f"verdict: {'smooth' if a['smooth'] else 'singular'}",
        f"minimal arrows: {a['minimal_arrows']}, in zero classes: {a['zero_minimal_arrows']}"
        f" ({a['zero_standard_minimal_arrows']} standard,"
        f" {a['zero_nonstandard_minimal_arrows']} non-standard)",
    ]
    if a["live_nonstandard_minimal_arrows"]:
        lines.append("non-standard minimal arrows with nonzero class:")
        lines.extend(f"  {s}" for s in a["live_nonstandard_minimal_arrows"])
    lines.append(f"rigid non-standard witnesses: {len(a['witnesses'])}")
    lines.extend(f"  {s}" for s in a["witnesses"])
    kind = "box" if a["is_box"] else "compound box" if a["is_compound_box"] else "not a compound box"
    lines.append(f"structure: {kind}")
    if a["decomposition"] and a["decomposition"]["steps"]:
        dec = a["decomposition"]
        lines.append(f"  base box {','.join(map(str, dec['base']))}")
        for s in dec["steps"]:
            lines.append(f"  add box {','.join(map(str, s['widths']))} along x{s['j']} at height {s['h']}")
    lines.append(f"nonzero classes: {len(a['classes'])}")
    for c in a["classes"]:
        tag = f"x{c['standard_for']}-standard" if c["standard_for"] else "non-standard"
        lines.append(f"  {c['canonical']}  size {c['size']}  {tag}")
    lines.append(f"standard bunch ({'verified' if a['bunch_ok'] else 'FAILED verification'}):")
    for var, arrows in a["bunch"].items():
        lines.append(f"  {var}: " + ", ".join(arrows))
    if a["oracle"] is not None:
        o = a["oracle"]
        lines.append(f"oracle tangent dimension: {o['tangent_dimension']} "
                     f"({'agrees' if o['agree'] else 'DISAGREES'})")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    beta = load(args.path)
    a = analysis(beta, oracle=not args.no_oracle)
    if args.format == "json":
        print(json.dumps(a, indent=2))
    else:
        sys.stdout.write(render_analysis(a))
    if not a["bunch_ok"] or (a["oracle"] is not None and not a["oracle"]["agree"]):
        print("internal consistency check failed", file=sys.stderr)
        return 2
    return 0 if a["smooth"] else 1


def cmd_census(args) -> int:
    suites = parse_suites(args.verify)
    result = run_census(args.r, args.n_max, suites, jobs=args.jobs, seed=args.seed,
                        samples=args.samples)
    if args.format == "json":
        print(json.dumps(result.to_dict(), indent=2))
    else:
        sys.stdout.write(result.render())
    return 0 if result.ok else 1


def _var(text: str) -> int:
    j = int(text)
    if j < 1:
        raise argparse.ArgumentTypeError("variables are numbered from 1")
    return j - 1


def cmd_make(args) -> int:
    kind = args.kind
    if kind == "box":
        beta = box(args.widths)
    elif kind == "thicken":
        beta = thicken(load(args.path), args.w)
    elif kind == "truncate":
        beta = truncate(load(args.path), args.j, args.h)
    elif kind == "addbox":
        beta = add_box(load(args.path), args.j, args.h, args.widths)
    else:
        beta = two_box_union(args.widths1, args.widths2)
    _emit(dump(beta), args.output)
    return 0


def cmd_dump_system(args) -> int:
    _emit(hom_system(load(args.path)).dump(), args.output)
    return 0


def _emit(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hilbsmooth",
                                description="Smoothness of monomial points on Hilbert schemes of points.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyse one staircase file")
    a.add_argument("path")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--no-oracle", action="store_true", help="skip the linear-algebra cross-check")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("census", help="enumerate all staircases up to a size and verify")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--verify", default="all",
                   help="comma-separated suites: all or " + ",".join(SUITES))
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=50, help="random boxes and unions per suite")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_census)

    m = sub.add_parser("make", help="write a staircase built by a constructor")
    msub = m.add_subparsers(dest="kind", required=True)
    mb = msub.add_parser("box")
    mb.add_argument("widths", type=_widths)
    mt = msub.add_parser("thicken")
    mt.add_argument("path")
    mt.add_argument("w", type=int)
    mr = msub.add_parser("truncate")
    mr.add_argument("path")
    mr.add_argument("j", type=_var)
    mr.add_argument("h", type=int)
    ma = msub.add_parser("addbox")
    ma.add_argument("path")
    ma.add_argument("j", type=_var)
    ma.add_argument("h", type=int)
    ma.add_argument("widths", type=_widths)
    mu = msub.add_parser("union")
    mu.add_argument("widths1", type=_widths)
    mu.add_argument("widths2", type=_widths)
    for sp in (mb, mt, mr, ma, mu):
        sp.add_argument("-o", "--output", default=None)
    m.set_defaults(func=cmd_make)

    d = sub.add_parser("dump-system", help="write the tangent-space constraint matrix as triplets")
    d.add_argument("path")
    d.add_argument("-o", "--output", default=None)
    d.set_defaults(func=cmd_dump_system)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (StaircaseError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
