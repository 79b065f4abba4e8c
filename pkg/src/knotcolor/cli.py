"""Command-line front end.

    knotcolor det figure8.pd
    knotcolor colorings trefoil -n 3 --list
    knotcolor matrices "P(3,3,-3)" --json
    knotcolor pretzel-sweep --max-m 4 --max-q 5

An input is a PD file, a corpus name (``knotcolor corpus``), or a pretzel
spec ``P(q1,...,qm)``.  Exit codes: 0 ok, 1 usage, 2 bad input,
3 a cross-check between independent routes failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field

from . import corpus, exactla
from .coloring import (
    build_precoloring,
    colorings,
    count_colorings,
    determinant,
    elementary_divisors,
    is_n_colorable,
    nullity,
)
from .diagram import PlanarDiagram, RegionComplex, faces, read_pd, strands
from .errors import InputError, InvariantViolation, KnotColorError, RouteDisagreement
from .goeritz import build_goeritz, goeritz_determinant, goeritz_nullity
from .pretzel import (
    PretzelSpec,
    build_A,
    determinant_sweep,
    is_pretzel_spec,
    pipeline_sweep,
    pretzel_determinant,
    pretzel_diagram,
    pretzel_nullity,
)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class Report:
    input: str
    crossings: int | None = None
    determinant: int | None = None
    determinants: dict[str, int] = field(default_factory=dict)
    nullities: dict[str, dict[str, int]] = field(default_factory=dict)
    coloring_counts: dict[str, dict[str, int]] = field(default_factory=dict)
    matrices: dict[str, dict] = field(default_factory=dict)
    colorings: list[list[int]] | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v not in (None, {}, [])}


@dataclass
class Subject:
    label: str
    diagram: PlanarDiagram
    spec: PretzelSpec | None = None


class UsageError(Exception):
    pass


def load_input(arg: str) -> Subject:
    if is_pretzel_spec(arg):
        spec = PretzelSpec.parse(arg)
        return Subject(str(spec), pretzel_diagram(spec), spec)
    if os.path.exists(arg):
        return Subject(arg, read_pd(arg))
    if arg in corpus.KNOT_OF:
        return Subject(arg, corpus.load(arg))
    raise InputError(f"{arg!r} is not a file, a corpus name, or a P(...) spec")


def _matrix_dict(m: exactla.IntMatrix, row_labels, col_labels) -> dict:
    return {"rows": row_labels, "cols": col_labels, "entries": m.to_rows()}


def _regions(args, d: PlanarDiagram) -> RegionComplex:
    return faces(d, shade_unbounded=args.shade_unbounded)


def _via_goeritz(args, subj: Subject) -> int:
    return goeritz_determinant(_regions(args, subj.diagram))


def cmd_det(args, subj: Subject) -> Report:
    rep = Report(subj.label, subj.diagram.crossing_count)
    if args.via in ("coloring", "both"):
        rep.determinants["coloring"] = determinant(subj.diagram)
    if args.via in ("goeritz", "both"):
        rep.determinants["goeritz"] = _via_goeritz(args, subj)
    if subj.spec is not None and args.via == "both":
        rep.determinants["pretzel_formula"] = pretzel_determinant(subj.spec)
    values = set(rep.determinants.values())
    if len(values) != 1:
        raise RouteDisagreement(f"determinant routes disagree: {rep.determinants}")
    rep.determinant = values.pop()
    return rep


def cmd_nullity(args, subj: Subject) -> Report:
    p = args.p
    rep = Report(subj.label, subj.diagram.crossing_count)
    rc = _regions(args, subj.diagram)
    routes = {"coloring": nullity(subj.diagram, p), "goeritz": goeritz_nullity(rc, p)}
    if subj.spec is not None:
        routes["pretzel_formula"] = pretzel_nullity(subj.spec, p)
    if len(set(routes.values())) != 1:
        raise RouteDisagreement(f"nullity routes disagree mod {p}: {routes}")
    rep.nullities[str(p)] = routes
    rep.coloring_counts[str(p)] = {"total": p ** (routes["coloring"] + 1)}
    return rep


def cmd_colorings(args, subj: Subject) -> Report:
    n = args.n
    if n < 1:
        raise UsageError("-n must be at least 1")
    d = subj.diagram
    rep = Report(subj.label, d.crossing_count)
    total = count_colorings(d, n)
    rep.coloring_counts[str(n)] = {"total": total, "nontrivial": total - n}
    if exactla.is_prime(n):
        rep.nullities[str(n)] = {"coloring": nullity(d, n)}
    if n >= 2:
        rep.extra["n_colorable"] = is_n_colorable(d, n)
    if args.list:
        rep.colorings = [list(c.colors) for c in colorings(d, n)]
    return rep


def cmd_matrices(args, subj: Subject) -> Report:
    d = subj.diagram
    rep = Report(subj.label, d.crossing_count)
    if d.crossings:
        sys_ = build_precoloring(d)
        xs = [f"x{s.id + 1}" for s in strands(d)]
        cs = [f"c{k + 1}" for k in range(d.crossing_count)]
        rep.matrices["precoloring"] = _matrix_dict(sys_.pre_matrix, cs, xs)
        rep.matrices["coloring"] = _matrix_dict(
            sys_.matrix,
            [c for k, c in enumerate(cs) if k != sys_.deleted_row],
            [x for k, x in enumerate(xs) if k != sys_.deleted_col],
        )
    rc = _regions(args, d)
    for side, complex_ in (("shaded", rc), ("unshaded", rc.flipped())):
        g = build_goeritz(complex_)
        rs = [f"R{r + 1}" for r in g.region_order]
        kept = [r for k, r in enumerate(rs) if k != g.deleted]
        suffix = "" if side == "shaded" else "_unshaded"
        rep.matrices["pre_goeritz" + suffix] = _matrix_dict(g.pre_matrix, rs, rs)
        rep.matrices["goeritz" + suffix] = _matrix_dict(g.matrix, kept, kept)
    if subj.spec is not None:
        labels = [f"d{i + 1}" for i in range(subj.spec.m)]
        rep.matrices["A"] = _matrix_dict(build_A(subj.spec).A, [f"e{i + 1}" for i in range(subj.spec.m)], labels)
    return rep


def cmd_goeritz(args, subj: Subject) -> Report:
    rc = _regions(args, subj.diagram)
    rep = Report(subj.label, subj.diagram.crossing_count)
    g = build_goeritz(rc)
    rs = [f"R{r + 1}" for r in g.region_order]
    rep.matrices["pre_goeritz"] = _matrix_dict(g.pre_matrix, rs, rs)
    rep.determinants["goeritz"] = goeritz_determinant(rc)
    rep.determinants["goeritz_unshaded"] = goeritz_determinant(rc.flipped())
    if len(set(rep.determinants.values())) != 1:
        raise RouteDisagreement(f"shaded/unshaded Goeritz determinants differ: {rep.determinants}")
    rep.determinant = rep.determinants["goeritz"]
    rep.extra["eta"] = list(rc.eta)
    rep.extra["shaded_regions"] = [r + 1 for r in rc.shaded_ids]
    return rep


def cmd_compare(args, subj: Subject) -> Report:
    d = subj.diagram
    rc = _regions(args, d)
    rep = Report(subj.label, d.crossing_count)
    rep.determinants = {
        "coloring": determinant(d),
        "goeritz": goeritz_determinant(rc),
        "goeritz_unshaded": goeritz_determinant(rc.flipped()),
    }
    if subj.spec is not None:
        rep.determinants["pretzel_formula"] = pretzel_determinant(subj.spec)
    problems = []
    if len(set(rep.determinants.values())) != 1:
        problems.append(f"determinants {rep.determinants}")
    rep.determinant = rep.determinants["coloring"]
    for p in args.primes:
        routes = {"coloring": nullity(d, p), "goeritz": goeritz_nullity(rc, p)}
        if subj.spec is not None:
            routes["pretzel_formula"] = pretzel_nullity(subj.spec, p)
        rep.nullities[str(p)] = routes
        if len(set(routes.values())) != 1:
            problems.append(f"nullities mod {p} {routes}")
    rep.extra["elementary_divisors"] = elementary_divisors(d)
    if problems:
        raise RouteDisagreement("; ".join(problems))
    return rep


def cmd_pretzel_sweep(args) -> dict:
    rows = pipeline_sweep(args.max_m, args.max_q, args.primes)
    out = {
        "max_m": args.max_m,
        "max_q": args.max_q,
        "primes": list(args.primes),
        "knots": len(rows),
        "failures": sum(not r.ok for r in rows),
        "rows": [
            {
                "spec": str(r.spec),
                "det": [r.formula_det, r.matrix_det, r.diagram_det],
                "nullity": {str(p): list(v) for p, v in r.nullities.items()},
                "ok": r.ok,
            }
            for r in rows
        ],
    }
    if args.det_max_m:
        cases, bad = determinant_sweep(args.det_max_m, args.max_q)
        out["determinant_sweep"] = {"cases": cases, "mismatches": [list(q) for q in bad]}
    return out


# -- output -------------------------------------------------------------------

def _print_matrix(name: str, m: dict):
    print(f"{name}:")
    entries = m["entries"]
    cells = [[""] + m["cols"]] + [[r] + [str(x) for x in row] for r, row in zip(m["rows"], entries)]
    if not entries:
        print("  (empty)")
        return
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        print("  " + " ".join(c.rjust(width) for c in row))


def print_report(rep: Report):
    print(f"input: {rep.input}")
    if rep.crossings is not None:
        print(f"crossings: {rep.crossings}")
    if rep.determinant is not None:
        print(f"determinant: {rep.determinant}")
    for route, v in rep.determinants.items():
        print(f"  via {route}: {v}")
    for p, routes in rep.nullities.items():
        print(f"nullity mod {p}: " + ", ".join(f"{k}={v}" for k, v in routes.items()))
    for n, counts in rep.coloring_counts.items():
        print(f"{n}-colorings: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    for k, v in rep.extra.items():
        print(f"{k}: {v}")
    for name, m in rep.matrices.items():
        _print_matrix(name, m)
    if rep.colorings is not None:
        for col in rep.colorings:
            print("  " + " ".join(str(c) for c in col))


def print_sweep(out: dict):
    primes = out["primes"]
    head = f"{'spec':<22} {'det(formula,A,diagram)':<24} " + " ".join(f"p={p:<8}" for p in primes) + " ok"
    print(head)
    for r in out["rows"]:
        nulls = " ".join(f"{','.join(map(str, r['nullity'][str(p)])):<10}" for p in primes)
        dets = ",".join(map(str, r["det"]))
        print(f"{r['spec']:<22} {dets:<24} {nulls} {'yes' if r['ok'] else 'NO'}")
    print(f"{out['knots']} knot-closing specs, {out['failures']} disagreements")
    if "determinant_sweep" in out:
        ds = out["determinant_sweep"]
        print(f"determinant sweep: {ds['cases']} cases, {len(ds['mismatches'])} mismatches")


# -- argument parsing ---------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _primes(text: str) -> list[int]:
    ps = [int(x) for x in text.split(",") if x.strip()]
    bad = [p for p in ps if not exactla.is_prime(p)]
    if bad:
        raise argparse.ArgumentTypeError(f"not prime: {bad}")
    return ps


def _prime(text: str) -> int:
    p = int(text)
    if not exactla.is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--shade-unbounded", action="store_true",
                        help="shade the unbounded (largest) region instead of leaving it unshaded")

    parser = _Parser(prog="knotcolor", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("det", parents=[common], help="knot determinant")
    p.add_argument("input")
    p.add_argument("--via", choices=("coloring", "goeritz", "both"), default="both")

    p = sub.add_parser("nullity", parents=[common], help="mod-p nullity")
    p.add_argument("input")
    p.add_argument("-p", type=_prime, required=True)

    p = sub.add_parser("colorings", parents=[common], help="count or list n-colorings")
    p.add_argument("input")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--list", action="store_true")

    p = sub.add_parser("matrices", parents=[common], help="pre-coloring, coloring and Goeritz matrices")
    p.add_argument("input")

    p = sub.add_parser("goeritz", parents=[common], help="Goeritz matrix and determinant")
    p.add_argument("input")

    p = sub.add_parser("compare", parents=[common], help="run both routes and check they agree")
    p.add_argument("input")
    p.add_argument("--primes", type=_primes, default=[2, 3, 5, 7, 11, 13])

    p = sub.add_parser("pretzel-sweep", parents=[common], help="pretzel closed forms vs generic pipeline")
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-q", type=int, default=3)
    p.add_argument("--primes", type=_primes, default=[2, 3, 5, 7])
    p.add_argument("--det-max-m", type=int, default=0,
                   help="also compare det(A) with the closed form for every spec up to this m")

    sub.add_parser("corpus", parents=[common], help="list bundled diagrams")
    return parser


COMMANDS = {
    "det": cmd_det,
    "nullity": cmd_nullity,
    "colorings": cmd_colorings,
    "matrices": cmd_matrices,
    "goeritz": cmd_goeritz,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            out = {name: corpus.KNOT_OF[name] for name in corpus.names()}
            if args.json:
                print(json.dumps(out, indent=2))
            else:
                for name, knot in out.items():
                    print(f"{name:<18} {knot}")
            return EXIT_OK
        if args.command == "pretzel-sweep":
            out = cmd_pretzel_sweep(args)
            if args.json:
                print(json.dumps(out, indent=2))
            else:
                print_sweep(out)
            bad = out["failures"] or out.get("determinant_sweep", {}).get("mismatches")
            return EXIT_INTERNAL if bad else EXIT_OK
        subj = load_input(args.input)
        rep = COMMANDS[args.command](args, subj)
    except UsageError as e:
        print(f"knotcolor: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as e:
        print(f"knotcolor: internal check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as e:
        print(f"knotcolor: {e}", file=sys.stderr)
        return EXIT_INPUT
    except KnotColorError as e:
        # enumeration caps: the request is valid but too big as asked
        print(f"knotcolor: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"knotcolor: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print_report(rep)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
