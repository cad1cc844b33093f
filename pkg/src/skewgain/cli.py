"""Command-line front end: ``skewgain <verb> [<file>] [flags]``.

Exit status: 0 on success (and, for ``verify``, when every applicable
identity holds), 1 when ``verify`` finds a failing identity, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core
from .algebra.backends import DEFAULT_TOL
from .algebra.linalg import char_poly, det
from .algebra.polynomial import Polynomial
from .enumeration import DEFAULT_CAP, elementary_subgraphs, essential_spanning_subgraphs, matchings
from .errors import SkewGainError
from .matrices import (
    adjacency_matrix,
    degree_matrix,
    g_degree_matrix,
    g_laplacian,
    incidence,
    incidence_sharp,
    laplacian,
)
from .spectral import laplacian_spectrum
from .theorems import (
    charpoly_closed_form,
    classify,
    charpoly_combinatorial,
    detect_family,
    det_lg_closed_form,
    matrix_tree_sum,
    verify_all,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MATRIX_BUILDERS = {
    "A": adjacency_matrix,
    "D": degree_matrix,
    "L": lambda G: laplacian(G)[1],
    "Dg": g_degree_matrix,
    "Lg": lambda G: g_laplacian(G)[1],
    "H": incidence,
    "Hsharp": incidence_sharp,
}
CHARPOLY_MATRICES = {"L": lambda G: laplacian(G)[1], "Lg": lambda G: g_laplacian(G)[1],
                     "A": adjacency_matrix}


class UsageError(Exception):
    pass


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("--tol must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewgain",
        description="Laplacian and g-Laplacian matrices of skew gain graphs, with identity checks.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="<verb>")

    def with_file(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file (JSON)")
        return p

    p = with_file("matrices", "print A, D, L, D_g, L_g, H or H#")
    p.add_argument("--which", choices=[*MATRIX_BUILDERS, "all"], default="all")
    p.add_argument("--json", action="store_true")

    p = with_file("charpoly", "characteristic polynomial")
    p.add_argument("--which", choices=list(CHARPOLY_MATRICES), default="L")
    p.add_argument("--method", choices=["direct", "combinatorial", "closed-form", "both"],
                   default="direct")
    p.add_argument("--family", choices=["path", "cycle", "star"],
                   help="closed-form family (detected when omitted)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json", action="store_true")

    p = with_file("spectrum", "eigenvalues as 're imag multiplicity' lines")
    p.add_argument("--which", choices=["L", "Lg", "A"], default="L")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--json", action="store_true")

    p = with_file("enumerate", "count elementary subgraphs, matchings and spanning 1-forests")
    p.add_argument("--kind", choices=["elementary", "matchings", "essential", "all"], default="all")
    p.add_argument("--list", action="store_true", help="print one certificate per line")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = with_file("det-lg", "determinant of the g-Laplacian")
    p.add_argument("--method", choices=["direct", "closed-form", "matrix-tree", "both"],
                   default="direct")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = with_file("verify", "check every applicable identity")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="write a family instance as a graph file")
    p.add_argument("family", choices=core.FAMILY_KINDS)
    p.add_argument("--n", type=int, help="vertices (path, cycle, unicyclic, custom), "
                   "leaves (star) or first part size (complete_bipartite)")
    p.add_argument("--m", type=int, help="edges (custom) or second part size (complete_bipartite)")
    p.add_argument("--k", type=int, default=3, help="cycle length (unicyclic)")
    p.add_argument("--gains", default="all-one",
                   help="'all-one', 'random', or a comma-separated list of gain strings")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=["rational-id", "complex-conj"], default="rational-id")
    p.add_argument("--out", help="output path (stdout when omitted)")
    return parser


def _load(path: str) -> core.SkewGainGraph:
    try:
        return core.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_matrices(args, out) -> int:
    G = _load(args.file)
    names = list(MATRIX_BUILDERS) if args.which == "all" else [args.which]
    mats = {name: MATRIX_BUILDERS[name](G) for name in names}
    if args.json:
        print(json.dumps({name: M.to_json() for name, M in mats.items()}, indent=2), file=out)
        return EXIT_OK
    for k, (name, M) in enumerate(mats.items()):
        if len(mats) > 1:
            if k:
                print(file=out)
            print(f"{name} ({M.rows}x{M.cols}):", file=out)
        text = M.format()
        if text:
            print(text, file=out)
    return EXIT_OK


def _closed_form(G, args) -> Polynomial:
    family = args.family or detect_family(G)
    if family is None:
        raise UsageError("no closed form: graph is not a path, cycle or star")
    return charpoly_closed_form(G, family, args.cap)


def cmd_charpoly(args, out) -> int:
    G = _load(args.file)
    if args.method != "direct" and args.which != "L":
        raise UsageError(f"--method {args.method} is only defined for --which L")
    results: list[tuple[str, Polynomial]] = []
    if args.method in ("direct", "both"):
        results.append(("direct", char_poly(CHARPOLY_MATRICES[args.which](G))))
    if args.method in ("combinatorial", "both"):
        results.append(("combinatorial", charpoly_combinatorial(G, args.cap)))
    if args.method == "closed-form":
        results.append(("closed-form", _closed_form(G, args)))
    match = None
    if len(results) == 2:
        a, b = results[0][1], results[1][1]
        match = a == b if G.backend.exact else a.equals(b)
    if args.json:
        doc = {name: p.to_json() for name, p in results}
        if match is not None:
            doc["match"] = match
        print(json.dumps(doc), file=out)
    else:
        if len(results) == 1:
            print(results[0][1].format(), file=out)
        else:
            for name, p in results:
                print(f"{name}: {p.format()}", file=out)
            print("MATCH" if match else "MISMATCH", file=out)
    return EXIT_OK if match in (None, True) else EXIT_FAIL


def cmd_spectrum(args, out) -> int:
    G = _load(args.file)
    spec = laplacian_spectrum(G, args.which, args.tol)
    if args.json:
        print(json.dumps({
            "source": spec.source,
            "eigenvalues": [{"re": z.real, "imag": z.imag, "multiplicity": m}
                            for z, m in spec.eigenvalues],
        }), file=out)
    else:
        for line in spec.lines(args.tol):
            print(line, file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    G = _load(args.file)
    kinds = ["elementary", "matchings", "essential"] if args.kind == "all" else [args.kind]
    producers = {
        "elementary": lambda: elementary_subgraphs(G, args.cap),
        "matchings": lambda: matchings(G, args.cap),
        "essential": lambda: essential_spanning_subgraphs(G, args.cap),
    }
    for kind in kinds:
        items = list(producers[kind]())
        print(f"{kind}: {len(items)}", file=out)
        if args.list:
            for item in items:
                print(f"  {item.describe()}", file=out)
    return EXIT_OK


def cmd_det_lg(args, out) -> int:
    G = _load(args.file)
    fmt = G.backend.format
    values = []
    if args.method in ("direct", "both"):
        values.append(("direct", det(g_laplacian(G)[1])))
    if args.method in ("matrix-tree", "both"):
        values.append(("matrix-tree", matrix_tree_sum(G, args.cap)))
    if args.method == "closed-form" or (args.method == "both" and classify(G) is not None):
        cf = det_lg_closed_form(G)
        values.append((f"closed-form ({cf.rule})", cf.value))
    if len(values) == 1:
        print(fmt(values[0][1]), file=out)
        return EXIT_OK
    for name, v in values:
        print(f"{name}: {fmt(v)}", file=out)
    ref = values[0][1]
    ok = all(G.backend.eq(ref, v) for _, v in values[1:])
    print("MATCH" if ok else "MISMATCH", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    G = _load(args.file)
    report = verify_all(G, args.tol, args.cap)
    if args.json:
        print(json.dumps(report.to_json(), indent=2), file=out)
    else:
        for line in report.lines():
            print(line, file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_gen(args, out) -> int:
    kind = args.family
    if kind == "complete_bipartite":
        params = {"p": args.n, "q": args.m}
    elif kind == "custom":
        params = {"n": args.n, "m": args.m}
    elif kind == "unicyclic":
        params = {"n": args.n, "k": args.k}
    else:
        params = {"n": args.n}
    family = core.GraphFamily(kind, params)
    gains = args.gains
    if gains not in ("all-one", "random"):
        gains = [g.strip() for g in gains.split(",")]
    G = core.generate(family, gains, args.seed, args.backend)
    if gains == "random" or kind in ("custom", "unicyclic"):
        print(f"# seed {args.seed}", file=sys.stderr)
    if args.out:
        G.save(args.out)
        print(f"wrote {args.out}: n={G.n}, m={G.m}, backend={G.backend.id}", file=out)
    else:
        out.write(G.dumps())
    return EXIT_OK


COMMANDS = {
    "matrices": cmd_matrices,
    "charpoly": cmd_charpoly,
    "spectrum": cmd_spectrum,
    "enumerate": cmd_enumerate,
    "det-lg": cmd_det_lg,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"skewgain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SkewGainError as exc:
        print(f"skewgain: error: {exc.name}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
