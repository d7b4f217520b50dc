"""Command-line entry point: ``specbisect <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 theorem-check failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .bisect import BisectionError, spectral_bisection
from .eigen import EigenError, eigendecompose, fiedler_space
from .family import FamilyConfig, FamilyError, build_family
from .graph import GraphError, laplacian, read_edge_list, to_dot, write_edge_list
from .harness import export_report, summarize, verify_theorem_sweep
from .oracle import OracleError, optimal_bisection

EXIT_OK, EXIT_INVALID, EXIT_THEOREM = 0, 1, 2


def _int_list(tokens) -> list[int]:
    """Expand tokens such as ``13 14``, ``13,14`` or ``13-16`` into integers."""
    out = []
    for token in tokens:
        for part in token.split(","):
            if not part:
                continue
            lo, sep, hi = part.partition("-")
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    return out


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def cmd_generate(args) -> int:
    cfg = FamilyConfig(args.m, (args.base,) * 4, args.cone)
    g, _ = build_family(cfg.to_spec())
    write_edge_list(g, args.out)
    print(f"wrote {args.out}: n={g.n} edges={g.n_edges}")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    spec = eigendecompose(laplacian(read_edge_list(args.file)))
    for value in spec.eigenvalues:
        print(_fmt(value))
    return EXIT_OK


def cmd_bisect(args) -> int:
    g = read_edge_list(args.file)
    lap = laplacian(g)
    space = fiedler_space(lap, eigendecompose(lap))
    results = [spectral_bisection(g, y) for y in space.basis.T]
    best = min(results, key=lambda b: b.cut)
    print(f"lambda2 {_fmt(space.eigenvalue)}")
    print(f"multiplicity {space.multiplicity}")
    print(f"cut {best.cut}")
    print("S " + " ".join(map(str, best.side_s)))
    print("Sc " + " ".join(map(str, best.side_sc)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    result = optimal_bisection(read_edge_list(args.file), n_jobs=args.jobs)
    print(f"cut {result.best_cut}")
    print("S " + " ".join(map(str, result.best_set)))
    print(f"enumerated {result.enumerated}")
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify_theorem_sweep(
        _int_list(args.m_list), args.base, _int_list(args.k_list), n_jobs=args.jobs
    )
    if args.json:
        with open(args.json, "wb") as fh:
            fh.write(export_report(reports, "json"))
    if args.csv:
        with open(args.csv, "wb") as fh:
            fh.write(export_report(reports, "csv"))
    for r in reports:
        status = "FAIL" if r.failed else ("n/a" if r.passes_lower is None else "pass")
        print(
            f"m={r.m} k={r.k} n={r.n} spectral={r.spectral_cut} witness={r.witness_cut} "
            f"oracle={'-' if r.oracle_cut is None else r.oracle_cut} "
            f"error>={r.error_lower} threshold={_fmt(r.theorem_threshold)} {status}"
        )
    print(summarize(reports))
    return EXIT_THEOREM if any(r.failed for r in reports) else EXIT_OK


def cmd_export(args) -> int:
    sys.stdout.write(to_dot(read_edge_list(args.dot)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specbisect", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family instance as an edge list")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--base", default="cycle")
    p.add_argument("--cone", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("spectrum", help="print Laplacian eigenvalues")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bisect", help="spectral bisection and its cut")
    p.add_argument("file")
    p.set_defaults(func=cmd_bisect)

    p = sub.add_parser("oracle", help="exhaustive optimal bisection (n <= 28)")
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="sweep family instances and check the cut-gap bounds")
    p.add_argument("--m-list", nargs="+", required=True)
    p.add_argument("--k-list", nargs="+", default=["0"])
    p.add_argument("--base", default="cycle")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="convert an edge list to DOT on stdout")
    p.add_argument("--dot", required=True, metavar="FILE")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (GraphError, FamilyError, BisectionError, EigenError, OracleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
