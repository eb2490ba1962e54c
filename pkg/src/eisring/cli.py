"""Command line interface.

Subcommands: divmod, residue-table, energy-table, partition, constellation,
verify.  Lattice elements are written as "a,b" integer pairs.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys

from .eisenstein import Eisenstein, euclid_divmod
from .errors import DomainError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from exc


def _factor_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from exc


def _write(out_path: str, payload: str) -> None:
    if out_path == "-":
        sys.stdout.write(payload)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisring",
        description="Residue systems, partitions and constellation energies "
        "over quotient rings of Eisenstein integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divmod", help="divide, reduce and lift back")
    p.add_argument("--alpha", type=_pair, required=True, metavar="a,b")
    p.add_argument("--modulus", type=_pair, required=True, metavar="a,b")

    p = sub.add_parser("residue-table", help="grid vs reduced representatives")
    p.add_argument("--modulus", type=_pair, required=True, metavar="a,b")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", default="-", metavar="PATH")

    p = sub.add_parser("energy-table", help="Gaussian vs Eisenstein energy comparison")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--builtin", action="store_true", default=True,
                       help="use the built-in pair list (default)")
    group.add_argument("--pairs", metavar="FILE",
                       help="file with one 'ga,gb ea,eb' pair per line")
    p.add_argument("--check", action="store_true",
                   help="compare against the embedded expected values")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", default="-", metavar="PATH")

    p = sub.add_parser("partition", help="additive-subgroup partition tree")
    p.add_argument("--modulus", type=_pair, required=True, metavar="a,b")
    p.add_argument("--factors", type=_factor_list, default=(), metavar="c1,c2")
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.add_argument("--out", default="-", metavar="PATH")

    p = sub.add_parser("constellation", help="scatter data for one constellation")
    p.add_argument("--kind", choices=("eisenstein", "gaussian"), default="eisenstein")
    p.add_argument("--modulus", type=_pair, required=True, metavar="a,b")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--out", default="-", metavar="PATH")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    return parser


def _cmd_divmod(args) -> int:
    from .quotient import decompose, pi_lift

    alpha = Eisenstein(*args.alpha)
    eta = Eisenstein(*args.modulus)
    quot, rem = euclid_divmod(alpha, eta)
    lift = pi_lift(rem, decompose(eta))
    print(f"q={quot.a},{quot.b} r={rem.a},{rem.b} lift={lift.a},{lift.b}")
    return EXIT_OK


def _cmd_residue_table(args) -> int:
    from .quotient import (
        decompose,
        residue_system,
        residue_table_csv,
        residue_table_json,
    )
    import json

    system = residue_system(decompose(Eisenstein(*args.modulus)))
    if args.format == "csv":
        payload = residue_table_csv(system)
    elif args.format == "json":
        payload = json.dumps(residue_table_json(system), indent=2) + "\n"
    else:
        lines = [
            f"[{grid}] -> {rep}"
            for grid, rep in zip(system.r_points, system.e_points)
        ]
        payload = "\n".join(lines) + "\n"
    _write(args.out, payload)
    return EXIT_OK


def _read_pairs_file(path: str):
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            g_text, e_text = line.split()
            pairs.append((_pair(g_text), _pair(e_text)))
    return pairs


def _cmd_energy_table(args) -> int:
    from . import reference
    from .constellation import compare_table, table_csv, table_json, table_text
    from decimal import Decimal

    pairs = _read_pairs_file(args.pairs) if args.pairs else None
    rows = compare_table(pairs)
    if args.format == "csv":
        payload = table_csv(rows)
    elif args.format == "json":
        payload = table_json(rows) + "\n"
    else:
        payload = table_text(rows)
    _write(args.out, payload)
    if args.check:
        if args.pairs:
            print("--check requires the built-in pair list", file=sys.stderr)
            return EXIT_USAGE
        tol = Decimal("0.005")
        for row, expected in zip(rows, reference.ENERGY_TABLE):
            for got, want in zip(row.cells(), expected[3:]):
                if abs(got - Decimal(want)) > tol:
                    print(
                        f"mismatch at size {row.size}: {got} != {want}",
                        file=sys.stderr,
                    )
                    return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_partition(args) -> int:
    from .partition import partition_json, recursive_partition
    from .quotient import decompose
    from .render import partition_svg

    mod = decompose(Eisenstein(*args.modulus))
    root = recursive_partition(mod, args.factors)
    if args.format == "svg":
        payload = partition_svg(mod, root)
    else:
        payload = partition_json(mod, args.factors, root) + "\n"
    _write(args.out, payload)
    return EXIT_OK


def _cmd_constellation(args) -> int:
    from .constellation import build, constellation_json, scatter_csv
    from .render import constellation_svg

    c = build(args.kind, args.modulus)
    if args.format == "svg":
        payload = constellation_svg(c)
    elif args.format == "json":
        payload = constellation_json(c) + "\n"
    else:
        payload = scatter_csv(c)
    _write(args.out, payload)
    return EXIT_OK


def _cmd_verify(args) -> int:
    from . import verify

    kwargs = {"samples": args.samples}
    if args.seed is not None:
        kwargs["seed"] = args.seed
    try:
        report = verify.run_suite(args.suite, **kwargs)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    for line in report.lines():
        print(line)
    if report.passed:
        print(f"OK {args.suite}: {len(report.checks)} checks passed")
        return EXIT_OK
    failed = sum(1 for c in report.checks if not c.passed)
    print(f"FAILED {args.suite}: {failed} of {len(report.checks)} checks failed")
    return EXIT_VERIFY_FAILED


_COMMANDS = {
    "divmod": _cmd_divmod,
    "residue-table": _cmd_residue_table,
    "energy-table": _cmd_energy_table,
    "partition": _cmd_partition,
    "constellation": _cmd_constellation,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
