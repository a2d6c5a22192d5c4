"""Command-line front end.

Subcommands: info, iso, spectrum, length, automorphisms, reconstruct,
verify complete-invariant, verify spectrum.  Exit codes: 0 success,
1 negative decision or failed verification, 2 usage or parse errors.
Text output is the human interface; --json is the stable machine
interface.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import InvariantTriple, is_tube, rank, real_dim, shilov_dim
from .domain import invariants, sym_group
from .errors import (
    Ambiguous,
    DomainSyntaxError,
    EmptyProduct,
    InvalidTuple,
    NotFound,
    OutOfCanonicalRange,
    SizeLimit,
    WeightOutOfRange,
    WrongArity,
)
from .parsing import format_domain, parse_domain
from .reconstruct import (
    from_invariants,
    verify_complete_invariant,
    verify_spectrum_sweep,
)
from .spectrum import (
    build_spectrum,
    decompose_weight_ideal,
    factor_permutation_of,
    ideal_of_weight,
    layer_components,
    poset_automorphisms,
    solvable_length,
    to_dot,
    to_json_dict,
)

_USAGE_ERRORS = (
    DomainSyntaxError,
    OutOfCanonicalRange,
    WrongArity,
    EmptyProduct,
    SizeLimit,
    WeightOutOfRange,
    InvalidTuple,
)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _tup(i) -> str:
    return "(" + ",".join(str(c) for c in i) + ")"


def _cycles(sigma) -> str:
    """One-line cycle notation, 1-indexed, fixed points omitted; 'id' if trivial."""
    seen = set()
    parts = []
    for start in range(len(sigma)):
        if start in seen or sigma[start] == start:
            seen.add(start)
            continue
        cycle = []
        j = start
        while j not in seen:
            seen.add(j)
            cycle.append(j + 1)
            j = sigma[j]
        parts.append("(" + " ".join(str(c) for c in cycle) + ")")
    return "".join(parts) if parts else "id"


def _print_table(headers, rows):
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in rows)) for i in range(len(headers))
    ]

    def fmt(cells):
        padded = [
            cells[0].ljust(widths[0]),
            *(c.rjust(w) for c, w in zip(cells[1:], widths[1:])),
        ]
        return "  ".join(padded).rstrip()

    print(fmt(headers))
    for r in rows:
        print(fmt(r))


def _cmd_info(args) -> int:
    d = parse_domain(args.expr)
    triple = invariants(d)
    sg = sym_group(d)
    if args.json:
        payload = {
            "domain": format_domain(d),
            "factors": [
                {
                    "factor": str(f),
                    "family": f.family.name,
                    "params": list(f.params),
                    "rank": rank(f),
                    "real_dim": real_dim(f),
                    "shilov_dim": shilov_dim(f),
                    "tube": is_tube(f),
                }
                for f in d.factors
            ],
            "invariants": {
                "rank": triple.rank,
                "real_dim": triple.real_dim,
                "shilov_dim": triple.shilov_dim,
            },
            "sym_order": sg.order,
            "sym_blocks": [[str(f), m] for f, m in sg.blocks],
        }
        print(json.dumps(payload))
        return 0
    print(f"domain: {format_domain(d)}")
    rows = [
        [str(f), str(rank(f)), str(real_dim(f)), str(shilov_dim(f)),
         "yes" if is_tube(f) else "no"]
        for f in d.factors
    ]
    rows.append(["total", str(triple.rank), str(triple.real_dim),
                 str(triple.shilov_dim), ""])
    _print_table(["factor", "rank", "dim", "shilov", "tube"], rows)
    print(f"sym order: {sg.order}")
    return 0


def _cmd_iso(args) -> int:
    a = parse_domain(args.expr1)
    b = parse_domain(args.expr2)
    if a == b:
        print("isomorphic")
        return 0
    print("not isomorphic")
    return 1


def _cmd_length(args) -> int:
    print(solvable_length(build_spectrum(parse_domain(args.expr))))
    return 0


def _cmd_spectrum(args) -> int:
    d = parse_domain(args.expr)
    p = build_spectrum(d)
    if args.ideals is not None:
        k = args.ideals
        parts = decompose_weight_ideal(p, k)
        components = layer_components(p, k)
        if args.json:
            payload = {
                "domain": format_domain(d),
                "weight": k,
                "summands": [
                    {"index": list(i), "members": [list(m) for m in part.sorted_members()]}
                    for i, part in zip(components, parts)
                ],
                "union_size": len(ideal_of_weight(p, k).members),
            }
            print(json.dumps(payload))
            return 0
        print(f"domain: {format_domain(d)}")
        print(f"weight-{k} ideal: {len(ideal_of_weight(p, k).members)} strata")
        for i, part in zip(components, parts):
            members = " ".join(_tup(m) for m in part.sorted_members())
            print(f"summand {_tup(i)}: {members}")
        print("union equals weight ideal: yes")
        return 0
    if args.dot:
        sys.stdout.write(to_dot(p))
        return 0
    if args.json:
        print(json.dumps(to_json_dict(p)))
        return 0
    print(f"domain: {format_domain(d)}")
    print(f"ranks: {_tup(p.ranks)}")
    print(f"strata: {p.size}")
    print(f"solvable length: {solvable_length(p)}")
    for k in range(solvable_length(p) + 1):
        row = " ".join(_tup(s) for s in layer_components(p, k))
        print(f"weight {k}: {row}")
    return 0


def _cmd_automorphisms(args) -> int:
    d = parse_domain(args.expr)
    p = build_spectrum(d)
    autos = poset_automorphisms(p, respect_labels=True)
    perms = [factor_permutation_of(a) for a in autos]
    order = sym_group(d).order
    if args.json:
        payload = {
            "domain": format_domain(d),
            "count": len(autos),
            "sym_order": order,
            "automorphisms": [
                {"factor_permutation": list(sigma), "cycles": _cycles(sigma)}
                for sigma in perms
            ],
        }
        print(json.dumps(payload))
        return 0
    print(f"domain: {format_domain(d)}")
    print(f"label-respecting automorphisms: {len(autos)} (sym order {order})")
    for sigma in perms:
        print(_cycles(sigma))
    return 0


def _cmd_reconstruct(args) -> int:
    try:
        triple = InvariantTriple(args.rank, args.dim, args.shilov)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        print(from_invariants(triple))
        return 0
    except NotFound:
        print("not found")
        return 1
    except Ambiguous as exc:
        print("ambiguous: " + ", ".join(str(m) for m in exc.matches))
        return 1


def _cmd_verify_complete(args) -> int:
    if args.max < 1:
        print("error: --max must be >= 1", file=sys.stderr)
        return 2
    report = verify_complete_invariant(args.max, threads=args.threads)
    if args.json:
        print(json.dumps(report.to_json_dict()))
        return 0 if report.ok else 1
    status = "OK" if report.ok else "FAIL"
    print(f"{status}: {len(report.collisions)} collisions / "
          f"{report.scanned_count} factors scanned")
    for t, fs in report.collisions:
        print(f"  {t}: " + ", ".join(str(f) for f in fs))
    print(f"round-trip failures: {len(report.roundtrip_failures)}")
    for f in report.roundtrip_failures:
        print(f"  {f}")
    print(f"tube-criterion violations: {len(report.tube_violations)}")
    for f in report.tube_violations:
        print(f"  {f}")
    return 0 if report.ok else 1


def _cmd_verify_spectrum(args) -> int:
    if args.max_rank < 1 or args.max_factors < 1 or args.max_param < 1:
        print("error: sweep bounds must be >= 1", file=sys.stderr)
        return 2
    report = verify_spectrum_sweep(args.max_rank, args.max_factors, args.max_param)
    if args.json:
        print(json.dumps(report.to_json_dict()))
        return 0 if report.ok else 1
    status = "OK" if report.ok else "FAIL"
    print(f"{status}: {report.domains_checked} domains verified "
          f"(max rank {report.max_rank}, max factors {report.max_factors}, "
          f"max param {report.max_param})")
    for v in report.violations:
        print(f"  {v}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="symdom",
        description="Invariants, spectra, and reconstruction for bounded "
                    "symmetric domains and their Toeplitz algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_ArgumentParser)

    p = sub.add_parser("info", help="invariant triple, factor table, sym order")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("iso", help="decide (stable) isomorphism; exit 0/1")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("spectrum", help="stratum poset summary or export")
    p.add_argument("expr")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Hasse diagram in DOT syntax")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--ideals", type=int, metavar="K",
                   help="print the weight-K ideal decomposition")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("length", help="solvable length of the spectrum")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_length)

    p = sub.add_parser("automorphisms",
                       help="label-respecting poset automorphisms as factor permutations")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_automorphisms)

    p = sub.add_parser("reconstruct", help="factor with the given invariant triple")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--shilov", type=int, required=True)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("verify", help="exhaustive desk-scale sweeps")
    vsub = p.add_subparsers(dest="sweep", required=True,
                            parser_class=_ArgumentParser)

    v = vsub.add_parser("complete-invariant",
                        help="triple injectivity, inversion round-trip, tube criterion")
    v.add_argument("--max", type=int, required=True, metavar="N")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify_complete)

    v = vsub.add_parser("spectrum",
                        help="solvable length, ideal decomposition, automorphism rigidity")
    v.add_argument("--max-rank", type=int, required=True, metavar="R")
    v.add_argument("--max-factors", type=int, required=True, metavar="S")
    v.add_argument("--max-param", type=int, default=3, metavar="P")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify_spectrum)

    return parser


def run(argv=None) -> int:
    """Dispatch one command line; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "dot", False) and args.ideals is not None:
        print("error: --dot cannot be combined with --ideals", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
