"""Command-line front end.

Exit codes: 0 success/verified, 1 verification or theorem check failed,
2 invalid input, 3 cap or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import (
    dump_certificate,
    load_certificate,
    theorem1_construct,
    theorem2_construct,
    verify_certificate,
    verify_theorem1_structural,
    Provenance,
)
from .errors import (
    BudgetExceededError,
    CheckFailedError,
    InvalidParametersError,
    TooLargeError,
)
from .experiments import (
    rows_to_csv,
    rows_to_json,
    run_conjecture_table,
    run_gk1_check,
    run_theorem1_sweep,
    run_theorem2_sweep,
)
from .levelgraph import LevelGraphSpec, graph_stats
from .solver import branch_and_bound_gamma, greedy_dominate, DEFAULT_NODE_BUDGET


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_stats(args) -> int:
    stats = graph_stats(LevelGraphSpec(args.n, args.k, args.l))
    print(json.dumps(stats, indent=2))
    return 0


def _cmd_construct(args) -> int:
    if args.theorem == 1:
        if args.k is None:
            raise InvalidParametersError("--k is required for theorem 1")
        _, cert = theorem1_construct(args.n, args.k)
    else:
        cert = theorem2_construct(args.n)
    _emit(dump_certificate(cert) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    with open(args.cert) as fh:
        cert = load_certificate(fh.read())
    if args.structural:
        if cert.provenance is not Provenance.THEOREM1:
            raise InvalidParametersError(
                "--structural applies only to theorem-1 certificates"
            )
        n, k = cert.spec.n, cert.spec.k
        parts, rebuilt = theorem1_construct(n, k)
        if rebuilt.members != cert.members:
            print("certificate does not match the canonical construction")
            return 1
        ok = verify_theorem1_structural(parts, n, k)
        print("verified" if ok else "structural verification failed")
        return 0 if ok else 1
    result = verify_certificate(cert)
    if result.verified:
        print("verified")
        return 0
    print(f"not dominating; undominated vertex: "
          f"{result.witness.level.value} {list(result.witness.set.elements())}")
    return 1


def _cmd_exact(args) -> int:
    spec = LevelGraphSpec(args.n, args.k, args.l)
    report = branch_and_bound_gamma(spec, node_budget=args.node_budget)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.output)
    return 0 if report.proven_optimal else 3


def _cmd_greedy(args) -> int:
    spec = LevelGraphSpec(args.n, args.k, args.l)
    report = greedy_dominate(spec)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.output)
    return 0


def _emit_rows(rows, args) -> None:
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    _emit(text, args.output)


def _cmd_sweep(args) -> int:
    if args.theorem == 1:
        rows = run_theorem1_sweep(args.n_min, args.n_max)
    else:
        rows = run_theorem2_sweep(args.n_min, args.n_max)
    _emit_rows(rows, args)
    return 0


def _cmd_gk1(args) -> int:
    _emit_rows(run_gk1_check(args.n_max), args)
    return 0


def _cmd_conjecture(args) -> int:
    rows = run_conjecture_table(
        range(args.n_min, args.n_max + 1), range(args.k_min, args.k_max + 1)
    )
    _emit_rows(rows, args)
    return 0


def _add_spec_args(p) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)


def _add_output_args(p) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubedom",
        description="Dominating sets of the bipartite graph on two levels of the n-cube.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="vertex/edge counts and degrees")
    _add_spec_args(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("construct", help="build a dominating-set certificate")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="verify a certificate file")
    p.add_argument("--cert", required=True)
    p.add_argument("--structural", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact domination number via branch and bound")
    _add_spec_args(p)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--workers", type=int, default=1,
                   help="accepted for interface stability; execution is sequential")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("greedy", help="greedy upper bound")
    _add_spec_args(p)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("sweep", help="theorem sweeps over a range of n")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_output_args(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("gk1-check", help="confirm gamma(G_{k,1}) = n-k+1")
    p.add_argument("--n-max", type=int, required=True)
    _add_output_args(p)
    p.set_defaults(func=_cmd_gk1)

    p = sub.add_parser("conjecture", help="main-term table next to solver bounds")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    _add_output_args(p)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParametersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailedError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (TooLargeError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
