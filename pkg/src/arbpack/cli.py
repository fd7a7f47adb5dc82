"""Command-line front end.

Exit codes: 0 success / Packed / true, 1 Infeasible / false, 2 usage error,
3 internal error, limit exceeded or packing budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
import warnings

from . import degree_stats as ds
from .errors import ArbpackError, LimitExceededError
from .experiment import load_config, sweep
from .frank import DEFAULT_LIMIT, tau_exact
from .io import format_packing, read_digraph, write_digraph
from .lambda_stat import compute_lambda
from .packer import INFEASIBLE, PACKED, Budget, forced_roots, pack
from .random_model import sample

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _prob(text: str) -> float:
    value = float(text)
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"probability {text} outside [0, 1]")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arbpack", description="Arborescence packing in digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="sample D(n, p) to a digraph file")
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-p", type=_prob, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")

    s = sub.add_parser("stats", help="degree histogram, delta*, light vertices")
    s.add_argument("file")
    s.add_argument("-p", type=_prob, help="model p (default: realised arc density)")
    s.add_argument("--epsilon", type=float, default=0.05)

    lam = sub.add_parser("lambda", help="the in-degree bound lambda(D)")
    lam.add_argument("file")

    t = sub.add_parser("tau", help="exact tau(D) by the subpartition min-max")
    t.add_argument("file")
    t.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    pk = sub.add_parser("pack", help="pack k arc-disjoint arborescences")
    pk.add_argument("file")
    pk.add_argument("-k", type=int, required=True)
    pk.add_argument("--budget", type=int, default=Budget().restarts, help="randomised restarts")
    pk.add_argument("--seed", type=int, default=0)
    pk.add_argument(
        "--exhaustive-limit",
        type=int,
        default=Budget().exhaustive_limit,
        help="largest n for which root assignments are enumerated exhaustively",
    )

    f = sub.add_parser("invert-f", help="solve 1 - a + a log a = target for a in (0, 1)")
    f.add_argument("--target", type=float, required=True)

    e = sub.add_parser("experiment", help="run a seeded sweep from a config file")
    e.add_argument("--config", required=True)
    return parser


def _cmd_gen(args) -> int:
    if args.n < 1:
        raise argparse.ArgumentTypeError("n must be >= 1")
    D = sample(args.n, args.p, args.seed)
    write_digraph(D, args.output or sys.stdout)
    return EXIT_OK


def _cmd_stats(args) -> int:
    D = read_digraph(args.file)
    n = D.n
    hist = ds.histogram(D)
    print(f"n={n} arcs={D.m}")
    print("in_degree_histogram=" + " ".join(f"{k}:{c}" for k, c in hist.as_dict().items()))
    print(f"delta_in={ds.delta_in(D)} delta_out={ds.delta_out(D)}")
    p = args.p if args.p is not None else (D.m / (n * (n - 1)) if n > 1 else 0.0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        star = ds.delta_star(n, p) if n > 1 else 0
    print(f"p={p:.12g} delta_star={star}")
    if p > 0:
        rep = ds.light_report(D, args.epsilon, p)
        print(
            f"epsilon={args.epsilon:.12g} in_light={len(rep.in_light)} out_light={len(rep.out_light)} "
            f"adjacent_in_pairs={rep.adjacent_in_pairs} shared_in_neighbor_pairs={rep.shared_in_neighbor_pairs} "
            f"adjacent_out_pairs={rep.adjacent_out_pairs} shared_out_neighbor_pairs={rep.shared_out_neighbor_pairs}"
        )
    return EXIT_OK


def _cmd_lambda(args) -> int:
    D = read_digraph(args.file)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = compute_lambda(D)
    if res.violating_ell is None:
        print(f"lambda={res.value}" + (" degenerate" if res.degenerate else ""))
    else:
        print(f"lambda={res.value} violating_ell={res.violating_ell} lhs={res.lhs_at_violation}")
    return EXIT_OK


def _cmd_tau(args) -> int:
    D = read_digraph(args.file)
    cert = tau_exact(D, limit=args.limit)
    if cert.unbounded:
        print("tau=unbounded")
        return EXIT_OK
    print(f"tau={cert.tau}")
    print(f"subpartition={cert.tight_subpartition}")
    return EXIT_OK


def _cmd_pack(args) -> int:
    if args.k < 0:
        raise argparse.ArgumentTypeError("k must be >= 0")
    D = read_digraph(args.file)
    out = pack(D, args.k, Budget(restarts=args.budget, exhaustive_limit=args.exhaustive_limit, seed=args.seed))
    print(f"status={out.status} k={args.k}" + (f" reason={out.reason}" if out.reason else ""))
    if out.status == PACKED:
        sys.stdout.write(format_packing(out.packing))
        return EXIT_OK
    if out.status == INFEASIBLE:
        fr = forced_roots(D, args.k)
        print(f"forced_roots={fr.forced} k={args.k}")
        return EXIT_FALSE
    return EXIT_INTERNAL


def _cmd_invert_f(args) -> int:
    alpha = ds.invert_F(args.target)
    print(f"alpha={alpha:.12g}")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    config = load_config(args.config)
    result = sweep(config)
    for row in result.summary:
        print(
            f"n={row.n} trials={row.trials} lambda_zero={_f(row.fraction_lambda_zero)} "
            f"window_hit={_f(row.fraction_lambda_window_hit)} tau_eq_lambda={_f(row.fraction_tau_eq_lambda)}"
        )
    return EXIT_OK


def _f(x) -> str:
    return "" if x is None else f"{x:.4f}"


_COMMANDS = {
    "gen": _cmd_gen,
    "stats": _cmd_stats,
    "lambda": _cmd_lambda,
    "tau": _cmd_tau,
    "pack": _cmd_pack,
    "invert-f": _cmd_invert_f,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (argparse.ArgumentTypeError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"arbpack {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceededError as exc:
        print(f"arbpack {args.command}: limit: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ArbpackError, ValueError) as exc:
        print(f"arbpack {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # never dump a traceback on the user
        logging.getLogger(__name__).debug("internal error", exc_info=True)
        print(f"arbpack {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
