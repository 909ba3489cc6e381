"""Command-line front end: generate, label, verify, solve, audit.

Exit codes: 0 success / valid, 1 verification failure, 2 usage error,
3 solver infeasible within its universe, 4 solver timeout.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .constructors import (
    CLAIMED_FORMULAS,
    claimed_value,
    construct,
)
from .graphs import (
    FAMILIES,
    FAMILY_MIN_N,
    FamilySpec,
    InvalidParameterError,
    SizeLimitError,
    generate,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)
from .labeling import (
    labeling_from_json,
    labeling_to_json,
    verify,
)
from .solver import (
    STATUS_INFEASIBLE,
    STATUS_TIMEOUT,
    AuditRow,
    SolveOptions,
    audit_range,
    min_ground_set,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_TIMEOUT = 4


def _parse_mode(text: str) -> tuple[str, int | None]:
    low = text.lower()
    if low == "wiasl":
        return "WIASL", None
    if low == "wiasi":
        return "WIASI", None
    if low.startswith("uniform:"):
        try:
            k = int(low.split(":", 1)[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad uniform mode {text!r}")
        if k < 1:
            raise argparse.ArgumentTypeError("uniform k must be >= 1")
        return "UNIFORM", k
    raise argparse.ArgumentTypeError(
        f"unknown mode {text!r}; use wiasl, wiasi or uniform:k"
    )


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected a..b")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wiasl",
        description="Weak integer additive set-labeling toolkit: family "
        "generators, labeling constructions, validity verification and an "
        "exact bounded-universe solver.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed the stdlib RNG (reserved for randomized corpora; the "
        "built-in subcommands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("families", help="list the supported graph families")

    p_gen = sub.add_parser("generate", help="emit a family graph")
    p_gen.add_argument("family", choices=FAMILIES)
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("--out", choices=("json", "dot", "text"), default="json")

    p_lab = sub.add_parser("label", help="emit the construction's labeling")
    p_lab.add_argument("family", choices=FAMILIES)
    p_lab.add_argument("n", type=int)
    p_lab.add_argument("--out", choices=("json", "dot", "text"), default="json")

    p_ver = sub.add_parser("verify", help="verify a labeling (or graph) JSON file")
    p_ver.add_argument("file")
    p_ver.add_argument(
        "--mode",
        type=_parse_mode,
        default=None,
        help="labeling class to check (wiasl|wiasi|uniform:k); defaults to "
        "the file's class field",
    )

    p_sol = sub.add_parser("solve", help="minimum ground-set cardinality")
    p_sol.add_argument(
        "target",
        nargs="+",
        help="either 'FAMILY N' or a labeling/graph JSON file",
    )
    p_sol.add_argument("--mode", type=_parse_mode, default=("WIASL", None))
    p_sol.add_argument("--universe", type=int, default=None, metavar="U")
    p_sol.add_argument("--allow-zero", action="store_true")
    p_sol.add_argument("--all-subsets", action="store_true")
    p_sol.add_argument("--allow-uniform", action="store_true",
                       help="admit all-singleton (1-uniform) labelings")
    p_sol.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p_sol.add_argument("--max-vertices", type=int, default=12)
    p_sol.add_argument("--out", choices=("json", "text"), default="text")

    p_aud = sub.add_parser("audit", help="claimed vs construction vs oracle table")
    p_aud.add_argument("family", choices=FAMILIES)
    p_aud.add_argument("--n-range", type=_parse_range, required=True, metavar="A..B")
    p_aud.add_argument("--mode", type=_parse_mode, default=("WIASL", None))
    p_aud.add_argument("--universe", type=int, default=None, metavar="U")
    p_aud.add_argument("--allow-zero", action="store_true")
    p_aud.add_argument("--all-subsets", action="store_true")
    p_aud.add_argument("--allow-uniform", action="store_true")
    p_aud.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p_aud.add_argument("--max-vertices", type=int, default=12)
    p_aud.add_argument("--out", choices=("text", "csv"), default="text")

    return parser


def _spec_or_error(parser: argparse.ArgumentParser, family: str, n: int) -> FamilySpec:
    try:
        return FamilySpec(family, n)
    except InvalidParameterError as exc:
        parser.error(str(exc))
        raise AssertionError  # pragma: no cover - parser.error exits


def _options_from_args(args: argparse.Namespace) -> SolveOptions:
    mode, k = args.mode
    return SolveOptions(
        mode=mode,
        uniform_k=k,
        universe="all-subsets" if args.all_subsets else "segment",
        universe_bound=args.universe,
        allow_zero=args.allow_zero,
        require_non_uniform=not args.allow_uniform,
        max_vertices=args.max_vertices,
        time_budget=args.time_budget,
    )


def cmd_families() -> int:
    print(f"{'family':<13} {'min n':<6} {'claimed minimum ground-set size'}")
    for fam in FAMILIES:
        print(
            f"{fam:<13} {FAMILY_MIN_N[fam]:<6} {CLAIMED_FORMULAS[fam].expression}"
        )
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _spec_or_error(parser, args.family, args.n)
    g = generate(spec)
    if args.out == "json":
        print(json.dumps(graph_to_json(g), indent=2))
    elif args.out == "dot":
        print(graph_to_dot(g), end="")
    else:
        print(f"{args.family} n={args.n}: {g.n} vertices, {g.m} edges")
        for u, v in g.sorted_edges():
            print(f"  {u} -- {v}")
    return EXIT_OK


def cmd_label(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _spec_or_error(parser, args.family, args.n)
    built = construct(spec)
    f = built.labeling
    if args.out == "json":
        print(json.dumps(labeling_to_json(f, "WIASL"), indent=2))
    elif args.out == "dot":
        text = {v: f"{v}: {f.label(v).to_list()}" for v in range(f.graph.n)}
        print(graph_to_dot(f.graph, text), end="")
    else:
        print(
            f"{args.family} n={args.n}: claimed={built.claimed} "
            f"ground_set_size={built.ground_size} "
            f"ground_set={f.ground_set.to_list()}"
        )
        if built.exception:
            print(f"exception: {built.exception}")
        for v in range(f.graph.n):
            print(f"  {v}: {f.label(v).to_list()}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    if "labels" in data:
        labeling, file_class = labeling_from_json(data)
        if args.mode is not None:
            mode, k = args.mode
        elif file_class.endswith("-uniform"):
            mode, k = "UNIFORM", int(file_class.split("-", 1)[0])
        else:
            mode, k = file_class, None
        report = verify(labeling, mode, k)
        print(report.summary())
        return EXIT_OK if report.valid else EXIT_INVALID
    g = graph_from_json(data)
    if g.has_isolated_vertices():
        print("invalid graph: isolated vertices present")
        return EXIT_INVALID
    print(f"valid graph: {g.n} vertices, {g.m} edges")
    return EXIT_OK


def _load_graph_target(
    target: list[str], parser: argparse.ArgumentParser
) -> tuple[object, int | None]:
    if len(target) == 2 and target[0] in FAMILIES:
        spec = _spec_or_error(parser, target[0], int(target[1]))
        return generate(spec), claimed_value(spec)
    if len(target) == 1:
        with open(target[0]) as fh:
            data = json.load(fh)
        if "labels" in data:
            labeling, _ = labeling_from_json(data)
            return labeling.graph, None
        return graph_from_json(data), None
    parser.error("solve target must be 'FAMILY N' or one JSON file")
    raise AssertionError  # pragma: no cover


def cmd_solve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    g, claimed = _load_graph_target(args.target, parser)
    opts = _options_from_args(args)
    if opts.universe_bound is None:
        if claimed is None:
            parser.error("--universe is required when solving a file target")
        opts = SolveOptions(
            **{**opts.__dict__, "universe_bound": 2 * claimed + 2}
        )
    try:
        res = min_ground_set(g, opts)  # type: ignore[arg-type]
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out == "json":
        payload = {
            "minimum": res.minimum,
            "status": res.status,
            "universe_bound": res.universe_bound,
            "mode": res.mode,
            "universe": res.universe,
            "allow_zero": res.allow_zero,
            "nodes_explored": res.nodes_explored,
        }
        if res.witness is not None:
            payload["witness"] = labeling_to_json(res.witness, "WIASL")
        print(json.dumps(payload, indent=2))
    else:
        print(
            f"status={res.status} minimum={res.minimum} "
            f"universe_bound={res.universe_bound} mode={res.mode} "
            f"universe={res.universe} allow_zero={res.allow_zero} "
            f"nodes={res.nodes_explored}"
        )
        if res.witness is not None:
            for v in range(res.witness.graph.n):
                print(f"  {v}: {res.witness.label(v).to_list()}")
    if res.status == STATUS_INFEASIBLE:
        return EXIT_INFEASIBLE
    if res.status == STATUS_TIMEOUT:
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_audit(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    lo, hi = args.n_range
    if lo < FAMILY_MIN_N[args.family]:
        parser.error(
            f"family {args.family!r} requires n >= {FAMILY_MIN_N[args.family]}"
        )
    opts = _options_from_args(args)
    if args.out == "csv":
        print(AuditRow.CSV_HEADER)
    status = EXIT_OK
    for row in audit_range(args.family, lo, hi, opts):
        print(row.as_csv() if args.out == "csv" else row.as_text(), flush=True)
        if row.status == STATUS_TIMEOUT:
            status = EXIT_TIMEOUT
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    if args.command == "families":
        return cmd_families()
    if args.command == "generate":
        return cmd_generate(args, parser)
    if args.command == "label":
        return cmd_label(args, parser)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "solve":
        return cmd_solve(args, parser)
    if args.command == "audit":
        return cmd_audit(args, parser)
    parser.error(f"unknown command {args.command!r}")  # pragma: no cover
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    raise SystemExit(main())
