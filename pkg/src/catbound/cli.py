"""Command-line front end.

Exit codes: 0 success, 1 usage or input errors, 2 a verification or
validation failure (the command ran but the mathematics disagreed).

File formats: trees are the edge-list text format of ``parse_tree``;
segment families are JSON ``{"n": N, "segments": [[a, b], ...]}``;
alternating paths are JSON ``{"mode": M, "segments": K,
"endpoints": [...]}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .contraction import (
    build_spider,
    contraction_guarantee,
    extremal_size_contraction,
    extremal_spider,
    max_caterpillar_by_contraction,
)
from .duality import (
    AlternatingPath,
    SegmentFamily,
    among_path,
    compatible_path,
    segments_to_tree,
    tree_to_segments,
    validate_path,
)
from .induced import (
    beautiful_tree,
    branch_star_bound,
    extremal_branch_star,
    extremal_size_induced,
    format_table,
    induced_guarantee,
    max_branch_size,
    max_caterpillar,
)
from .oracle import verify_all
from .render import render_segments, render_tree
from .trees import Tree, diameter, format_tree, is_caterpillar, is_spider, leaves, parse_tree


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; keep 2 for math failures."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="catbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[], description="Evaluate one bound.")
    p.add_argument(
        "quantity", choices=["p", "q", "f", "g", "e-contract", "e-induced"]
    )
    p.add_argument("--m", type=int, help="edge budget (p, q)")
    p.add_argument("--k", type=int, help="caterpillar size (f, g, e-*)")

    p = sub.add_parser("table", description="Tabulate one bound over a range.")
    p.add_argument(
        "quantity", choices=["p", "q", "f", "g", "e-contract", "e-induced"]
    )
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("build", description="Emit an extremal construction.")
    p.add_argument("shape", choices=["rk", "rdl", "bk", "tk"])
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int, help="diameter (rdl)")
    p.add_argument("--l", type=int, help="leaf count (rdl)")
    p.add_argument("--out", help="write tree here instead of stdout")

    p = sub.add_parser("analyze", description="Measure a tree file.")
    p.add_argument("--tree", required=True)
    p.add_argument("--witness", action="store_true", help="print the caterpillar")

    p = sub.add_parser("dual", description="Swap between trees and families.")
    p.add_argument("direction", choices=["to-segments", "to-tree"])
    p.add_argument("--tree", help="tree file (to-segments)")
    p.add_argument("--root", type=int, default=0, help="outer cell (to-segments)")
    p.add_argument("--segments", help="family file (to-tree)")
    p.add_argument("--out")

    p = sub.add_parser("path", description="Build an alternating path.")
    p.add_argument("mode", choices=["compatible", "among"])
    p.add_argument("--segments", required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify", description="Run the brute-force cross-checks.")
    p.add_argument("--max-edges", type=int, default=10)
    p.add_argument("--max-k", type=int, default=21)
    p.add_argument("--sweep", type=int, default=200_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--corrupt-f",
        type=int,
        metavar="K",
        help="deliberately misstate one branch size (the report must FAIL)",
    )
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", description="Draw a family or tree as SVG.")
    p.add_argument("--segments")
    p.add_argument("--path", help="overlay this path file (with --segments)")
    p.add_argument("--tree")
    p.add_argument("--root", type=int, help="layout root (with --tree)")
    p.add_argument("--out", required=True)
    return parser


# ----------------------------------------------------------------------
# I/O helpers
# ----------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_family(path: str) -> SegmentFamily:
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc.msg})") from exc
    if not isinstance(data, dict) or "n" not in data or "segments" not in data:
        raise ValueError(f'{path}: expected {{"n": ..., "segments": [...]}}')
    try:
        pairs = tuple((int(a), int(b)) for a, b in data["segments"])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{path}: segments must be [a, b] pairs") from exc
    return SegmentFamily(int(data["n"]), pairs)


def _load_path(path: str) -> tuple[AlternatingPath, str]:
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc.msg})") from exc
    if not isinstance(data, dict) or "endpoints" not in data:
        raise ValueError(f'{path}: expected {{"mode": ..., "endpoints": [...]}}')
    endpoints = tuple(int(x) for x in data["endpoints"])
    if len(endpoints) % 2:
        raise ValueError(f"{path}: odd endpoint count")
    mode = str(data.get("mode", "simple"))
    return AlternatingPath(endpoints, len(endpoints) // 2), mode


def _family_json(s: SegmentFamily) -> str:
    return json.dumps({"n": s.n, "segments": [list(p) for p in s.pairs]}) + "\n"


def _path_json(mode: str, p: AlternatingPath) -> str:
    return (
        json.dumps(
            {"mode": mode, "segments": p.k, "endpoints": list(p.endpoints)}
        )
        + "\n"
    )


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

_EVAL = {
    "p": ("--m", contraction_guarantee),
    "q": ("--m", induced_guarantee),
    "f": ("--k", max_branch_size),
    "g": ("--k", branch_star_bound),
    "e-contract": ("--k", extremal_size_contraction),
    "e-induced": ("--k", extremal_size_induced),
}


def _pick_argument(args) -> int:
    flag, _fn = _EVAL[args.quantity]
    value = args.m if flag == "--m" else args.k
    other = args.k if flag == "--m" else args.m
    if value is None:
        raise ValueError(f"eval {args.quantity} needs {flag}")
    if other is not None:
        raise ValueError(f"eval {args.quantity} takes only {flag}")
    return value


def _cmd_eval(args) -> int:
    value = _pick_argument(args)
    print(_EVAL[args.quantity][1](value))
    return 0


def _cmd_table(args) -> int:
    flag, fn = _EVAL[args.quantity]
    if args.start > args.stop:
        raise ValueError("--from must not exceed --to")
    rows = [(i, fn(i)) for i in range(args.start, args.stop + 1)]
    sys.stdout.write(format_table(flag.lstrip("-"), args.quantity, rows, args.csv))
    return 0


def _cmd_build(args) -> int:
    def need_k() -> int:
        if args.k is None:
            raise ValueError(f"build {args.shape} needs --k")
        return args.k

    if args.shape == "rk":
        tree = extremal_spider(need_k())
    elif args.shape == "rdl":
        if args.d is None or args.l is None:
            raise ValueError("build rdl needs --d and --l")
        tree = build_spider(args.d, args.l)
    elif args.shape == "bk":
        tree = beautiful_tree(need_k())[0].tree
    else:
        tree = extremal_branch_star(need_k())
    _emit(format_tree(tree), args.out)
    return 0


def _cmd_analyze(args) -> int:
    tree = parse_tree(_read(args.tree))
    cat, spine = is_caterpillar(tree)
    witness = max_caterpillar(tree)
    rows = [
        ("vertices", tree.vertex_count),
        ("edges", tree.m),
        ("leaves", len(leaves(tree))),
        ("diameter", diameter(tree)),
        ("caterpillar", "yes" if cat else "no"),
        ("spider", "yes" if is_spider(tree) else "no"),
        ("score by contraction", max_caterpillar_by_contraction(tree)),
        ("largest induced caterpillar", witness.size),
    ]
    for label, value in rows:
        print(f"{label:<28} {value}")
    if args.witness:
        print(f"{'witness spine':<28} {' '.join(map(str, witness.spine))}")
        print(
            f"{'witness vertices':<28} "
            f"{' '.join(map(str, sorted(witness.vertex_set)))}"
        )
    return 0


def _cmd_dual(args) -> int:
    if args.direction == "to-segments":
        if args.tree is None:
            raise ValueError("dual to-segments needs --tree")
        tree = parse_tree(_read(args.tree))
        _emit(_family_json(tree_to_segments(tree, args.root)), args.out)
    else:
        if args.segments is None:
            raise ValueError("dual to-tree needs --segments")
        tree, _chords = segments_to_tree(_load_family(args.segments))
        _emit(format_tree(tree), args.out)
    return 0


def _cmd_path(args) -> int:
    family = _load_family(args.segments)
    tree, _ = segments_to_tree(family)
    if args.mode == "compatible":
        chain = compatible_path(family, max_caterpillar(tree))
    else:
        chain, _plan = among_path(family)
    report = validate_path(
        family, chain, "compatible" if args.mode == "compatible" else "simple"
    )
    if not report.ok:
        for issue in report.issues:
            print(f"invalid: {issue}", file=sys.stderr)
        return 2
    _emit(_path_json(args.mode, chain), args.out)
    return 0


def _cmd_verify(args) -> int:
    override = None
    if args.corrupt_f is not None:
        override = {args.corrupt_f: max_branch_size(args.corrupt_f) + 1}
    report = verify_all(
        max_edges=args.max_edges,
        max_score=args.max_k,
        sweep_limit=args.sweep,
        workers=args.workers,
        branch_size_override=override,
    )
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.ok else 2


def _cmd_render(args) -> int:
    if (args.segments is None) == (args.tree is None):
        raise ValueError("render needs exactly one of --segments or --tree")
    if args.segments is not None:
        family = _load_family(args.segments)
        chain = None
        if args.path is not None:
            chain, mode = _load_path(args.path)
            report = validate_path(family, chain, mode)
            if not report.ok:
                for issue in report.issues:
                    print(f"invalid: {issue}", file=sys.stderr)
                return 2
        svg = render_segments(family, chain)
    else:
        if args.path is not None:
            raise ValueError("--path goes with --segments")
        tree = parse_tree(_read(args.tree))
        svg = render_tree(tree, args.root)
    _emit(svg, args.out)
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "table": _cmd_table,
    "build": _cmd_build,
    "analyze": _cmd_analyze,
    "dual": _cmd_dual,
    "path": _cmd_path,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"catbound: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
