"""Command-line interface.

Exit status: 0 when a verdict was computed, 1 when ``verify`` found a
counterexample, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from .analysis import is_id_coloring, symmetry_report
from .constructions import multi_central_coloring, sa_coloring, single_red_coloring
from .core import CycleColoring, DomainError, all_codes
from .harness import THEOREMS
from .paths import PathColoring, is_path_id, path_id_by_criterion, red_leaf_subpath
from .reconstruction import ReconstructionError, reconstruct

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _cmd_check(args) -> int:
    col = CycleColoring.parse(args.coloring)
    verdict = is_id_coloring(col)
    sym = symmetry_report(col)
    payload = {
        "coloring": str(col),
        "n": col.n,
        "isId": verdict.is_id,
        "witness": list(verdict.witness) if verdict.witness else None,
        "centralVertices": list(sym.central_vertices),
        "edgeAxes": list(sym.edge_axes),
        "vertexAxes": list(sym.vertex_axes),
        "symmetric": sym.is_symmetric,
    }
    lines = [f"{col} (n={col.n})"]
    if verdict.is_id:
        lines.append("ID-coloring: yes")
    else:
        x, y = verdict.witness
        lines.append(f"ID-coloring: no (vertices {x} and {y} share a code)")
    if col.n % 2:
        lines.append(f"central vertices: {list(sym.central_vertices) or 'none'}")
    else:
        lines.append(f"edge axes: {list(sym.edge_axes) or 'none'}")
        lines.append(f"vertex axes: {list(sym.vertex_axes) or 'none'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _cmd_codes(args) -> int:
    col = CycleColoring.parse(args.coloring)
    codes = all_codes(col)
    payload = {"coloring": str(col), "codes": [list(c) for c in codes]}
    text = "\n".join(f"{v:>3} {'R' if col[v] else 'W'} {list(c)}" for v, c in enumerate(codes))
    _emit(args, payload, text)
    return EXIT_OK


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise DomainError(f"--pair expects 'a,b', got {text!r}") from None
    return a, b


def _cmd_trace(args) -> int:
    col = CycleColoring.parse(args.coloring)
    if args.pair:
        a, b = _parse_pair(args.pair)
        if not (0 <= a < col.n and 0 <= b < col.n):
            raise DomainError(f"pair ({a},{b}) out of range for n={col.n}")
    else:
        witness = is_id_coloring(col).witness
        if witness is None:
            raise DomainError("coloring is an ID-coloring; no duplicate-code pair to trace")
        a, b = witness
    try:
        trace = reconstruct(col, a, b)
    except ReconstructionError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        print(exc.trace.to_text(), file=sys.stderr)
        return EXIT_VIOLATION
    _emit(args, trace.to_dict(), trace.to_text())
    return EXIT_OK


def _cmd_generate(args) -> int:
    if args.kind == "sa":
        col = sa_coloring(args.n, args.p)
    elif args.kind == "multicentral":
        col = multi_central_coloring(args.n, args.p)
    else:
        col = single_red_coloring(args.n)
    _emit(args, {"kind": args.kind, "n": col.n, "coloring": str(col)}, str(col))
    return EXIT_OK


def _cmd_verify(args) -> int:
    _, fn = THEOREMS[args.theorem]
    accepted = inspect.signature(fn).parameters
    kwargs = {}
    if args.workers != 1 and "workers" in accepted:
        kwargs["workers"] = args.workers
    if args.prune_orbits:
        if "prune_orbits" not in accepted:
            raise DomainError(f"{args.theorem} does not support --prune-orbits")
        kwargs["prune_orbits"] = True
    report = fn(args.n, **kwargs)
    lines = [
        f"{report.theorem} n={report.n}: checked={report.checked} "
        f"failures={len(report.failures)} ({report.elapsed_ms:.1f} ms)"
    ]
    lines += [f"  counterexample: {f}" for f in report.failures[:20]]
    _emit(args, report.to_dict(), "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_path(args) -> int:
    col = PathColoring.parse(args.coloring)
    if args.mode == "check":
        verdict = is_path_id(col)
        payload = {"coloring": str(col), "isId": verdict}
        text = f"{col}: ID-coloring: {'yes' if verdict else 'no'}"
    else:
        sub = red_leaf_subpath(col)
        verdict = path_id_by_criterion(col)
        payload = {"coloring": str(col), "restriction": str(sub), "isId": verdict}
        text = (
            f"{col}: restriction {sub} is {'not ' if verdict else ''}symmetric; "
            f"ID-coloring: {'yes' if verdict else 'no'}"
        )
    _emit(args, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(
        prog="cycleid",
        description="ID-colorings and symmetric colorings of cycles and paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="ID verdict and symmetry report")
    p.add_argument("coloring", help="R/W string, e.g. RWWRRWR")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("codes", parents=[common], help="code vector of every vertex")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_codes)

    p = sub.add_parser("trace", parents=[common], help="symmetry reconstruction trace")
    p.add_argument("coloring")
    p.add_argument("--pair", help="duplicate-code pair 'a,b' (default: smallest witness)")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("generate", parents=[common], help="named colorings")
    p.add_argument("kind", choices=["sa", "multicentral", "singlered"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=None, help="divisor (default: least factor)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem checks")
    p.add_argument("theorem", choices=sorted(THEOREMS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--prune-orbits", action="store_true",
                   help="scan one coloring per rotation/reflection orbit")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("path", parents=[common], help="path colorings")
    p.add_argument("mode", choices=["check", "criterion"])
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_path)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
