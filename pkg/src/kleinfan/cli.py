"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration budget exhausted (or verification left indeterminate by it).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import gitfan
from .gitfan import (DEFAULT_BUDGET, N1_CAVEAT, BudgetExceeded, build_arrangement, chamber_C_K, cone_F,
                     git_cone_of, is_q_factorial, minimal_face_of_F, sigma_K, sigma_prime_K, top_cells,
                     verify_main_theorem, walk_chambers)
from .polycone import ConeError
from .render import RenderError, render_slice
from .rootsys import DynkinType, RootSystemError, build_root_system

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_K(text: str, rank: int) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        nodes = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse node list {text!r}; expected e.g. 1,2") from None
    if len(set(nodes)) != len(nodes):
        raise UsageError(f"duplicate nodes in {text!r}")
    bad = [k for k in nodes if not 1 <= k <= rank]
    if bad:
        raise UsageError(f"nodes {bad} outside 1..{rank}")
    return tuple(sorted(nodes))


def parse_point(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse point {text!r}; expected comma-separated rationals like 1/2,3,-1") from None


def _header(rs, n: int | None = None) -> dict:
    out = {"type": str(rs.dynkin), "diagram": rs.diagram()}
    if n is not None:
        out["n"] = n
    return out


def cmd_roots(args, rs):
    out = _header(rs)
    out.update({
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "affine_cartan": [list(r) for r in rs.affine_cartan],
        "positive_roots": [list(a) for a in rs.positive_roots],
        "num_positive_roots": len(rs.positive_roots),
        "highest_root": list(rs.highest_root),
        "delta": list(rs.delta),
        "coxeter": rs.coxeter,
    })
    return out, EXIT_OK


def cmd_arrangement(args, rs):
    a = build_arrangement(rs, args.n)
    out = _header(rs, args.n)
    out.update(a.to_json())
    return out, EXIT_OK


def _cone_for(which: str, rs, n: int, K):
    if which == "sigma":
        return sigma_K(rs, n, K)
    if which == "sigma_prime":
        return sigma_prime_K(rs, n, K)
    if which == "chamber":
        return chamber_C_K(rs, n, K)
    return gitfan.GitCone(cone_F(rs, n), build_arrangement(rs, n).signs(
        gitfan.relint_point(cone_F(rs, n))), "F")


def cmd_cone(args, rs):
    K = parse_K(args.K, rs.rank)
    gc = _cone_for(args.which, rs, args.n, K)
    out = _header(rs, args.n)
    out.update({"K": list(K), "which": args.which})
    out.update(gc.to_json())
    return out, EXIT_OK


def cmd_locate(args, rs):
    theta = parse_point(args.point)
    if len(theta) != rs.rank + 1:
        raise UsageError(f"point needs {rs.rank + 1} coordinates (theta_0..theta_{rs.rank}), got {len(theta)}")
    a = build_arrangement(rs, args.n)
    try:
        gc = git_cone_of(a, theta)
    except ConeError as exc:
        raise UsageError(str(exc)) from None
    out = _header(rs, args.n)
    out["point"] = [str(x) for x in theta]
    out.update(gc.to_json())
    out["picard_rank"] = gc.dim
    out["minimal_face_dim"] = minimal_face_of_F(rs, args.n, gc.cone).dim
    out["q_factorial"] = is_q_factorial(a, theta)
    if args.n == 1:
        out["caveat"] = N1_CAVEAT
    return out, EXIT_OK


def cmd_verify(args, rs):
    K = parse_K(args.K, rs.rank)
    if args.n < 2:
        raise UsageError("verify requires --n >= 2")
    rep = verify_main_theorem(rs, args.n, K, budget=args.budget, uniqueness=not args.targeted)
    out = _header(rs, args.n)
    out.update(rep.to_json())
    if rep.overall is True:
        code = EXIT_OK
    elif rep.overall is False:
        code = EXIT_FAIL
    else:
        code = EXIT_BUDGET
    return out, code


def cmd_chambers(args, rs):
    a = build_arrangement(rs, args.n)
    cells = top_cells(a, budget=args.budget)
    walked = walk_chambers(a, budget=args.budget)
    adj = gitfan.adjacency(cells)
    out = _header(rs, args.n)
    out.update({
        "count": len(cells),
        "count_by_wall_walk": len(walked),
        "counts_agree": [c.cone.rays for c in cells] == [c.cone.rays for c in walked],
        "chambers": [c.to_json() for c in cells],
        "adjacency": [list(p) for p in adj],
    })
    return out, EXIT_OK


def cmd_figure(args, rs):
    if rs.rank != 2:
        raise UsageError(f"figure needs a rank-2 type, got {rs.dynkin}")
    a = build_arrangement(rs, args.n)
    highlight = [sigma_K(rs, args.n, K) for k in range(3) for K in combinations(rs.nodes, k)]
    chambers = top_cells(a, budget=args.budget)
    return render_slice(a, highlight, chambers), EXIT_OK


def _text(out) -> str:
    if isinstance(out, str):
        return out
    lines = []
    for key, value in out.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend("  " + json.dumps(v) for v in value)
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "roots": cmd_roots,
    "arrangement": cmd_arrangement,
    "cone": cmd_cone,
    "locate": cmd_locate,
    "verify": cmd_verify,
    "chambers": cmd_chambers,
    "figure": cmd_figure,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kleinfan",
                                     description="GIT wall-and-chamber combinatorics for Hilbert schemes "
                                                 "of points on crepant partial resolutions of Kleinian singularities")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n=True, K=False):
        p.add_argument("--type", required=True, help="Dynkin type, e.g. A2, D4, E8")
        if n:
            p.add_argument("--n", type=int, default=2, help="number of points (default 2)")
        if K:
            p.add_argument("--K", default="", help="comma-separated node subset of 1..r (default empty)")
        p.add_argument("--format", choices=("json", "text", "svg"), default=None)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help=f"candidate sign-vector budget for enumerations (default {DEFAULT_BUDGET})")
        return p

    common(sub.add_parser("roots", help="root data"), n=False)
    common(sub.add_parser("arrangement", help="the wall arrangement"))
    p = common(sub.add_parser("cone", help="sigma_K, sigma'_K, C_K closure or F"), K=True)
    p.add_argument("--which", choices=("sigma", "sigma_prime", "chamber", "F"), default="sigma")
    p = common(sub.add_parser("locate", help="GIT cone of a point of F"))
    p.add_argument("--point", required=True, help="theta_0..theta_r as comma-separated rationals p/q")
    p = common(sub.add_parser("verify", help="check the characterisation of sigma_K"), K=True)
    p.add_argument("--targeted", action="store_true", help="skip the uniqueness sweeps (f) and (g)")
    common(sub.add_parser("chambers", help="enumerate chambers in F with adjacency"))
    common(sub.add_parser("figure", help="SVG of the slice of F (rank 2 only)"))
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or ("svg" if args.command == "figure" else "json")
    if (fmt == "svg") != (args.command == "figure"):
        parser.error("svg format is only available for the figure subcommand")
    try:
        rs = build_root_system(DynkinType.parse(args.type))
        if getattr(args, "n", 1) < 1:
            raise UsageError("--n must be >= 1")
        out, code = COMMANDS[args.command](args, rs)
    except (UsageError, RootSystemError, RenderError) as exc:
        parser.error(str(exc))
    except BudgetExceeded as exc:
        print(f"kleinfan: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    text = _text(out) if fmt in ("text", "svg") else json.dumps(out, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
