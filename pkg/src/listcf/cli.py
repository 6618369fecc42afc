"""Command line front end: ``listcf gen | color | plot | verify``.

Exit codes: 0 success, 2 input error, 3 algorithm infeasible (the report is
still written), 4 guard refusal.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from . import jsonio, svg
from .colorers import (
    delaunay_colorer,
    exact_colorer,
    hereditary_chromatic_number,
    interval_colorer,
    region_hereditary_colorer,
)
from .errors import AlgorithmInfeasible, GuardExceeded, InputError, ListExhausted
from .fewedges import required_sizes, um_color_few_edges
from .geometry import (
    as_disc_family,
    build_disc_hypergraph,
    build_halfplane_hypergraph,
    build_region_hypergraph,
    in_convex_position,
    random_disc_family,
    random_point_set,
)
from .hypergraph import ColorListFamily, Hypergraph, IntervalHypergraph, VERIFIERS, verify_from_lists
from .intervals import cf_color_intervals_median, log2_floor, ruler_coloring
from .oracle import min_colors
from .planar import (
    PATHS_GUARD,
    PlanarGraph,
    cf_color_paths_from_lists,
    grid_graph,
    path_list_size,
    paths_hypergraph,
    random_planar_graph,
    star_graph,
    star_lower_bound_lists,
)
from .potential import um_choice_bound, um_color_from_lists
from .refinement import choice_from_chromatic, required_list_size

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_GUARD = 0, 2, 3, 4
OVERRIDE_GUARD = 18
EXACT_LIMIT = 12


def _graph_json(G: PlanarGraph, name: str) -> dict:
    out = {"kind": "graph", "name": name, "n": G.n, "adj": [list(a) for a in G.adj]}
    if G.positions is not None:
        out["pos"] = [list(p) for p in G.positions]
    return out


def cmd_gen(args) -> dict:
    kind = args.kind
    if kind == "intervals":
        if args.n < 1:
            raise InputError("intervals need n >= 1")
        return {"kind": "intervals", "n": args.n}
    if kind in ("points-discs", "points-halfplanes"):
        pts = random_point_set(args.n, args.seed, span=args.span, cocircular_free=kind == "points-discs")
        return {"kind": kind, "points": [list(p) for p in pts.points]}
    if kind == "discs":
        fam = random_disc_family(args.n, args.seed, span=args.span)
        return {"kind": "discs", "discs": [list(d) for d in fam.discs]}
    if kind == "grid":
        return _graph_json(grid_graph(args.rows, args.cols), f"grid{args.rows}x{args.cols}")
    if kind == "star":
        return _graph_json(star_graph(args.n), f"star{args.n}")
    if kind == "planar":
        return _graph_json(random_planar_graph(args.n, args.seed), f"planar{args.n}-s{args.seed}")
    raise InputError(f"unknown kind {kind!r}")


def build_hypergraph(inst: jsonio.Instance, guard: int = PATHS_GUARD) -> Hypergraph:
    d = inst.data
    if inst.kind == "intervals":
        return IntervalHypergraph(range(d["n"]))
    if inst.kind == "hypergraph":
        return jsonio.hypergraph_from_json(d)
    if inst.kind == "points-discs":
        return build_disc_hypergraph(d["points"])
    if inst.kind == "points-halfplanes":
        return build_halfplane_hypergraph(d["points"])
    if inst.kind == "discs":
        return build_region_hypergraph(d["discs"])
    return paths_hypergraph(load_graph(inst), guard)


def load_graph(inst: jsonio.Instance) -> PlanarGraph:
    if inst.kind != "graph":
        raise InputError(f"expected a graph instance, got {inst.kind!r}")
    return PlanarGraph(inst.data["n"], inst.data["adj"], positions=inst.data.get("pos"))


def pick_colorer(inst: jsonio.Instance, H: Hypergraph, k: int | None):
    if inst.kind == "intervals":
        return interval_colorer()
    if k is not None:
        return exact_colorer(k)
    if inst.kind == "points-discs":
        return delaunay_colorer(4)
    if inst.kind == "points-halfplanes":
        return delaunay_colorer(3 if in_convex_position(inst.data["points"]) else 4, name="halfplane")
    if inst.kind == "discs":
        return region_hereditary_colorer(as_disc_family(inst.data["discs"]).discs)
    return exact_colorer(hereditary_chromatic_number(H, EXACT_LIMIT))


def make_lists(policy: str, n: int, theorem_size, seed, inst, H) -> ColorListFamily:
    name, _, arg = policy.partition(":")
    if name in ("theorem", "auto"):
        sizes = theorem_size()
        if isinstance(sizes, int):
            sizes = [sizes] * n
        return ColorListFamily([range(1, s + 1) for s in sizes])
    if name == "uniform":
        return ColorListFamily.uniform(n, range(1, int(arg) + 1))
    if name == "random":
        ell = int(arg)
        if seed is None:
            raise InputError("random lists need --seed")
        rng = random.Random(seed)
        return ColorListFamily([rng.sample(range(1, 2 * ell + 1), ell) for _ in range(n)])
    if name == "star":
        return star_lower_bound_lists(n, int(arg))
    if name == "file":
        return jsonio.lists_from_json(jsonio.read_json(arg))
    raise InputError(f"unknown list policy {policy!r}")


def verdicts(H: Hypergraph | None, colors, family) -> dict:
    out = {"from_lists": verify_from_lists(colors, family) if family is not None else None}
    for mode, check in VERIFIERS.items():
        if H is None:
            out[mode] = None
            continue
        v = check(H, colors)
        out[mode] = v.ok
        if not v.ok:
            out[mode + "_witness"] = list(v.witness)
    return out


def cmd_color(args) -> int:
    inst = jsonio.load_instance(args.instance)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    guard = OVERRIDE_GUARD if args.guard_override else PATHS_GUARD
    algo = args.algorithm
    n = inst.n
    report = {
        "instance": {"file": Path(args.instance).name, "kind": inst.kind, "name": inst.name, "n": n},
        "algorithm": algo,
        "seed": args.seed,
        "list_policy": args.lists,
    }
    started = time.perf_counter()
    H = None
    family = None
    colors = None
    trace = None
    status, error, code = "ok", None, EXIT_OK
    extra: dict = {}
    try:
        if algo == "potential":
            H = build_hypergraph(inst, guard)
            colorer = pick_colorer(inst, H, args.k)
            report["k"] = colorer.k
            report["colorer"] = colorer.name
            family = make_lists(args.lists, n, lambda: um_choice_bound(max(n, 1), max(colorer.k, 2)),
                                args.seed, inst, H)
            try:
                res = um_color_from_lists(H, family, colorer)
                colors, trace = res.coloring, res.trace
                extra["list_condition"] = res.condition_held
            except ListExhausted as exc:
                trace = exc.trace
                raise
        elif algo == "median":
            if inst.kind != "intervals":
                raise InputError("median coloring applies to interval instances only")
            H = build_hypergraph(inst)
            family = make_lists(args.lists, n, lambda: log2_floor(n) + 1, args.seed, inst, H)
            colors = cf_color_intervals_median(n, family)
        elif algo == "few-edges":
            H = build_hypergraph(inst, guard)
            family = make_lists(args.lists, n, lambda: required_sizes(H), args.seed, inst, H)
            colors = um_color_few_edges(H, family).coloring
        elif algo == "separator":
            G = load_graph(inst)
            family = make_lists(args.lists, n, lambda: path_list_size(n), args.seed, inst, None)
            res = cf_color_paths_from_lists(G, family, verify=False)
            colors = res.coloring
            extra["separator_levels"] = [
                {"depth": lv.depth, "S": list(lv.S), "R": len(lv.R), "B": len(lv.B)} for lv in res.levels]
            if n <= guard:
                H = paths_hypergraph(G, guard)
        elif algo == "refine":
            if args.seed is None:
                raise InputError("refine needs --seed")
            H = build_hypergraph(inst, guard)
            mode = args.mode
            if inst.kind == "intervals":
                base = ruler_coloring(n)
            elif n <= EXACT_LIMIT:
                base = min_colors(H, mode)[1]
            else:
                raise GuardExceeded(f"base coloring search limited to n <= {EXACT_LIMIT}")
            k = len(set(base))
            report["k"] = k
            family = make_lists(args.lists, n, lambda: required_list_size(n, k), args.seed, inst, H)
            colors, witness = choice_from_chromatic(H, base, family, mode, args.seed)
            extra["attempts"] = witness.attempts
            extra["base_coloring"] = list(base)
        else:
            raise InputError(f"unknown algorithm {algo!r}")
    except AlgorithmInfeasible as exc:
        status, error, code = "infeasible", f"{type(exc).__name__}: {exc}", EXIT_INFEASIBLE
    report.update(extra)
    report["status"] = status
    report["error"] = error
    if family is not None:
        jsonio.write_json(out_dir / "lists.json", jsonio.lists_to_json(family))
    if trace is not None:
        jsonio.write_json(out_dir / "trace.json", trace.to_json())
        report["trace"] = "trace.json"
    else:
        report["trace"] = None
    if colors is not None:
        jsonio.write_json(out_dir / "coloring.json", jsonio.coloring_to_json(colors))
        report["coloring"] = "coloring.json"
        report["colors_used"] = len(set(colors))
        report["verdicts"] = verdicts(H, colors, family)
    else:
        report["coloring"] = None
        report["colors_used"] = None
        report["verdicts"] = None
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - started, 6)
    jsonio.write_json(out_dir / "report.json", report)
    print(f"{status}: {algo} on {inst.kind} (n={n}) -> {out_dir / 'report.json'}")
    return code


def cmd_plot(args) -> int:
    inst = jsonio.load_instance(args.instance)
    colors = jsonio.coloring_from_json(jsonio.read_json(args.coloring), inst.n)
    text = svg.render(inst, colors)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = jsonio.load_instance(args.instance)
    guard = OVERRIDE_GUARD if args.guard_override else PATHS_GUARD
    H = build_hypergraph(inst, guard)
    colors = jsonio.coloring_from_json(jsonio.read_json(args.coloring), inst.n)
    family = jsonio.lists_from_json(jsonio.read_json(args.lists)) if args.lists else None
    sys.stdout.write(jsonio.dumps(verdicts(H, colors, family)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="listcf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gen.add_argument("kind", choices=["intervals", "points-discs", "points-halfplanes", "discs",
                                      "grid", "star", "planar"])
    gen.add_argument("--n", type=int, default=8)
    gen.add_argument("--rows", type=int, default=3)
    gen.add_argument("--cols", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--span", type=int, default=30, help="coordinate range for random geometry")
    gen.add_argument("--out", help="output file (default: stdout)")

    color = sub.add_parser("color", help="run a coloring algorithm and write a report")
    color.add_argument("instance")
    color.add_argument("--algorithm", "-a", required=True,
                       choices=["potential", "median", "few-edges", "separator", "refine"])
    color.add_argument("--lists", default="theorem",
                       help="theorem | uniform:L | random:L | star:S | file:PATH")
    color.add_argument("--seed", type=int, default=None)
    color.add_argument("--k", type=int, default=None, help="force an exact k-colorer")
    color.add_argument("--mode", choices=["cf", "proper"], default="cf", help="notion for refine")
    color.add_argument("--guard-override", action="store_true",
                       help=f"allow path enumeration up to n={OVERRIDE_GUARD}")
    color.add_argument("--timing", action="store_true", help="record wall time in the report")
    color.add_argument("--out", default="out")

    plot = sub.add_parser("plot", help="draw a colored instance as SVG")
    plot.add_argument("instance")
    plot.add_argument("coloring")
    plot.add_argument("--out")

    verify = sub.add_parser("verify", help="recompute verdicts for a coloring")
    verify.add_argument("instance")
    verify.add_argument("coloring")
    verify.add_argument("--lists")
    verify.add_argument("--guard-override", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            text = jsonio.dumps(cmd_gen(args))
            if args.out:
                Path(args.out).write_text(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.command == "color":
            return cmd_color(args)
        if args.command == "plot":
            return cmd_plot(args)
        return cmd_verify(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"guard refusal: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (KeyError, TypeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
