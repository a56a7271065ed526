"""Command-line surface: generate graphs, apply operations, run constructive
labelings, verify labelings, and search for them.

Exit codes: 0 success, 1 I/O error, 2 usage error, 3 hypothesis violation,
4 search found nothing, 5 budget exhausted. Every failure also emits one
structured JSON object on stderr, and machine-readable stdout (json / dot)
never interleaves with the human-readable table format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constructors import (
    ConstructionRecipe,
    HypothesisViolation,
    normalize_theorem,
    run_recipe,
)
from .graph import (
    Graph,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    is_connected,
    make_complete,
    make_cycle,
    make_path,
    make_star,
)
from .labeling import (
    AdmissionError,
    Labeling,
    edge_label,
    induced_tally,
    labeling_from_json,
    labeling_to_json,
    tally_report,
)
from .numtheory import LegendreContext, legendre_symbol
from .products import cartesian, corona, join, lexicographic, strong, tensor
from .search import (
    Budget,
    DiffWindow,
    SearchSpec,
    find_base_labelings,
    search_labeling,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_SEARCH_NONE = 4
EXIT_BUDGET = 5

ENV_BUDGET_NODES = "LEGCORDIAL_BUDGET_NODES"
ENV_BUDGET_SECONDS = "LEGCORDIAL_BUDGET_SECONDS"

_OPS = {
    "join": join,
    "corona": corona,
    "lex": lexicographic,
    "cart": cartesian,
    "tensor": tensor,
    "strong": strong,
}

_OP_CONVENTIONS = {
    "join": "g1 vertices first, then g2 at offset |V(g1)|",
    "corona": "copies of g2 blocked per host vertex, host vertices last",
    "lex": "(i, j) -> i*|V(g2)| + j",
    "cart": "(i, j) -> i*|V(g2)| + j",
    "tensor": "(i, j) -> i*|V(g2)| + j",
    "strong": "(i, j) -> i*|V(g2)| + j",
}


class _CliFailure(Exception):
    def __init__(self, code: int, kind: str, message: str):
        self.code = code
        self.kind = kind
        super().__init__(message)


def parse_family(spec: str) -> Graph:
    """Inline family specs: path:N cycle:N complete:N star:N edges:[N:]u-v,..."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"family spec needs 'kind:args', got {spec!r}")
    kind = kind.strip().lower()
    if kind in ("path", "cycle", "complete", "star"):
        n = int(rest)
        return {
            "path": make_path,
            "cycle": make_cycle,
            "complete": make_complete,
            "star": make_star,
        }[kind](n)
    if kind == "edges":
        head, sep2, tail = rest.partition(":")
        order = int(head) if sep2 else None
        body = tail if sep2 else rest
        edges = []
        for part in body.split(","):
            part = part.strip()
            if not part:
                continue
            u, _, v = part.partition("-")
            edges.append((int(u), int(v)))
        if order is None:
            order = max((max(e) for e in edges), default=0) + 1
        return Graph(order, edges)
    raise ValueError(f"unknown family kind {kind!r}")


def load_graph_arg(spec: str) -> Graph:
    """A graph argument is an inline family spec or a path to graph JSON."""
    prefix = spec.partition(":")[0].strip().lower()
    if prefix in ("path", "cycle", "complete", "star", "edges"):
        return parse_family(spec)
    try:
        with open(spec) as fh:
            return graph_from_json(json.load(fh))
    except OSError as exc:
        raise _CliFailure(EXIT_IO, "io-error", f"cannot read graph file {spec!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise _CliFailure(EXIT_IO, "io-error", f"bad JSON in {spec!r}: {exc}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        try:
            with open(out_path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise _CliFailure(EXIT_IO, "io-error", f"cannot write {out_path!r}: {exc}")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _graph_table(g: Graph, extra: dict | None = None) -> str:
    lines = [f"order: {g.order}", f"size:  {g.size}"]
    lines.append("edges: " + " ".join(f"{u}-{v}" for u, v in g.edges))
    for key, val in (extra or {}).items():
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def _emit_graph(g: Graph, args, extra: dict | None = None, labeling: Labeling | None = None,
                ctx: LegendreContext | None = None) -> None:
    if args.format == "json":
        payload = graph_to_json(g)
        payload.update(extra or {})
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "dot":
        vlabels = list(labeling.assign) if labeling else None
        elabels = None
        if labeling is not None and ctx is not None:
            elabels = {
                (u, v): edge_label(labeling.assign[u] + labeling.assign[v], ctx)
                for u, v in g.edges
            }
        _emit(graph_to_dot(g, vlabels, elabels), args.out)
    else:
        _emit(_graph_table(g, extra), args.out)


def _budget_from_args(args) -> Budget:
    nodes = args.budget_nodes
    if nodes is None:
        nodes = int(os.environ.get(ENV_BUDGET_NODES, 2_000_000))
    seconds = args.budget_seconds
    if seconds is None:
        env = os.environ.get(ENV_BUDGET_SECONDS)
        seconds = float(env) if env else None
    return Budget(max_nodes=nodes, max_seconds=seconds)


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    g = parse_family(args.family)
    _emit_graph(g, args)
    return EXIT_OK


def _cmd_op(args) -> int:
    g1 = load_graph_arg(args.g1)
    g2 = load_graph_arg(args.g2)
    result = _OPS[args.op](g1, g2)
    extra = {"convention": _OP_CONVENTIONS[args.op], "connected": is_connected(result)}
    if not extra["connected"]:
        extra["warnings"] = ["result is disconnected"]
    _emit_graph(result, args, extra)
    return EXIT_OK


def _parse_inline_labels(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _load_labeling_arg(spec: str, graph: Graph) -> tuple[Labeling, int | None]:
    if os.path.exists(spec):
        try:
            with open(spec) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise _CliFailure(EXIT_IO, "io-error", f"cannot read labeling {spec!r}: {exc}")
        return labeling_from_json(obj, graph)
    return Labeling(graph, _parse_inline_labels(spec)), None


def _cmd_verify(args) -> int:
    g = load_graph_arg(args.g)
    lab, p_from_file = _load_labeling_arg(args.labeling, g)
    p = args.p if args.p is not None else p_from_file
    if p is None:
        raise ValueError("no prime given: pass --p or a labeling file carrying p")
    ctx = LegendreContext(p)
    if not is_connected(g):
        raise AdmissionError("cordiality is defined for connected graphs only")
    tally = induced_tally(lab, ctx)
    report = tally_report(tally)
    if args.format == "json":
        _emit(json.dumps(report, indent=2), args.out)
    elif args.format == "dot":
        _emit_graph(g, args, labeling=lab, ctx=ctx)
    else:
        _emit(
            f"e0: {report['e0']}\ne1: {report['e1']}\ncordial: {report['cordial']}\n",
            args.out,
        )
    return EXIT_OK


def _cmd_legendre(args) -> int:
    ctx = LegendreContext(args.p)
    sym = legendre_symbol(args.a, ctx)
    if args.format == "json":
        _emit(json.dumps({"a": args.a, "p": args.p, "symbol": sym}), args.out)
    else:
        _emit(str(sym), args.out)
    return EXIT_OK


def _cmd_search(args) -> int:
    g = load_graph_arg(args.g)
    if args.objective == "cordial":
        objective = DiffWindow.cordial()
    elif args.objective.startswith("diffwin:"):
        objective = DiffWindow.around(int(args.objective.split(":", 1)[1]))
    elif args.objective.startswith("diff:"):
        objective = DiffWindow.exact(int(args.objective.split(":", 1)[1]))
    else:
        raise ValueError(f"bad objective {args.objective!r}; use cordial, diff:D or diffwin:D")
    spec = SearchSpec(
        g,
        args.p,
        objective=objective,
        budget=_budget_from_args(args),
        mode=args.mode,
        jobs=args.jobs,
    )
    result = search_labeling(spec)
    payload = result.to_json()
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"{key}: {payload[key]}" for key in sorted(payload)]
        _emit("\n".join(lines) + "\n", args.out)
    if result.outcome == "none":
        return EXIT_SEARCH_NONE
    if result.outcome == "exhausted":
        return EXIT_BUDGET
    return EXIT_OK


def _recipe_from_json(obj: dict) -> ConstructionRecipe:
    def graph_of(key: str) -> Graph | None:
        val = obj.get(key)
        if val is None:
            return None
        if isinstance(val, str):
            return parse_family(val)
        return graph_from_json(val)

    def labels_of(key: str) -> tuple[int, ...] | None:
        val = obj.get(key)
        return tuple(int(x) for x in val) if val is not None else None

    return ConstructionRecipe(
        theorem=normalize_theorem(obj["theorem"]),
        p=int(obj["p"]),
        g1=graph_of("g1"),
        g2=graph_of("g2"),
        lab_g1=labels_of("lab_g1"),
        lab_g2=labels_of("lab_g2"),
    )


def _cmd_construct(args) -> int:
    if args.recipe:
        try:
            with open(args.recipe) as fh:
                recipe = _recipe_from_json(json.load(fh))
        except OSError as exc:
            raise _CliFailure(EXIT_IO, "io-error", f"cannot read recipe: {exc}")
        except json.JSONDecodeError as exc:
            raise _CliFailure(EXIT_IO, "io-error", f"bad recipe JSON: {exc}")
    else:
        theorem = normalize_theorem(args.theorem)
        if theorem in ("corona-path", "kp-tensor"):
            spec = args.g or args.g1 or args.g2
            if spec is None:
                raise ValueError(f"construction {theorem} needs --g")
            g = load_graph_arg(spec)
            g1, g2 = (g, None) if theorem == "corona-path" else (None, g)
            recipe = ConstructionRecipe(theorem, args.p, g1, g2)
        else:
            if args.g1 is None or args.g2 is None:
                raise ValueError(f"construction {theorem} needs --g1 and --g2")
            g1 = load_graph_arg(args.g1)
            g2 = load_graph_arg(args.g2)
            lab1 = _parse_inline_labels(args.lab_g1) if args.lab_g1 else None
            lab2 = _parse_inline_labels(args.lab_g2) if args.lab_g2 else None
            needs_search = (
                (theorem in ("join", "corona") and (lab1 is None or lab2 is None))
                or (theorem == "lexicographic" and lab2 is None)
                or (theorem in ("cartesian", "tensor", "strong") and lab1 is None)
            )
            if needs_search:
                if not args.auto:
                    raise ValueError(
                        f"construction {theorem} needs base labelings; pass them or use --auto"
                    )
                found = find_base_labelings(
                    theorem, g1, g2, args.p, budget=_budget_from_args(args)
                )
                if found.outcome == "none":
                    raise _CliFailure(
                        EXIT_SEARCH_NONE,
                        "search-none",
                        f"no base labelings satisfy the {theorem} hypothesis",
                    )
                if found.outcome == "exhausted":
                    raise _CliFailure(
                        EXIT_BUDGET, "budget-exhausted", "base-labeling search ran out of budget"
                    )
                recipe = found.recipe
            else:
                recipe = ConstructionRecipe(theorem, args.p, g1, g2, lab1, lab2)

    graph, lab, predicted = run_recipe(recipe)
    ctx = LegendreContext(recipe.p)
    verified = induced_tally(lab, ctx)
    bundle = {
        "theorem": recipe.theorem,
        "p": recipe.p,
        "graph": graph_to_json(graph),
        "labeling": labeling_to_json(lab, recipe.p),
        "predicted": {"e0": predicted.e0, "e1": predicted.e1},
        "verified": tally_report(verified),
    }
    if args.format == "json":
        _emit(json.dumps(bundle, indent=2), args.out)
    elif args.format == "dot":
        _emit_graph(graph, args, labeling=lab, ctx=ctx)
    else:
        _emit(
            f"theorem: {recipe.theorem}\np: {recipe.p}\norder: {graph.order}\n"
            f"size: {graph.size}\npredicted: ({predicted.e0}, {predicted.e1})\n"
            f"verified: ({verified.e0}, {verified.e1})\ncordial: {verified.is_cordial}\n",
            args.out,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legcordial",
        description="Legendre cordial labelings: generate, operate, construct, verify, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument(
            "--format", choices=("json", "dot", "table"), default="json", help="output format"
        )

    def add_budget(sp):
        sp.add_argument("--budget-nodes", type=int, default=None)
        sp.add_argument("--budget-seconds", type=float, default=None)
        sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("gen", help="generate a family graph (path:N cycle:N complete:N star:N edges:...)")
    sp.add_argument("family")
    add_common(sp)
    sp.set_defaults(handler=_cmd_gen)

    sp = sub.add_parser("op", help="apply a binary graph operation")
    sp.add_argument("op", choices=sorted(_OPS))
    sp.add_argument("g1")
    sp.add_argument("g2")
    add_common(sp)
    sp.set_defaults(handler=_cmd_op)

    sp = sub.add_parser("construct", help="run a constructive labeling")
    sp.add_argument("theorem", nargs="?", default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--g", default=None, help="single factor (corona-path / kp-tensor)")
    sp.add_argument("--g1", default=None)
    sp.add_argument("--g2", default=None)
    sp.add_argument("--lab-g1", dest="lab_g1", default=None, help="comma-separated labels")
    sp.add_argument("--lab-g2", dest="lab_g2", default=None, help="comma-separated labels")
    sp.add_argument("--auto", action="store_true", help="search for base labelings")
    sp.add_argument("--recipe", default=None, help="recipe JSON file")
    add_common(sp)
    add_budget(sp)
    sp.set_defaults(handler=_cmd_construct)

    sp = sub.add_parser("verify", help="verify a labeling")
    sp.add_argument("--g", required=True)
    sp.add_argument("--labeling", required=True, help="labeling JSON file or comma-separated labels")
    sp.add_argument("--p", type=int, default=None)
    add_common(sp)
    sp.set_defaults(handler=_cmd_verify)

    sp = sub.add_parser("search", help="search for a labeling")
    sp.add_argument("--g", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--objective", default="cordial", help="cordial | diff:D | diffwin:D")
    sp.add_argument("--mode", choices=("find-first", "count-all", "prove-none"), default="find-first")
    add_common(sp)
    add_budget(sp)
    sp.set_defaults(handler=_cmd_search)

    sp = sub.add_parser("legendre", help="Legendre symbol (a/p)")
    sp.add_argument("a", type=int)
    sp.add_argument("p", type=int)
    add_common(sp)
    sp.set_defaults(handler=_cmd_legendre)

    return parser


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": {"code": code, "type": kind, "message": message}}) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct" and not args.recipe:
        if args.theorem is None:
            return _fail(EXIT_USAGE, "usage-error", "construct needs a theorem name or --recipe")
        if args.p is None:
            return _fail(EXIT_USAGE, "usage-error", "construct needs --p")
    try:
        return args.handler(args)
    except _CliFailure as exc:
        return _fail(exc.code, exc.kind, str(exc))
    except HypothesisViolation as exc:
        return _fail(EXIT_HYPOTHESIS, "hypothesis-violation", str(exc))
    except AdmissionError as exc:
        return _fail(EXIT_HYPOTHESIS, "admission-error", str(exc))
    except ValueError as exc:
        return _fail(EXIT_USAGE, "usage-error", str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, "io-error", str(exc))


if __name__ == "__main__":
    sys.exit(main())
