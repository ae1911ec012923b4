"""Command-line interface.

Exit codes: 0 success, 1 failed suite or aborted computation, 2 usage or
input error. Output is a plain table by default and JSON Lines with
``--json``; timings are only printed with ``--timing`` so that reports are
byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .distances import (EDGELESS, EMPTY_GRAPHS, FORESTS, ClassSpec, deletion_distance,
                        distance_independent_set, edit_distance, elimination_distance,
                        tree_depth)
from .errors import BudgetExhausted, ElimdistError, FormulaError, GraphFormatError
from .formats import graph_from_line, graph_to_line, parse_graphs, write_graph6
from .fo import (deletion_formula, edge_edit_formula, edgeless_sentence, evaluate,
                 format_formula, has_edge_sentence, is_sentence, null_graph_sentence,
                 parse_formula, treedepth_formula)
from .graph import Graph
from .minors import ObstructionSet, is_depth_minor, is_minor
from .obstructions import (CkSpec, ck_membership, ck_obstructions, enumerate_obstructions,
                           read_obstruction_file, union_closure_obstructions,
                           write_obstruction_file)
from .suites import SUITES, run_suite

NAMED_CLASSES = {"empty": EMPTY_GRAPHS, "edgeless": EDGELESS, "forests": FORESTS}
BASE_SENTENCES = {"edgeless": edgeless_sentence, "null": null_graph_sentence,
                  "no-edge": edgeless_sentence, "has-edge": has_edge_sentence}


class UsageError(Exception):
    """Bad arguments or unreadable input; exit code 2."""


@dataclass
class RunReport:
    command: list[str]
    items: list[dict] = field(default_factory=list)
    summary: dict | None = None
    timing: bool = False

    def add(self, item: dict, ms: float):
        if self.timing:
            item["ms"] = round(ms, 3)
        self.items.append(item)

    def render_json(self) -> str:
        lines = [json.dumps({"command": self.command}, sort_keys=True)]
        lines += [json.dumps(item, sort_keys=True) for item in self.items]
        if self.summary is not None:
            lines.append(json.dumps({"summary": self.summary}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def render_table(self) -> str:
        out = ["# " + " ".join(self.command)]
        if self.items:
            cols = []
            for item in self.items:
                cols += [k for k in item if k not in cols]
            rows = [[_cell(item.get(c)) for c in cols] for item in self.items]
            widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
            out.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            out += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
        if self.summary is not None:
            for k in sorted(self.summary):
                out.append(f"{k}: {_cell(self.summary[k])}")
        return "\n".join(out) + "\n"


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


# input helpers

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _load_graphs(path: str, fmt: str) -> list[Graph]:
    try:
        return parse_graphs(_read_text(path), fmt)
    except GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_obstructions(path: str, budget) -> ObstructionSet:
    try:
        return read_obstruction_file(path, validate=True, budget=budget)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_formula(args) -> object:
    text = args.formula
    if args.formula_file:
        text = _read_text(args.formula_file)
    try:
        phi = parse_formula(text)
    except FormulaError as exc:
        raise UsageError(f"formula: {exc}") from None
    if not is_sentence(phi):
        raise UsageError("formula has free variables: " + ", ".join(sorted(phi.fv)))
    return phi


def _class_spec(args) -> ClassSpec:
    if args.obstructions:
        return ClassSpec.excluded_minors(_load_obstructions(args.obstructions, args.budget),
                                         budget=args.budget)
    if args.formula or args.formula_file:
        try:
            return ClassSpec.fo_formula(_load_formula(args))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.cls:
        spec = NAMED_CLASSES[args.cls]
        return ClassSpec.excluded_minors(spec.obstructions, name=spec.name, budget=args.budget)
    raise UsageError("give a class with --obstructions, --class or --formula")


def _run_items(report: RunReport, graphs, fn):
    for i, g in enumerate(graphs):
        start = time.perf_counter()
        item = {"id": i, "graph": write_graph6(g)}
        try:
            item.update(fn(g))
        except BudgetExhausted as exc:
            item["value"] = "budget_exhausted"
            item["budget"] = exc.budget
        report.add(item, (time.perf_counter() - start) * 1000)


def _result_item(res) -> dict:
    return res.to_json()


# subcommands

def cmd_treedepth(args, report):
    graphs = _load_graphs(args.input, args.format)
    _run_items(report, graphs, lambda g: _result_item(tree_depth(g, args.cap)))


def cmd_elimdist(args, report):
    spec = _class_spec(args)
    graphs = _load_graphs(args.input, args.format)
    memo = {}
    _run_items(report, graphs,
               lambda g: _result_item(elimination_distance(g, spec, args.cap, memo=memo)))


def cmd_deldist(args, report):
    spec = _class_spec(args)
    graphs = _load_graphs(args.input, args.format)
    _run_items(report, graphs, lambda g: _result_item(deletion_distance(g, spec, args.cap)))


def cmd_editdist(args, report):
    spec = _class_spec(args)
    graphs = _load_graphs(args.input, args.format)
    budget = (args.vertex_deletions, args.edge_deletions, args.edge_additions)

    def one(g):
        plan = edit_distance(g, spec, budget)
        if plan is None:
            return {"value": "none", "witness": None}
        return {"value": sum(plan.cost), "witness": plan.to_json()}

    _run_items(report, graphs, one)


def cmd_minor(args, report):
    if os.path.exists(args.pattern):
        patterns = _load_graphs(args.pattern, args.format)
        if len(patterns) != 1:
            raise UsageError(f"{args.pattern}: expected exactly one pattern graph")
        h = patterns[0]
    else:
        try:
            h = graph_from_line(args.pattern)
        except GraphFormatError as exc:
            raise UsageError(f"pattern: {exc}") from None
    graphs = _load_graphs(args.input, args.format)

    def one(g):
        if args.depth is None:
            m = is_minor(h, g, args.budget)
        else:
            m = is_depth_minor(h, g, args.depth, args.budget)
        return {"value": m is not None, "witness": None if m is None else m.to_json()}

    _run_items(report, graphs, one)


def cmd_dis(args, report):
    graphs = _load_graphs(args.input, args.format)

    def one(g):
        s = distance_independent_set(g, args.k, args.r)
        return {"value": s is not None, "witness": None if s is None else list(s)}

    _run_items(report, graphs, one)


def _emit_obstructions(args, report, obs: ObstructionSet, **meta):
    if args.output:
        write_obstruction_file(args.output, obs, **meta)
    for i, h in enumerate(obs):
        report.add({"id": i, "graph": write_graph6(h), "n": h.n, "m": h.num_edges}, 0.0)
    report.summary = {"members": len(obs), "partial_up_to": obs.partial_up_to}
    if args.output:
        report.summary["output"] = args.output


def cmd_obs_union(args, report):
    base = _load_obstructions(args.base, args.budget)
    _emit_obstructions(args, report, union_closure_obstructions(base, args.budget),
                       operation="union-closure", base=[graph_to_line(g) for g in base])


def cmd_obs_ck(args, report):
    base = _load_obstructions(args.base, args.budget)
    obs = ck_obstructions(CkSpec(base, args.k), args.n_max, args.budget)
    _emit_obstructions(args, report, obs, operation="ck", k=args.k,
                       base=[graph_to_line(g) for g in base])


def cmd_obs_enumerate(args, report):
    if args.treedepth is not None:
        k = args.treedepth

        def member(g):
            return tree_depth(g, k).value is not None
    elif args.ck_base:
        spec = CkSpec(_load_obstructions(args.ck_base, args.budget), args.k)
        memo = {}

        def member(g):
            return ck_membership(g, spec, args.budget, memo)
    elif args.formula or args.formula_file:
        phi = _load_formula(args)

        def member(g):
            return evaluate(phi, g)
    else:
        raise UsageError("give a membership test with --treedepth, --ck-base or --formula")
    try:
        obs = enumerate_obstructions(member, args.n_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_obstructions(args, report, obs, operation="enumerate")


def _built_formula(args):
    name = args.builder
    if name == "treedepth":
        return treedepth_formula(args.k)
    base = BASE_SENTENCES[args.base]()
    if name == "deletion":
        return deletion_formula(base, args.k)
    if name == "edit":
        return edge_edit_formula(base, args.additions, args.deletions)
    raise UsageError(f"unknown builder {name!r}")


def cmd_fo_build(args, report):
    phi = _built_formula(args)
    sys.stdout.write(format_formula(phi) + "\n")
    return "raw"


def cmd_fo_eval(args, report):
    if args.builder:
        phi = _built_formula(args)
    elif args.formula or args.formula_file:
        phi = _load_formula(args)
    else:
        raise UsageError("give --builder, --formula or --formula-file")
    graphs = _load_graphs(args.input, args.format)

    def one(g):
        try:
            return {"value": evaluate(phi, g)}
        except FormulaError as exc:
            raise UsageError(f"graph {write_graph6(g)}: {exc}") from None

    _run_items(report, graphs, one)


def cmd_suite(args, report):
    if args.name not in SUITES:
        raise UsageError(f"unknown suite {args.name!r}; known: {', '.join(SUITES)}")
    start = time.perf_counter()
    res = run_suite(args.name, n_max=args.n_max, k_max=args.k_max, seed=args.seed,
                    samples=args.samples)
    summary = res.to_json()
    if args.timing:
        summary["ms"] = round((time.perf_counter() - start) * 1000, 3)
    report.summary = summary
    return 0 if res.passed else 1


# parser

def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["auto", "graph6", "edgelist", "json"], default="auto",
                   help="graph input format (default: detect)")
    p.add_argument("--json", action="store_true", help="emit JSON Lines")
    p.add_argument("--budget", type=int, default=None,
                   help="minor-search node budget (default: $ELIMDIST_BUDGET or 10^7)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised suites")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")


def _add_class(p: argparse.ArgumentParser):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--obstructions", help="obstruction file (graph6, one per line)")
    g.add_argument("--class", dest="cls", choices=sorted(NAMED_CLASSES))
    g.add_argument("--formula", help="defining sentence as an s-expression")
    g.add_argument("--formula-file")


def _add_formula(p: argparse.ArgumentParser):
    p.add_argument("--formula", help="sentence as an s-expression")
    p.add_argument("--formula-file")


def _add_builder(p: argparse.ArgumentParser, required: bool):
    p.add_argument("--builder", choices=["treedepth", "deletion", "edit"], required=required)
    p.add_argument("-k", "--k", type=int, default=1, help="tree-depth or deletion bound")
    p.add_argument("--base", choices=sorted(BASE_SENTENCES), default="edgeless",
                   help="base sentence for deletion/edit builders")
    p.add_argument("--additions", type=int, default=0)
    p.add_argument("--deletions", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common)
    parser = argparse.ArgumentParser(prog="elimdist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("treedepth", parents=[common], help="exact tree-depth")
    p.add_argument("input")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_treedepth)

    p = sub.add_parser("elimdist", parents=[common], help="elimination distance to a class")
    p.add_argument("input")
    _add_class(p)
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_elimdist)

    p = sub.add_parser("deldist", parents=[common], help="vertex-deletion distance")
    p.add_argument("input")
    _add_class(p)
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_deldist)

    p = sub.add_parser("editdist", parents=[common], help="bounded vertex/edge edit search")
    p.add_argument("input")
    _add_class(p)
    p.add_argument("--vertex-deletions", type=int, default=0)
    p.add_argument("--edge-deletions", type=int, default=0)
    p.add_argument("--edge-additions", type=int, default=0)
    p.set_defaults(func=cmd_editdist)

    p = sub.add_parser("minor", parents=[common], help="minor or depth-r minor test")
    p.add_argument("pattern", help="graph6 string or file holding one graph")
    p.add_argument("input")
    p.add_argument("--depth", type=int, help="radius bound for depth-r minors")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("dis", parents=[common], help="distance-r independent set")
    p.add_argument("input")
    p.add_argument("-k", "--k", type=int, required=True)
    p.add_argument("-r", "--r", type=int, required=True)
    p.set_defaults(func=cmd_dis)

    p = sub.add_parser("obstructions", help="obstruction-set calculus")
    osub = p.add_subparsers(dest="mode", required=True)
    q = osub.add_parser("union-closure", parents=[common])
    q.add_argument("base")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_obs_union)
    q = osub.add_parser("ck", parents=[common])
    q.add_argument("base")
    q.add_argument("-k", "--k", type=int, required=True)
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_obs_ck)
    q = osub.add_parser("enumerate", parents=[common])
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("--treedepth", type=int, help="members have tree-depth at most this")
    q.add_argument("--ck-base", help="members lie in C_k over this obstruction file")
    q.add_argument("-k", "--k", type=int, default=0)
    _add_formula(q)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_obs_enumerate)

    p = sub.add_parser("fo", help="first-order sentences")
    fsub = p.add_subparsers(dest="mode", required=True)
    q = fsub.add_parser("eval", parents=[common])
    q.add_argument("input")
    _add_formula(q)
    _add_builder(q, required=False)
    q.set_defaults(func=cmd_fo_eval)
    q = fsub.add_parser("build", parents=[common])
    _add_builder(q, required=True)
    q.set_defaults(func=cmd_fo_build)

    p = sub.add_parser("suite", parents=[common], help="run a cross-validation suite")
    p.add_argument("name", help=", ".join(SUITES))
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--samples", type=int)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    report = RunReport(["elimdist", *argv], timing=args.timing)
    try:
        status = args.func(args, report)
    except UsageError as exc:
        print(f"elimdist: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExhausted as exc:
        print(f"elimdist: {exc}", file=sys.stderr)
        return 1
    except ElimdistError as exc:
        print(f"elimdist: error: {exc}", file=sys.stderr)
        return 2
    if status == "raw":
        return 0
    sys.stdout.write(report.render_json() if args.json else report.render_table())
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
