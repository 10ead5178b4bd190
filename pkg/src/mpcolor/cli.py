"""Command-line front end.

Exit status: 0 success, 1 usage or parse error, 2 invalid coloring,
3 inconclusive exact search.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import defaultdict
from fractions import Fraction

from .bounds import bounds_report, chi_1_formula
from .exact import DEFAULT_BUDGET, SearchBudgetExceeded, chi_t_exact
from .gen import certify_chi, gen_counterexample, gen_random, iter_profiles
from .greedy import greedy_coloring
from .instance import (ColoringShapeError, InstanceError, MultipartiteInstance,
                       coloring_from_original, make_instance, verify_coloring)
from .sparse import max_t_sparse

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_parts(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad part list {text!r}") from None


def _read_document(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: expected an object with 't' and 'parts'")
    return doc


def _instance_from_doc(doc: dict, where: str) -> MultipartiteInstance:
    if "t" not in doc or "parts" not in doc:
        raise UsageError(f"{where}: fields 't' and 'parts' are required")
    parts = doc["parts"]
    if not isinstance(parts, list):
        raise UsageError(f"{where}: 'parts' must be an array of integers")
    return make_instance(parts, doc["t"])


def _load_instance(args) -> MultipartiteInstance:
    if args.instance and args.parts is not None:
        raise UsageError("give either an instance file or --parts, not both")
    if args.instance:
        inst = _instance_from_doc(_read_document(args.instance), args.instance)
        return inst if args.t is None else inst.with_t(args.t)
    if args.parts is None or args.t is None:
        raise UsageError("an instance file or both --parts and --t are required")
    return make_instance(args.parts, args.t)


def _instance_doc(inst: MultipartiteInstance) -> dict:
    return {"t": inst.t, "parts": list(inst.original_sizes)}


def _vec(values, width: int) -> str:
    return "(" + ", ".join(str(v).rjust(width) for v in values) + ")"


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _trace_lines(inst: MultipartiteInstance, result) -> list[str]:
    width = len(str(max(inst.part_sizes)))
    label_w = len(f"f^-1({result.k})")
    lines = [" " * (label_w + 3 + len(_vec(inst.original_sizes, width)) + 4)
             + _vec(inst.original_sizes, width)]
    for i, (sel, left) in enumerate(zip(result.trace, result.residuals), 1):
        label = f"f^-1({i})".ljust(label_w)
        lines.append(f"{label} = {_vec(inst.to_original_columns(sel.picks), width)}"
                     f"  ->  {_vec(inst.to_original_columns(left), width)}")
    return lines


def _rows_original(inst, col) -> list[list[int]]:
    return [inst.to_original_columns(row) for row in col.counts]


def cmd_bounds(args) -> int:
    inst = _load_instance(args)
    rep = bounds_report(inst)
    doc = {**_instance_doc(inst), **rep.as_dict()}
    if inst.t == 1:
        doc["chi_1_formula"] = chi_1_formula(inst)
    lines = [f"parts={list(inst.part_sizes)} t={inst.t}",
             f"r={rep.r} sigma={rep.sigma}",
             f"lower_2t={rep.lower_2t} upper_2t={rep.upper_2t}",
             f"lower_chi={rep.lower_chi} upper_delta={rep.upper_delta}"]
    if "chi_1_formula" in doc:
        lines.append(f"chi_1_formula={doc['chi_1_formula']}")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_sparse(args) -> int:
    inst = _load_instance(args)
    sel = max_t_sparse(inst)
    picks = inst.to_original_columns(sel.picks)
    doc = {**_instance_doc(inst), "beta_t": sel.size, "picks": picks}
    _emit(args, doc, [f"beta_t={sel.size}", f"picks={_vec(picks, 1)}"])
    return EXIT_OK


def cmd_greedy(args) -> int:
    inst = _load_instance(args)
    result = greedy_coloring(inst)
    doc = {
        **_instance_doc(inst),
        "k": result.k,
        "colors": _rows_original(inst, result.coloring),
        "residuals": [inst.to_original_columns(r) for r in result.residuals],
    }
    _emit(args, doc, [f"greedy colors: {result.k}"] + _trace_lines(inst, result))
    return EXIT_OK


def cmd_exact(args) -> int:
    inst = _load_instance(args)
    try:
        out = chi_t_exact(inst, budget=args.budget)
    except SearchBudgetExceeded as exc:
        doc = {**_instance_doc(inst), "status": "inconclusive",
               "lower": exc.lower, "upper": exc.upper, "nodes_explored": exc.nodes_explored}
        _emit(args, doc, [f"inconclusive: chi_t in [{exc.lower}, {exc.upper}] "
                          f"after {exc.nodes_explored} nodes"])
        return EXIT_INCONCLUSIVE
    rows = _rows_original(inst, out.witness)
    width = len(str(max(inst.part_sizes)))
    doc = {**_instance_doc(inst), "status": "solved", "chi": out.chi,
           "colors": rows, "nodes_explored": out.nodes_explored}
    lines = [f"chi_t={out.chi}"]
    lines += [f"color {i}: {_vec(row, width)}" for i, row in enumerate(rows, 1)]
    lines.append(f"nodes explored: {out.nodes_explored}")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _read_document(args.coloring)
    inst = _instance_from_doc(doc, args.coloring)
    rows = doc.get("colors")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise UsageError(f"{args.coloring}: 'colors' must be an array of integer arrays")
    col = coloring_from_original(inst, rows)
    verdict = verify_coloring(inst, col)
    violations = [{"color": v.color + 1, "part": inst.order[v.part] + 1, "excess": v.excess}
                  for v in verdict.violations]
    out = {**_instance_doc(inst), "k": col.k, "valid": verdict.valid, "violations": violations}
    if verdict.valid:
        lines = [f"valid ({col.k} colors)"]
    else:
        lines = ["invalid"] + [f"  color {v['color']} part {v['part']}: "
                               f"{v['excess']} same-colored neighbours over t"
                               for v in violations]
    _emit(args, out, lines)
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_counterexample(args) -> int:
    inst, cert = gen_counterexample(args.t)
    result = greedy_coloring(inst)
    chi = certify_chi(inst, cert)
    if chi is None:
        chi = chi_t_exact(inst, budget=args.budget).chi
    doc = {**_instance_doc(inst), "certificate": _rows_original(inst, cert),
           "colors": _rows_original(inst, result.coloring),
           "exact": chi, "greedy": result.k}
    width = len(str(max(inst.part_sizes)))
    lines = [f"instance: K{tuple(inst.original_sizes)} t={inst.t}", "certified coloring:"]
    lines += [f"  g^-1({i}) = {_vec(row, width)}" for i, row in enumerate(doc["certificate"], 1)]
    lines.append("greedy trace:")
    lines += ["  " + line for line in _trace_lines(inst, result)]
    lines.append(f"exact: {chi}, greedy: {result.k}")
    _emit(args, doc, lines)
    return EXIT_OK


def _bench_instances(args):
    for t in range(1, args.max_t + 1):
        for profile in iter_profiles(args.max_s, args.max_n):
            yield make_instance(profile, t)
    for i in range(args.random):
        yield gen_random(args.seed + i, args.max_s, args.max_n, args.max_t)


def cmd_bench(args) -> int:
    count = inconclusive = 0
    worst = Fraction(1)
    worst_inst = None
    suboptimal = defaultdict(int)
    per_t = defaultdict(int)
    for inst in _bench_instances(args):
        count += 1
        per_t[inst.t] += 1
        k = greedy_coloring(inst).k
        try:
            chi = chi_t_exact(inst, budget=args.budget).chi
        except SearchBudgetExceeded:
            inconclusive += 1
            continue
        if k > chi:
            suboptimal[inst.t] += 1
        if Fraction(k, chi) > worst:
            worst = Fraction(k, chi)
            worst_inst = _instance_doc(inst)
    doc = {
        "instances": count,
        "inconclusive": inconclusive,
        "max_ratio": str(worst),
        "max_ratio_instance": worst_inst,
        "suboptimal_by_t": {str(t): suboptimal[t] for t in sorted(per_t)},
        "instances_by_t": {str(t): per_t[t] for t in sorted(per_t)},
    }
    lines = [f"instances: {count} (inconclusive: {inconclusive})",
             f"max greedy/exact ratio: {worst} ({float(worst):.4f})"]
    if worst_inst:
        lines.append(f"  attained on parts={worst_inst['parts']} t={worst_inst['t']}")
    lines.append(" t  instances  greedy-suboptimal")
    lines += [f"{t:2d}  {per_t[t]:9d}  {suboptimal[t]:17d}" for t in sorted(per_t)]
    _emit(args, doc, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mpcolor", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")

    inst_opts = argparse.ArgumentParser(add_help=False)
    inst_opts.add_argument("instance", nargs="?", help="JSON file with 't' and 'parts'")
    inst_opts.add_argument("--parts", type=_parse_parts, help="comma-separated part sizes")
    inst_opts.add_argument("--t", type=int, help="relaxation parameter")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="node budget for the exact search")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("bounds", parents=[common, inst_opts], help="closed-form bounds"
                   ).set_defaults(func=cmd_bounds)
    sub.add_parser("sparse", parents=[common, inst_opts], help="maximum t-sparse set"
                   ).set_defaults(func=cmd_sparse)
    sub.add_parser("greedy", parents=[common, inst_opts], help="greedy coloring with trace"
                   ).set_defaults(func=cmd_greedy)
    sub.add_parser("exact", parents=[common, inst_opts, budget], help="exact chi_t"
                   ).set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", parents=[common], help="check a coloring file")
    p.add_argument("coloring", help="JSON file with 't', 'parts' and 'colors'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", parents=[common, budget],
                       help="instance where greedy is not optimal (t >= 7)")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("bench", parents=[common, budget],
                       help="greedy vs exact over all small profiles")
    p.add_argument("--max-s", type=int, default=4)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-t", type=int, default=4)
    p.add_argument("--random", type=int, default=0, help="extra seeded random instances")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InstanceError, ColoringShapeError, ValueError) as exc:
        print(f"mpcolor {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
