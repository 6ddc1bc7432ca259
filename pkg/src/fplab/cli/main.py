"""fplab command line: verify, fp, search, bound, algebra.

Exit codes: 0 success (all checks passed / witness found / bound resolved),
1 negative result (a check failed, the space was exhausted, or the scanned
range ended without a threshold), 2 configuration error, 3 budget exhausted
(timeout or node limit).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from ..algebra_lab import build_report, from_rows
from ..errors import BudgetExceededError, ConfigError
from ..fp_engine import fp_sigma_minus
from ..instances import run_default_verification, towers
from ..search import (Exhausted, Unresolved, Witness, compute_bound,
                      find_hj_line, find_mono_fp_chain_blocked,
                      find_mt_witness_blocked, make_problem,
                      verify_bound_certificate, verify_chain_witness,
                      verify_hj_witness, verify_mt_witness)
from ..search.bounds import BoundResult
from . import config as cfgmod
from . import records

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3


class Emitter:
    """Routes records to stdout and human lines to stderr per --format."""

    def __init__(self, fmt: str) -> None:
        self.fmt = fmt

    def emit(self, record: dict[str, Any]) -> None:
        if self.fmt in ("records", "both"):
            print(records.dumps_record(record))
        if self.fmt in ("human", "both"):
            print(records.render_human(record), file=sys.stderr)

    def note(self, line: str) -> None:
        if self.fmt in ("human", "both"):
            print(line, file=sys.stderr)


def _apply_overrides(cfg: dict[str, Any], args: argparse.Namespace) -> None:
    if getattr(args, "parallelism", None) is not None:
        cfg["parallelism"] = args.parallelism
    if getattr(args, "seed", None) is not None:
        cfg["seed"] = args.seed
    if getattr(args, "timeout_seconds", None) is not None:
        cfg["budgets"]["timeout_seconds"] = args.timeout_seconds
    if getattr(args, "max_nodes", None) is not None:
        cfg["budgets"]["max_nodes"] = args.max_nodes
    if getattr(args, "count_only", False) and "fp" in cfg:
        cfg["fp"]["count_only"] = True


def _outcome_exit(outcome: Any) -> int:
    if isinstance(outcome, Witness) or isinstance(outcome, BoundResult):
        return EXIT_OK
    if isinstance(outcome, Exhausted):
        return EXIT_NEGATIVE
    if isinstance(outcome, Unresolved):
        return EXIT_NEGATIVE if outcome.reason == "n_max" else EXIT_BUDGET
    raise AssertionError(f"unmapped outcome {outcome!r}")


def cmd_verify(cfg: dict[str, Any], out: Emitter) -> int:
    spec = cfgmod.require(cfg, "instance", "verify")
    t0 = time.monotonic()
    if spec["kind"] == "tower":
        tower = cfgmod.build_tower(spec)
        reports = towers.verify_tower(tower)
        to_data = list
    else:
        bundle = cfgmod.build_bundle(spec)
        reports = run_default_verification(bundle)
        to_data = bundle.to_data
    for report in reports:
        out.emit(records.check_record(report, to_data))
    elapsed = time.monotonic() - t0
    passed = sum(1 for r in reports if r.passed)
    out.note(f"# verify: {passed}/{len(reports)} checks passed "
             f"in {elapsed:.2f}s")
    return EXIT_OK if passed == len(reports) else EXIT_NEGATIVE


def cmd_fp(cfg: dict[str, Any], out: Emitter) -> int:
    spec = cfgmod.require(cfg, "instance", "fp")
    section = cfgmod.require(cfg, "fp", "fp")
    bundle = cfgmod.build_bundle(spec)
    sigmas = tuple(bundle.morphism(n) for n in cfg.get("sigmas", ()))
    sub = (bundle.subsemigroup(cfg["subsemigroup"])
           if "subsemigroup" in cfg else None)
    a_bar = tuple(bundle.from_data(d) for d in section["a_bar"])
    t0 = time.monotonic()
    fps = fp_sigma_minus(bundle.instance, a_bar, sigmas, sub)
    elapsed = time.monotonic() - t0
    record = records.base_record(
        "fp",
        instance=bundle.instance.name,
        sigmas=[m.name for m in sigmas],
        subsemigroup=cfg.get("subsemigroup"),
        a_bar=[records.jsonable(a, bundle.to_data) for a in a_bar],
        count=len(fps),
    )
    if not section.get("count_only", False):
        record["elements"] = [records.jsonable(e, bundle.to_data)
                              for e in fps.elements]
    out.emit(record)
    out.note(f"# fp: {len(fps)} elements in {elapsed:.2f}s")
    return EXIT_OK


def _witness_record(task: str, outcome: Any, to_data) -> dict[str, Any]:
    if isinstance(outcome, Witness):
        return records.base_record(
            "search", task=task, status="witness",
            chain=[records.jsonable(a, to_data) for a in outcome.chain],
            color=outcome.color,
            certified=outcome.certified,
            provenance=[records.jsonable(p, to_data)
                        for p in outcome.provenance])
    if isinstance(outcome, Exhausted):
        return records.base_record("search", task=task, status="exhausted")
    return records.base_record("search", task=task, status="unresolved",
                               reason=outcome.reason)


def cmd_search(cfg: dict[str, Any], out: Emitter) -> int:
    spec = cfgmod.require(cfg, "instance", "search")
    section = cfgmod.require(cfg, "search", "search")
    coloring_spec = cfgmod.require(cfg, "coloring", "search")
    bundle = cfgmod.build_bundle(spec)
    coloring = cfgmod.build_coloring(coloring_spec, bundle)
    budgets = cfgmod.build_budgets(cfg)
    parallelism = cfg.get("parallelism", 1)
    task = section["task"]
    distinct = section.get("distinct", True)
    t0 = time.monotonic()

    if task == "hj_line":
        if "hj_dimension" not in section:
            raise ConfigError("hj_line search needs hj_dimension")
        if spec["kind"] != "words":
            raise ConfigError("hj_line search needs a words instance")
        alphabet = tuple(spec.get("alphabet", ("a", "b", "c")))
        variable = spec.get("variable", "x")
        outcome = find_hj_line(alphabet, variable, section["hj_dimension"],
                               coloring, budgets=budgets)
        if isinstance(outcome, Witness):
            outcome = verify_hj_witness(
                outcome, alphabet=alphabet, variable=variable,
                dimension=section["hj_dimension"], coloring=coloring)
    else:
        if "chain_length" not in section:
            raise ConfigError(f"{task} search needs chain_length")
        length = section["chain_length"]
        pool = (tuple(bundle.from_data(d) for d in section["pool"])
                if "pool" in section else bundle.pairwise_pool)
        relation = (bundle.relation(cfg["relation"])
                    if "relation" in cfg else None)
        if task == "chain":
            sigmas = tuple(bundle.morphism(n) for n in cfg.get("sigmas", ()))
            sub = (bundle.subsemigroup(cfg["subsemigroup"])
                   if "subsemigroup" in cfg else None)
            outcome = find_mono_fp_chain_blocked(
                bundle.instance, pool, length, coloring, sigmas=sigmas,
                sub=sub, relation=relation, distinct=distinct,
                budgets=budgets, parallelism=parallelism)
            if isinstance(outcome, Witness):
                outcome = verify_chain_witness(
                    outcome, instance=bundle.instance, coloring=coloring,
                    sigmas=sigmas, sub=sub, relation=relation, pool=pool,
                    distinct=distinct, length=length)
        elif task == "mt":
            if "mt_arity" not in section:
                raise ConfigError("mt search needs mt_arity")
            arity = section["mt_arity"]
            outcome = find_mt_witness_blocked(
                bundle.instance, pool, length, arity, coloring,
                relation=relation, distinct=distinct, budgets=budgets,
                parallelism=parallelism)
            if isinstance(outcome, Witness):
                outcome = verify_mt_witness(
                    outcome, instance=bundle.instance, coloring=coloring,
                    arity=arity, relation=relation, pool=pool,
                    distinct=distinct, length=length)
        else:  # pragma: no cover - schema rejects other tasks
            raise ConfigError(f"unknown search task {task!r}")

    elapsed = time.monotonic() - t0
    out.emit(_witness_record(task, outcome, bundle.to_data))
    nodes = getattr(outcome, "nodes", 0)
    out.note(f"# search: {elapsed:.2f}s, nodes={nodes}, "
             f"parallelism={parallelism}")
    return _outcome_exit(outcome)


def cmd_bound(cfg: dict[str, Any], out: Emitter) -> int:
    section = cfgmod.require(cfg, "bound", "bound")
    budgets = cfgmod.build_budgets(cfg)
    problem = make_problem(section["problem"], section.get("params"))
    t0 = time.monotonic()
    outcome = compute_bound(
        problem,
        colors=section.get("colors"),
        n_min=section.get("n_min", 1),
        n_max=section["n_max"],
        budgets=budgets,
        symmetry=section.get("symmetry", True),
        witness_pruning=section.get("witness_pruning", True),
        parallelism=cfg.get("parallelism", 1))
    elapsed = time.monotonic() - t0
    if isinstance(outcome, BoundResult):
        certified = verify_bound_certificate(
            problem, outcome.colors, outcome.certificate_n,
            outcome.avoiding_coloring)
        if not certified and outcome.certificate_n >= 1:
            raise ConfigError(
                "internal: bound certificate failed its replay")
        record = records.base_record(
            "bound", problem=outcome.problem, colors=outcome.colors,
            status="resolved", threshold=outcome.threshold,
            certificate_n=outcome.certificate_n,
            avoiding_coloring=list(outcome.avoiding_coloring),
            certificate_items=[records.jsonable(i)
                               for i in outcome.certificate_items],
            certified=certified,
            stats=[list(row) for row in outcome.stats])
    else:
        record = records.base_record(
            "bound", problem=section["problem"],
            colors=section.get("colors", problem.default_colors),
            status="unresolved", reason=outcome.reason)
    out.emit(record)
    nodes = getattr(outcome, "nodes", 0)
    out.note(f"# bound: {elapsed:.2f}s, nodes={nodes}, "
             f"parallelism={cfg.get('parallelism', 1)}")
    return _outcome_exit(outcome)


def cmd_algebra(path: str, out: Emitter) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read table file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"table file {path} is not valid JSON: "
                          f"{exc}") from exc
    if isinstance(data, dict) and "tables" in data:
        tables = data["tables"]
    elif isinstance(data, dict):
        tables = [data]
    elif isinstance(data, list):
        tables = data
    else:
        raise ConfigError("table file must hold a table object or a list")
    all_ok = True
    for i, entry in enumerate(tables):
        if not isinstance(entry, dict) or "rows" not in entry:
            raise ConfigError(f"table #{i} needs a 'rows' array")
        fs = from_rows(entry["rows"], name=entry.get("name", f"table_{i}"))
        report = build_report(fs)
        record = records.base_record("algebra", **report.to_data())
        out.emit(record)
        all_ok = all_ok and report.associative
    return EXIT_OK if all_ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("records", "human", "both"),
                        default="both",
                        help="records: JSONL on stdout; human: stderr notes; "
                             "both (default)")
    common.add_argument("--parallelism", type=int, metavar="N",
                        help="override the config's worker count")
    common.add_argument("--seed", type=int, metavar="S",
                        help="override the config's seed")
    common.add_argument("--timeout-seconds", type=float, metavar="T",
                        help="override the config's time budget")
    common.add_argument("--max-nodes", type=int, metavar="M",
                        help="override the config's node budget")

    parser = argparse.ArgumentParser(
        prog="fplab",
        description="Finite verification of partition-regularity structure.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
            ("verify", "run the registered axiom suite for an instance"),
            ("fp", "enumerate an fp set"),
            ("search", "search for a monochromatic witness"),
            ("bound", "compute a partition threshold")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--config", required=True, metavar="FILE",
                       help="job config (JSON)")
        if name == "fp":
            p.add_argument("--count-only", action="store_true",
                           help="report only the element count")
    p_alg = sub.add_parser("algebra", parents=[common],
                           help="analyze finite operation tables")
    p_alg.add_argument("tables", metavar="FILE",
                       help="JSON file with one table or a 'tables' list")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Emitter(args.format)
    try:
        if args.command == "algebra":
            return cmd_algebra(args.tables, out)
        cfg = cfgmod.load_config(args.config)
        _apply_overrides(cfg, args)
        handler = {"verify": cmd_verify, "fp": cmd_fp,
                   "search": cmd_search, "bound": cmd_bound}[args.command]
        return handler(cfg, out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BudgetExceededError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
