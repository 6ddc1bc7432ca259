"""Job configuration: schema, loading, and object builders.

One config file describes one job.  The schema is strict — unknown keys are
rejected everywhere — and budgets are mandatory: no search or verification
runs unbounded.  Scalar knobs (parallelism, seed, budgets) can be overridden
from the command line without editing the file.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from ..algebra_lab import FiniteSemigroup, from_rows
from ..errors import ConfigError
from ..instances import InstanceBundle, make_bundle, towers
from ..search import (Budgets, Coloring, induced_coloring, rule_coloring,
                      table_coloring)
from ..search.bounds import problem_names
from ..semigroup_core import SemigroupInstance

_INSTANCE_SCHEMAS = [
    {
        "type": "object",
        "properties": {
            "kind": {"const": "nat_plus"},
            "max_value": {"type": "integer", "minimum": 1},
            "pool_max": {"type": "integer", "minimum": 1},
            "factors": {"type": "array",
                        "items": {"type": "integer", "minimum": 1}},
        },
        "required": ["kind"],
        "additionalProperties": False,
    },
    {
        "type": "object",
        "properties": {
            "kind": {"const": "words"},
            "alphabet": {"type": "array", "items": {"type": "string"},
                         "minItems": 1},
            "variable": {"type": "string"},
            "max_length": {"type": "integer", "minimum": 1},
            "pairwise_len": {"type": "integer", "minimum": 1},
            "cubic_len": {"type": "integer", "minimum": 1},
        },
        "required": ["kind"],
        "additionalProperties": False,
    },
    {
        "type": "object",
        "properties": {
            "kind": {"const": "fin_k"},
            "k": {"type": "integer", "minimum": 1},
            "max_support": {"type": "integer", "minimum": 1},
            "include_zero": {"type": "boolean"},
        },
        "required": ["kind"],
        "additionalProperties": False,
    },
    {
        "type": "object",
        "properties": {
            "kind": {"const": "free_product"},
            "c_generators": {"type": "array", "items": {"type": "string"},
                             "minItems": 1},
            "max_length": {"type": "integer", "minimum": 1},
            "pairwise_len": {"type": "integer", "minimum": 1},
            "cubic_len": {"type": "integer", "minimum": 1},
        },
        "required": ["kind"],
        "additionalProperties": False,
    },
    {
        "type": "object",
        "properties": {
            "kind": {"const": "carlson_code"},
            "alphabet": {"type": "array", "items": {"type": "string"},
                         "minItems": 1},
            "variable": {"type": "string"},
            "g_max_length": {"type": "integer", "minimum": 1},
            "coded_max_length": {"type": "integer", "minimum": 1},
            "s_bar": {"type": "array", "items": {"type": "string"},
                      "minItems": 1},
            "base_max_length": {"type": "integer", "minimum": 1},
            "cubic_len": {"type": "integer", "minimum": 1},
        },
        "required": ["kind"],
        "additionalProperties": False,
    },
    {
        "type": "object",
        "properties": {
            "kind": {"const": "tower"},
            "levels": {"type": "integer", "minimum": 2},
            "max_support": {"type": "integer", "minimum": 1},
            "variant": {"enum": ["composed", "per_level"]},
        },
        "required": ["kind"],
        "additionalProperties": False,
    },
    {
        "type": "object",
        "properties": {
            "kind": {"const": "table"},
            "rows": {"type": "array",
                     "items": {"type": "array",
                               "items": {"type": "integer", "minimum": 0}},
                     "minItems": 1},
            "name": {"type": "string"},
        },
        "required": ["kind", "rows"],
        "additionalProperties": False,
    },
]

_COLORING_RULE = {
    "type": "object",
    "properties": {
        "rule": {"type": "string"},
        "colors": {"type": "integer", "minimum": 1},
        "params": {"type": "object"},
        "name": {"type": "string"},
    },
    "required": ["rule", "colors"],
    "additionalProperties": False,
}

_COLORING_TABLE = {
    "type": "object",
    "properties": {
        "table": {"type": "object",
                  "additionalProperties": {"type": "integer", "minimum": 0}},
        "colors": {"type": "integer", "minimum": 1},
        "default": {"type": "integer", "minimum": 0},
        "name": {"type": "string"},
    },
    "required": ["table", "colors"],
    "additionalProperties": False,
}

_COLORING = {
    "oneOf": [
        _COLORING_RULE,
        _COLORING_TABLE,
        {
            "type": "object",
            "properties": {
                "induced": {"oneOf": [_COLORING_RULE, _COLORING_TABLE]},
            },
            "required": ["induced"],
            "additionalProperties": False,
        },
    ],
}

JOB_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "schema_version": {"const": 1},
        "instance": {"oneOf": _INSTANCE_SCHEMAS},
        "sigmas": {"type": "array", "items": {"type": "string"}},
        "subsemigroup": {"type": "string"},
        "relation": {"type": "string"},
        "coloring": _COLORING,
        "search": {
            "type": "object",
            "properties": {
                "task": {"enum": ["chain", "hj_line", "mt"]},
                "chain_length": {"type": "integer", "minimum": 1},
                "mt_arity": {"type": "integer", "minimum": 1},
                "hj_dimension": {"type": "integer", "minimum": 1},
                "pool": {"type": "array"},
                "distinct": {"type": "boolean"},
            },
            "required": ["task"],
            "additionalProperties": False,
        },
        "bound": {
            "type": "object",
            "properties": {
                "problem": {"enum": list(problem_names())},
                "colors": {"type": "integer", "minimum": 1},
                "n_min": {"type": "integer", "minimum": 0},
                "n_max": {"type": "integer", "minimum": 0},
                "params": {"type": "object"},
                "symmetry": {"type": "boolean"},
                "witness_pruning": {"type": "boolean"},
            },
            "required": ["problem", "n_max"],
            "additionalProperties": False,
        },
        "fp": {
            "type": "object",
            "properties": {
                "a_bar": {"type": "array", "minItems": 1},
                "count_only": {"type": "boolean"},
            },
            "required": ["a_bar"],
            "additionalProperties": False,
        },
        "budgets": {
            "type": "object",
            "properties": {
                "timeout_seconds": {"type": "number",
                                    "exclusiveMinimum": 0},
                "max_nodes": {"type": "integer", "minimum": 1},
            },
            "required": ["timeout_seconds", "max_nodes"],
            "additionalProperties": False,
        },
        "parallelism": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer", "minimum": 0},
    },
    "required": ["schema_version", "budgets"],
    "additionalProperties": False,
}


def load_config(path: str) -> dict[str, Any]:
    """Read and validate one job config; every problem is a ConfigError."""
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(instance=cfg, schema=JOB_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"config {path} invalid at {where}: "
                          f"{exc.message}") from exc
    return cfg


def require(cfg: dict[str, Any], section: str, command: str) -> Any:
    if section not in cfg:
        raise ConfigError(f"the {command} command needs a {section!r} "
                          "section in the config")
    return cfg[section]


def table_instance(rows: list[list[int]],
                   name: str = "") -> tuple[FiniteSemigroup,
                                            SemigroupInstance]:
    """An explicit finite operation table as a searchable instance."""
    fs = from_rows(rows, name=name)
    return fs, SemigroupInstance(
        name=fs.name,
        mul=fs.mul,
        key=lambda e: e,
        carrier=tuple(fs.carrier),
        in_budget=lambda e: 0 <= e < fs.size,
        description=f"explicit table on {fs.size} points",
    )


def build_bundle(spec: dict[str, Any]) -> InstanceBundle:
    """Instance section -> bundle (towers package their top level)."""
    spec = dict(spec)
    kind = spec.pop("kind")
    if kind == "tower":
        tower = towers.make_fin_tower(**spec)
        return towers.as_search_bundle(tower)
    if kind == "table":
        _, instance = table_instance(spec["rows"], spec.get("name", ""))
        carrier = instance.carrier or ()
        return InstanceBundle(kind="table", instance=instance,
                              pairwise_pool=carrier, cubic_pool=carrier,
                              to_data=int, from_data=int)
    for key in ("alphabet", "c_generators", "s_bar", "factors"):
        if key in spec:
            spec[key] = tuple(spec[key])
    return make_bundle(kind, **spec)


def build_tower(spec: dict[str, Any]) -> towers.TowerSpec:
    spec = dict(spec)
    spec.pop("kind")
    return towers.make_fin_tower(**spec)


def build_coloring(spec: dict[str, Any], bundle: InstanceBundle) -> Coloring:
    if "induced" in spec:
        base = build_coloring(spec["induced"], bundle)
        return induced_coloring(bundle, base)
    if "rule" in spec:
        return rule_coloring(spec["rule"], spec["colors"],
                             spec.get("params"), spec.get("name"))
    return table_coloring(spec["table"], spec["colors"],
                          to_data=bundle.to_data,
                          default=spec.get("default"),
                          name=spec.get("name", "table"))


def build_budgets(cfg: dict[str, Any]) -> Budgets:
    b = cfg["budgets"]
    return Budgets(timeout_seconds=float(b["timeout_seconds"]),
                   max_nodes=int(b["max_nodes"]))
