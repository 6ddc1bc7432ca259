"""Output records: one JSON object per line, plus a human rendering.

Records are the machine contract: keys sorted, separators fixed, and no
volatile content — node counts, wall-clock times, and the parallelism degree
appear only in the human rendering on stderr.  Two runs of the same config
must produce byte-identical record streams.
"""

from __future__ import annotations

import json
from collections.abc import Callable
from typing import Any

from ..errors import ConfigError

VIOLATION_CAP = 20


def jsonable(value: Any, to_data: Callable[[Any], Any] | None = None) -> Any:
    """Deterministic JSON form of nested tuples/sets/elements."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [jsonable(v, to_data) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v, to_data) for v in value), key=repr)
    if isinstance(value, dict):
        return {str(k): jsonable(v, to_data) for k, v in value.items()}
    if to_data is not None:
        try:
            return jsonable(to_data(value))
        except Exception:  # noqa: BLE001 - fall through to repr
            pass
    return repr(value)


def dumps_record(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def parse_record(line: str) -> dict[str, Any]:
    try:
        rec = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"not a record line: {exc}") from exc
    if not isinstance(rec, dict) or rec.get("schema_version") != 1:
        raise ConfigError("not a schema_version 1 record")
    return rec


def base_record(command: str, **fields: Any) -> dict[str, Any]:
    rec = {"schema_version": 1, "command": command}
    rec.update(fields)
    return rec


def check_record(report: Any, to_data: Callable[[Any], Any]) -> dict[str, Any]:
    """One verification check -> one record."""
    violations = [jsonable(v, to_data) for v in report.violations]
    return base_record(
        "verify",
        check=report.check,
        instance=report.instance,
        pool_size=report.pool_size,
        passed=report.passed,
        violation_count=len(report.violations),
        violations=violations[:VIOLATION_CAP],
    )


def render_human(record: dict[str, Any]) -> str:
    """One terse stderr line per record."""
    cmd = record.get("command", "?")
    if cmd == "verify":
        tag = "PASS" if record["passed"] else "FAIL"
        extra = ("" if record["passed"]
                 else f" ({record['violation_count']} violations)")
        return (f"[verify] {record['check']} on {record['instance']} "
                f"over {record['pool_size']}: {tag}{extra}")
    if cmd == "fp":
        return (f"[fp] {record['instance']} chain of {len(record['a_bar'])} "
                f"-> {record['count']} elements")
    if cmd == "search":
        status = record["status"]
        if status == "witness":
            return (f"[search:{record['task']}] witness {record['chain']} "
                    f"color {record['color']} certified={record['certified']}")
        if status == "exhausted":
            return f"[search:{record['task']}] exhausted, no witness"
        return (f"[search:{record['task']}] unresolved "
                f"({record['reason']})")
    if cmd == "bound":
        if record["status"] == "resolved":
            return (f"[bound] {record['problem']} with {record['colors']} "
                    f"colors: threshold {record['threshold']} "
                    f"(certificate at {record['certificate_n']})")
        return f"[bound] {record['problem']} unresolved ({record['reason']})"
    if cmd == "algebra":
        tag = "ok" if record["associative"] else "NOT ASSOCIATIVE"
        return (f"[algebra] {record['name']} (size {record['size']}): {tag}, "
                f"idempotents {record['idempotents']}, "
                f"left-minimal {record['left_minimal_idempotent']}")
    return f"[{cmd}] {dumps_record(record)}"
