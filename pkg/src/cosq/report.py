"""Report envelope shared by the service and the CLI.

Every command answers with one JSON object: schema tag, command echo,
inputs, outputs, status, worker count, timing.  All numbers are
rendered as strings (rationals as "p/q" in lowest terms) so consumers
never lose precision; booleans and nulls stay native.  Reports are
byte-stable: the only nondeterministic field, timing, stays null unless
explicitly requested.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

SCHEMA_VERSION = "cosq.report.v1"

STATUS_OK = "ok"
STATUS_FAIL = "fail"
STATUS_UNCERTIFIED = "uncertified"


def render_value(v):
    """Map a python value onto the report value domain."""
    if v is None or isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, str):
        return v
    if isinstance(v, dict):
        return {str(key): render_value(val) for key, val in v.items()}
    if isinstance(v, (list, tuple)):
        return [render_value(x) for x in v]
    raise TypeError(f"cannot render {type(v).__name__} in a report")


def make_report(
    command: str,
    inputs: dict,
    outputs: dict,
    status: str = STATUS_OK,
    workers: int = 1,
    timing_s: float | None = None,
) -> dict:
    if status not in (STATUS_OK, STATUS_FAIL, STATUS_UNCERTIFIED):
        raise ValueError(f"unknown report status {status!r}")
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "inputs": render_value(inputs),
        "outputs": render_value(outputs),
        "status": status,
        "workers": str(workers),
        "timing": None if timing_s is None else f"{timing_s:.6f}",
    }


def canonical_json(report: dict) -> str:
    """Stable rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def schema_text() -> str:
    """The bundled JSON schema for report envelopes."""
    return (
        resources.files("cosq").joinpath("schemas/report.v1.schema.json").read_text()
    )


def exit_code_for(report: dict) -> int:
    """CLI contract: 0 ok, 1 property-false/FAIL, 3 budget exhausted."""
    return {STATUS_OK: 0, STATUS_FAIL: 1, STATUS_UNCERTIFIED: 3}[report["status"]]
