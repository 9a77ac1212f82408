"""Verification reports and their deterministic JSON/text rendering.

Rationals serialize as ``"p/q"`` strings, intervals as ``[lo, hi]`` (``hi`` may
be ``null``), point cohomology entries as plain integers.  Keys are sorted so
that a report round-trips byte for byte.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__
from .chow import SurfaceClass, ThreefoldClass
from .cohomology import CohVector

STATUSES = ("pass", "fail", "interval", "assumed")


@dataclass
class Check:
    name: str
    status: str
    expected: Any = None
    actual: Any = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    tool_version: str = f"degencalc {__version__}"

    def check(self, name: str, ok: bool, expected=None, actual=None) -> bool:
        self.checks.append(Check(name, "pass" if ok else "fail", expected, actual))
        return ok

    def add(self, name: str, status: str, expected=None, actual=None) -> None:
        self.checks.append(Check(name, status, expected, actual))

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_data(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "command": self.command,
            "inputs": encode(self.inputs),
            "results": encode(self.results),
            "checks": [encode(vars(c)) for c in self.checks],
        }

    def to_json(self) -> str:
        return dumps(self.to_data())

    def to_text(self) -> str:
        return render_text(self.to_data())


def encode(obj):
    """Convert engine values into JSON-ready data without floating point."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, CohVector):
        return [lo if lo == hi else [lo, hi] for lo, hi in obj.entries]
    if isinstance(obj, SurfaceClass):
        return [encode(obj.a), encode(obj.b)]
    if isinstance(obj, ThreefoldClass):
        return {"m": encode(obj.m), "pull": encode(obj.pull)}
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, float):
        raise TypeError("floating point values are not allowed in reports")
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _short(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def render_text(data: dict) -> str:
    lines = [f"{data['tool_version']}  {data['command']}"]
    if data["inputs"]:
        lines.append("inputs: " + ", ".join(f"{k}={_short(v)}" for k, v in sorted(data["inputs"].items())))
    lines.append("")
    results = dict(data["results"])
    audit = results.pop("audit", None)
    for key in sorted(results):
        val = results[key]
        if isinstance(val, dict):
            lines.append(f"{key}:")
            width = max((len(k) for k in val), default=0)
            for k in sorted(val):
                lines.append(f"  {k.ljust(width)}  {_short(val[k])}")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{key}:")
            for item in val:
                lines.append("  " + _short(item))
        else:
            lines.append(f"{key}: {_short(val)}")
    if data["checks"]:
        lines.append("")
        lines.append("checks:")
        width = max(len(c["name"]) for c in data["checks"])
        for c in data["checks"]:
            lines.append(
                f"  [{c['status'].upper():8}] {c['name'].ljust(width)}  "
                f"expected={_short(c['expected'])}  actual={_short(c['actual'])}"
            )
    if audit:
        lines.append("")
        lines.append("audit notes:")
        for note in audit:
            lines.append(f"  - {note}")
    n_fail = sum(c["status"] == "fail" for c in data["checks"])
    lines.append("")
    lines.append(f"{len(data['checks'])} checks, {n_fail} failed")
    return "\n".join(lines) + "\n"
