"""Report records and canonical serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from cotame.derivations import Endomorphism
from cotame.multipoly import Polynomial

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class Check:
    """One named comparison inside a report."""

    name: str
    ok: bool
    expected: str = ""
    computed: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": PASS if self.ok else FAIL,
                "expected": self.expected, "computed": self.computed}


@dataclass
class Report:
    id: str
    status: str = PASS
    expected: str = ""
    computed: str = ""
    classes: dict = field(default_factory=dict)
    witness: object = None
    seed: object = None
    millis: int | None = None
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, expected="", computed="") -> bool:
        self.checks.append(Check(name, bool(ok), str(expected), str(computed)))
        return ok

    def finish(self) -> Report:
        """Set status and the summary strings from the recorded checks."""
        failed = [c for c in self.checks if not c.ok]
        if self.status != SKIPPED:
            self.status = FAIL if failed else PASS
        shown = failed or self.checks
        self.expected = "\n".join(f"{c.name}: {c.expected}" for c in shown if c.expected)
        self.computed = "\n".join(f"{c.name}: {c.computed}" for c in shown if c.computed)
        return self

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "class": self.classes,
            "witness": self.witness,
            "seed": self.seed,
            "millis": self.millis,
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"{self.id}: {self.status}"]
        for c in self.checks:
            mark = "ok" if c.ok else "FAIL"
            lines.append(f"  [{mark}] {c.name}")
            if not c.ok:
                lines.append(f"      expected: {c.expected}")
                lines.append(f"      computed: {c.computed}")
        if self.classes:
            lines.append("  classes: " + json.dumps(self.classes, sort_keys=True))
        if self.witness is not None:
            lines.append(f"  witness: {self.witness}")
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        if self.millis is not None:
            lines.append(f"  millis: {self.millis}")
        return "\n".join(lines)


def _structured(obj):
    if isinstance(obj, (list, tuple)):
        return [_structured(o) for o in obj]
    return obj.to_json()


def _text(obj) -> str:
    if isinstance(obj, Polynomial):
        return str(obj)
    if isinstance(obj, Endomorphism):
        return obj.to_text()
    if isinstance(obj, (list, tuple)):
        return "\n".join(_text(o) for o in obj)
    return obj.to_text()


def emit(obj, format: str = "text") -> bytes:
    """Canonical bytes for a Polynomial, Endomorphism, Report or list of them."""
    if format == "text":
        return (_text(obj) + "\n").encode()
    if format == "structured":
        return (json.dumps(_structured(obj), sort_keys=True, indent=2) + "\n").encode()
    raise ValueError(f"unknown format {format!r}")
