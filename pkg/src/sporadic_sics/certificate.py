"""Named pass/fail records with measured deviations."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_deviation": format_real(self.max_deviation),
            "tolerance": format_real(self.tolerance),
        }


def format_real(x: float) -> str:
    """17 significant digits, enough for an exact float round trip."""
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return str(x)
    return format(x, ".16e")


@dataclass
class Certificate:
    """Ordered list of checks about one subject; ``overall`` is their conjunction."""

    subject: str
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, deviation: float, tolerance: float) -> Check:
        """Record a check that passes when ``deviation <= tolerance``."""
        deviation = float(deviation)
        passed = not math.isnan(deviation) and deviation <= tolerance
        check = Check(name, passed, deviation, float(tolerance))
        self.checks.append(check)
        return check

    def require(self, name: str, ok: bool, tolerance: float = 0.0) -> Check:
        """Record a boolean condition (deviation 0 on success, 1 on failure)."""
        check = Check(name, bool(ok), 0.0 if ok else 1.0, float(tolerance))
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check]) -> None:
        self.checks.extend(checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def max_deviation(self) -> float:
        return max((c.max_deviation for c in self.checks), default=0.0)

    def to_dict(self, config: dict[str, Any] | None = None) -> dict[str, Any]:
        out: dict[str, Any] = {"subject": self.subject}
        if config is not None:
            out["config"] = config
        out["checks"] = [c.to_dict() for c in self.checks]
        out["overall"] = self.overall
        return out

    def to_json(self, config: dict[str, Any] | None = None) -> str:
        return json.dumps(self.to_dict(config), indent=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Certificate":
        cert = cls(data["subject"])
        for c in data["checks"]:
            cert.checks.append(
                Check(c["name"], bool(c["passed"]), float(c["max_deviation"]), float(c["tolerance"]))
            )
        return cert
