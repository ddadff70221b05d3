"""Validation reports and the package's exception types."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class StructureError(ValueError):
    """Malformed input: ragged tables, unknown identifiers, shape mismatches.

    Distinct from an axiom failure, which is reported, not raised.
    """


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured cap."""


class AxiomError(ValueError):
    """Raised by ``ValidationReport.raise_for_failures``."""


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        return d


@dataclass
class ValidationReport:
    subject: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, bool(passed), None if passed else witness))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def raise_for_failures(self) -> None:
        if not self.ok:
            names = ", ".join(f"{c.name} (witness {c.witness!r})" for c in self.failures)
            raise AxiomError(f"{self.subject}: failed {names}")

    def to_dict(self) -> dict:
        return {"subject": self.subject, "ok": self.ok,
                "checks": [c.to_dict() for c in self.checks]}


def _jsonable(obj: Any) -> Any:
    if hasattr(obj, "to_dict"):
        return _jsonable(obj.to_dict())
    if hasattr(obj, "tolist"):  # numpy arrays and scalars
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(o) for o in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj
