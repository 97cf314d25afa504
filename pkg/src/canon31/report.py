from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Report:
    """Outcome of a verifier: ``ok`` plus the first violated condition."""

    ok: bool
    failure: str | None = None
    checks: int = 0

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, checks: int) -> Report:
        return cls(True, None, checks)

    @classmethod
    def failed(cls, why: str, checks: int = 0) -> Report:
        return cls(False, why, checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "failure": self.failure, "checks": self.checks}
