"""Outcome record for one identity check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class IdentityReport:
    id: str
    order: int
    status: str
    first_mismatch: object = None
    elapsed: float = 0.0
    detail: str = field(default="", compare=False)

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "fail") != (self.first_mismatch is not None):
            raise ValueError("status 'fail' requires a first mismatch and vice versa")

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {
            "id": self.id,
            "order": self.order,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }

    def to_json(self):
        return json.dumps(self.to_dict())
