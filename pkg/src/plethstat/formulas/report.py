"""Verification reports and the runner that produces them."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable, Optional


class CheckFailed(AssertionError):
    """Raised inside a check body with a short description of the first mismatch."""

    def __init__(self, witness: str):
        super().__init__(witness)
        self.witness = witness


def require(ok: bool, witness: str) -> None:
    if not ok:
        raise CheckFailed(witness)


@dataclass
class VerifyReport:
    id: str
    n: Optional[int]
    k_max: Optional[int]
    status: str
    witness: Optional[str]
    ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        out = {"id": self.id, "n": self.n, "k_max": self.k_max, "status": self.status,
               "witness": self.witness}
        if timing:
            out["ms"] = self.ms
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), separators=(",", ":"))


def run_check(check_id: str, n: Optional[int], k_max: Optional[int],
              body: Callable[[], object]) -> VerifyReport:
    """Run ``body``; a CheckFailed or any other exception turns into a failing report.

    ``body`` may also return a witness string (or None for success) instead
    of raising.
    """
    start = time.perf_counter()
    try:
        outcome = body()
        witness = outcome if isinstance(outcome, str) else None
    except CheckFailed as exc:
        witness = exc.witness
    except Exception as exc:  # a crash is a failed check, not a crashed run
        witness = f"{type(exc).__name__}: {exc}"
    ms = int(round((time.perf_counter() - start) * 1000))
    return VerifyReport(check_id, n, k_max, "fail" if witness else "pass", witness, ms)
