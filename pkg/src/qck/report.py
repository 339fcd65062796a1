"""Structured outcomes of identity, congruence, and positivity checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .exactalg import MultiLaurentPoly


@dataclass
class IdentityCase:
    """One configured check: a name plus its integer parameters and symbolic variables."""

    name: str
    meta_params: dict
    free_vars: tuple = ()

    def sort_key(self):
        return (self.name, tuple(sorted(self.meta_params.items())))

    def label(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in sorted(self.meta_params.items()))
        return f"{self.name}({params})" if params else self.name


@dataclass
class VerificationReport:
    """Outcome of one check; ``passed`` holds exactly when ``difference`` is zero."""

    case: IdentityCase
    passed: bool
    difference: MultiLaurentPoly
    elapsed: float = field(compare=False, default=0.0)

    def to_dict(self) -> dict:
        # elapsed is intentionally omitted: reports must be byte-identical
        # across reruns and across parallel/serial execution.
        return {
            "name": self.case.name,
            "params": dict(sorted(self.case.meta_params.items())),
            "free_vars": list(self.case.free_vars),
            "passed": self.passed,
            "difference": str(self.difference),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        case = IdentityCase(d["name"], dict(d["params"]), tuple(d["free_vars"]))
        return cls(case, d["passed"], MultiLaurentPoly.from_canonical(d["difference"]))


def make_report(name: str, params: dict, free_vars, difference: MultiLaurentPoly,
                started: float) -> VerificationReport:
    """Package a computed difference polynomial into a report."""
    case = IdentityCase(name, dict(params), tuple(free_vars))
    return VerificationReport(case, difference.is_zero(), difference,
                              time.perf_counter() - started)
