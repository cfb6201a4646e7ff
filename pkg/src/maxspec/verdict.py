"""Three-valued outcomes for hypothesis-gated checks."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    HYPOTHESES_NOT_MET = "hypotheses-not-met"


@dataclass(frozen=True)
class CheckReport:
    verdict: Verdict
    failed_hypotheses: tuple[str, ...] = ()
    witness: object = None
    detail: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        if self.verdict is Verdict.HYPOTHESES_NOT_MET:
            raise TypeError("a check whose hypotheses failed has no truth value; inspect .verdict")
        return self.verdict is Verdict.HOLDS

    @classmethod
    def from_bool(cls, ok: bool, witness=None, **detail) -> "CheckReport":
        return cls(Verdict.HOLDS if ok else Verdict.FAILS, (), witness, detail)

    @classmethod
    def not_applicable(cls, *failed: str) -> "CheckReport":
        return cls(Verdict.HYPOTHESES_NOT_MET, tuple(failed))
