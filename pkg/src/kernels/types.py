"""Result types for scalar special-function kernels."""

import math
from dataclasses import dataclass
from enum import StrEnum


class EvalStatus(StrEnum):
    """Outcome of a scalar evaluation."""

    OK = "ok"
    POLE = "pole"
    OVERFLOW = "overflow"
    NOT_CONVERGED = "not-converged"


@dataclass(frozen=True, slots=True)
class ScalarEval:
    """A real value together with how its evaluation went."""

    value: float
    status: EvalStatus = EvalStatus.OK

    @property
    def ok(self) -> bool:
        return self.status is EvalStatus.OK and math.isfinite(self.value)

    @classmethod
    def pole(cls) -> "ScalarEval":
        return cls(math.nan, EvalStatus.POLE)

    @classmethod
    def overflow(cls, sign: float = 1.0) -> "ScalarEval":
        return cls(math.copysign(math.inf, sign), EvalStatus.OVERFLOW)
