"""Real Gamma and Gauss hypergeometric kernels."""

from src.kernels.gamma import (
    cos_pi,
    gamma_ratio,
    gamma_real,
    is_nonpositive_integer,
    ln_abs_gamma,
    ln_gamma_pos,
    rgamma,
    sin_pi,
)
from src.kernels.hypergeometric import hyp2f1_real, hyp2f1_regularized
from src.kernels.types import EvalStatus, ScalarEval

__all__ = [
    "EvalStatus",
    "ScalarEval",
    "cos_pi",
    "gamma_ratio",
    "gamma_real",
    "hyp2f1_real",
    "hyp2f1_regularized",
    "is_nonpositive_integer",
    "ln_abs_gamma",
    "ln_gamma_pos",
    "rgamma",
    "sin_pi",
]
