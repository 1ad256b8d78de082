"""Tanh-sinh quadrature and the singular Gegenbauer integrals built on it."""

from src.quadrature.tanh_sinh import QuadResult, QuadStatus, tanh_sinh

__all__ = ["QuadResult", "QuadStatus", "tanh_sinh"]
