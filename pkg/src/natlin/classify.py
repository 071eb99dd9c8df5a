"""Which of the five solution-set regimes an equation falls in."""
from __future__ import annotations

from .core import Classification, Infeasible, LinearEquation, normalize

__all__ = ["has_sign_variation", "classify"]


def has_sign_variation(eq: LinearEquation) -> bool:
    """True iff two coefficients have opposite signs."""
    return any(a > 0 for a in eq.coeffs) and any(a < 0 for a in eq.coeffs)


def classify(eq: LinearEquation) -> Classification:
    """Classify the natural solution set of ``eq``.

    Sign variation only implies infinitely many natural solutions when an
    integer solution exists at all, so divisibility is tested first. Without
    sign variation the equation is flipped to positive coefficients and the
    sign of the right-hand side decides. ``FINITE`` may still be empty.
    """
    neq = normalize(eq)
    if isinstance(neq, Infeasible):
        return Classification.EMPTY_NO_INTEGER
    if has_sign_variation(neq.equation):
        return Classification.INFINITE
    rhs = neq.rhs if neq.coeffs[0] > 0 else -neq.rhs
    if rhs < 0:
        return Classification.EMPTY_NO_NATURAL
    if rhs == 0:
        return Classification.TRIVIAL_ONLY
    return Classification.FINITE
