"""Extended Euclid for two and for many integers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import InvalidArgument

__all__ = ["BezoutResult", "gcd_ext", "multi_gcd_bezout"]


@dataclass(frozen=True)
class BezoutResult:
    """``g > 0`` together with ``coefficients`` such that ``dot(coefficients, inputs) == g``."""

    g: int
    coefficients: tuple[int, ...]


def gcd_ext(a: int, b: int) -> BezoutResult:
    if a == 0 and b == 0:
        raise InvalidArgument("gcd_ext(0, 0) is undefined")
    # iterate on |a|, |b|; signs are folded back into the coefficients
    r0, r1 = abs(a), abs(b)
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u = s0 if a >= 0 else -s0
    v = t0 if b >= 0 else -t0
    return BezoutResult(r0, (u, v))


def multi_gcd_bezout(a: Sequence[int]) -> BezoutResult:
    """Bezout vector of ``a`` built by folding :func:`gcd_ext` left to right."""
    if len(a) == 0:
        raise InvalidArgument("multi_gcd_bezout needs at least one entry")
    if any(x == 0 for x in a):
        raise InvalidArgument(f"zero entry in {list(a)}")
    g = abs(a[0])
    u = [1 if a[0] > 0 else -1]
    for x in a[1:]:
        step = gcd_ext(g, x)
        s, t = step.coefficients
        u = [s * ui for ui in u]
        u.append(t)
        g = step.g
    return BezoutResult(g, tuple(u))
