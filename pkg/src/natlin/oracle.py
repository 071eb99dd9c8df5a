"""Exhaustive reference solver.

Every vector of a box is substituted into the equation; nothing else is
assumed. This module deliberately imports nothing from the solving modules,
so agreement with them is independent evidence.

The scan is vectorized with numpy when every partial sum provably fits in
int64, and falls back to a pure-Python loop otherwise.
"""
from __future__ import annotations

import itertools

import numpy as np

from .core import InvalidArgument, LinearEquation, ResourceLimitError

__all__ = ["MAX_CANDIDATES", "brute_force_natural", "brute_force_integer", "count_natural"]

MAX_CANDIDATES = 10**8
_CHUNK = 1 << 22
_INT64_SAFE = 1 << 62


def _check_guard(side: int, n: int) -> None:
    if side ** n > MAX_CANDIDATES:
        raise ResourceLimitError(
            f"{side}^{n} candidates exceed the oracle guard of {MAX_CANDIDATES}"
        )


def _scan_python(eq: LinearEquation, lo: int, hi: int):
    rng = range(lo, hi + 1)
    for x in itertools.product(rng, repeat=eq.n):
        if eq.is_solution(x):
            yield x


def _scan_numpy(eq: LinearEquation, lo: int, hi: int):
    """Yield arrays of solutions, one block of the first coordinate at a time."""
    coeffs = eq.coeffs
    n = eq.n
    reach = sum(abs(a) for a in coeffs) * max(abs(lo), abs(hi)) + abs(eq.rhs)
    dtype = np.int32 if reach < 2**31 else np.int64
    vals = np.arange(lo, hi + 1, dtype=dtype)
    side = len(vals)
    tail = np.zeros((1,), dtype=dtype)
    for a in coeffs[1:]:
        tail = (tail[:, None] + a * vals[None, :]).ravel()
    block = max(1, _CHUNK // len(tail))
    for start in range(0, side, block):
        head = vals[start:start + block]
        lhs = coeffs[0] * head[:, None] + tail[None, :]
        rows, cols = np.nonzero(lhs == eq.rhs)
        if len(rows) == 0:
            continue
        out = np.empty((len(rows), n), dtype=dtype)
        out[:, 0] = head[rows]
        if n > 1:
            idx = np.unravel_index(cols, (side,) * (n - 1))
            for j, col in enumerate(idx, start=1):
                out[:, j] = vals[col]
        yield out


def _fits_int64(eq: LinearEquation, lo: int, hi: int) -> bool:
    reach = max(abs(lo), abs(hi))
    return sum(abs(a) for a in eq.coeffs) * reach + abs(eq.rhs) < _INT64_SAFE


def _solutions(eq: LinearEquation, lo: int, hi: int) -> set[tuple[int, ...]]:
    if not _fits_int64(eq, lo, hi):
        return set(_scan_python(eq, lo, hi))
    found: set[tuple[int, ...]] = set()
    for arr in _scan_numpy(eq, lo, hi):
        found.update(tuple(int(v) for v in row) for row in arr.tolist())
    return found


def brute_force_natural(eq: LinearEquation, box: int) -> set[tuple[int, ...]]:
    """All natural solutions with every component in ``[0, box]``."""
    if box < 0:
        raise InvalidArgument("box must be nonnegative")
    _check_guard(box + 1, eq.n)
    return _solutions(eq, 0, box)


def brute_force_integer(eq: LinearEquation, box: int) -> set[tuple[int, ...]]:
    """All integer solutions with every component in ``[-box, box]``."""
    if box < 0:
        raise InvalidArgument("box must be nonnegative")
    _check_guard(2 * box + 1, eq.n)
    return _solutions(eq, -box, box)


def count_natural(eq: LinearEquation, box: int) -> int:
    """``len(brute_force_natural(eq, box))`` without materializing the set."""
    if box < 0:
        raise InvalidArgument("box must be nonnegative")
    _check_guard(box + 1, eq.n)
    if not _fits_int64(eq, 0, box):
        return sum(1 for _ in _scan_python(eq, 0, box))
    return sum(len(arr) for arr in _scan_numpy(eq, 0, box))
