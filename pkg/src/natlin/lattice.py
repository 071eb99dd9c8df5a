"""General integer solution of a normalized equation.

The solution set is ``particular + span_Z(basis)``. The basis comes from
eliminating variables left to right with extended Euclid: each step replaces
the running combination ``w`` and the next variable ``x_i`` by a new
combination ``w'`` and a free parameter ``t`` through a unimodular 2x2
substitution, so the collected basis generates the whole kernel lattice and
not a sublattice of it.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import IntegerSolutionLattice, InvalidArgument, NormalizedEquation
from .euclid import gcd_ext

__all__ = [
    "integer_general_solution",
    "evaluate_lattice",
    "left_inverse",
    "lattice_coordinates",
]


def integer_general_solution(neq: NormalizedEquation) -> IntegerSolutionLattice:
    coeffs, rhs = neq.coeffs, neq.rhs
    n = len(coeffs)
    # invariant: g * w is the sum of the terms eliminated so far, and those
    # variables equal combo_vec * w plus an integer combination of basis
    combo_vec = [0] * n
    combo_vec[0] = 1
    g = coeffs[0]
    basis: list[tuple[int, ...]] = []
    for i in range(1, n):
        a_i = coeffs[i]
        res = gcd_ext(g, a_i)
        g_new = res.g
        u, v = res.coefficients
        step = [(a_i // g_new) * e for e in combo_vec]
        step[i] = -(g // g_new)
        basis.append(tuple(step))
        combo_vec = [u * e for e in combo_vec]
        combo_vec[i] = v
        g = g_new
    if g not in (1, -1) or rhs % g:
        raise InvalidArgument(f"equation with coefficients {list(coeffs)} is not normalized")
    w = rhs // g
    particular = tuple(w * e for e in combo_vec)
    return IntegerSolutionLattice(particular, tuple(basis))


def evaluate_lattice(lat: IntegerSolutionLattice, params: Sequence[int]) -> tuple[int, ...]:
    if len(params) != len(lat.basis):
        raise InvalidArgument(f"expected {len(lat.basis)} parameters, got {len(params)}")
    x = list(lat.particular)
    for k, vec in zip(params, lat.basis):
        if k:
            for i, e in enumerate(vec):
                x[i] += k * e
    return tuple(x)


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    m = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(mat)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [e / p for e in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [e - f * pe for e, pe in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


@lru_cache(maxsize=256)
def left_inverse(lat: IntegerSolutionLattice) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer matrix ``L`` and ``den > 0`` with ``L @ B == den * I``.

    ``B`` is the n x (n-1) matrix whose columns are the basis vectors. ``L`` is
    ``den * (B^T B)^-1 B^T`` computed over the rationals.
    """
    basis = lat.basis
    m = len(basis)
    if m == 0:
        return (), 1
    gram = [[Fraction(sum(p * q for p, q in zip(bi, bj))) for bj in basis] for bi in basis]
    ginv = _invert(gram)
    n = lat.dim
    rows = [
        [sum(ginv[r][j] * basis[j][c] for j in range(m)) for c in range(n)]
        for r in range(m)
    ]
    den = 1
    for row in rows:
        for e in row:
            den = math.lcm(den, e.denominator)
    return tuple(tuple(int(e * den) for e in row) for row in rows), den


def lattice_coordinates(lat: IntegerSolutionLattice, x: Sequence[int]) -> tuple[int, ...] | None:
    """Parameters ``k`` with ``evaluate_lattice(lat, k) == x``, or None if none exist."""
    if len(x) != lat.dim:
        raise InvalidArgument(f"expected a vector of length {lat.dim}, got {len(x)}")
    diff = [xi - pi for xi, pi in zip(x, lat.particular)]
    L, den = left_inverse(lat)
    params = []
    for row in L:
        num = sum(r * d for r, d in zip(row, diff))
        if num % den:
            return None
        params.append(num // den)
    params = tuple(params)
    if evaluate_lattice(lat, params) != tuple(x):
        return None
    return params
