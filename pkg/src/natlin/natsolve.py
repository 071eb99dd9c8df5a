"""Natural-number solution sets.

Finite regime: exact enumeration inside the per-variable bounds.
Infinite regime: the integer lattice plus one nonnegativity inequality per
variable, and an explicit arithmetic progression of natural solutions.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .classify import classify, has_sign_variation
from .core import (
    Classification,
    ConstraintSystem,
    FiniteSolutionSet,
    InfiniteFamily,
    Infeasible,
    IntegerSolutionLattice,
    InvalidArgument,
    LinearEquation,
    NormalizedEquation,
    ParametricNaturalSolution,
    ResourceLimitError,
    TwoVarSolution,
    ceil_div,
    normalize,
)
from .euclid import gcd_ext
from .lattice import integer_general_solution

__all__ = [
    "DEFAULT_CAP",
    "enumerate_finite",
    "MaxCountReport",
    "max_count_check",
    "solve_ax_minus_by",
    "derive_nonneg_constraints",
    "parametric_natural_solution",
    "infinite_family",
    "iter_natural_solutions",
    "stream_natural_solutions",
]

DEFAULT_CAP = 10**7


def _positive_form(coeffs: Sequence[int], rhs: int) -> tuple[tuple[int, ...], int]:
    if all(a < 0 for a in coeffs):
        return tuple(-a for a in coeffs), -rhs
    return tuple(coeffs), rhs


def _backtrack(coeffs: Sequence[int], rhs: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # coefficients all positive; yields in lexicographic order
    n = len(coeffs)
    prefix = [0] * n

    def rec(i: int, remaining: int):
        a = coeffs[i]
        if i == n - 1:
            if remaining % a == 0:
                prefix[i] = remaining // a
                yield tuple(prefix)
            return
        for v in range(min(bounds[i], remaining // a) + 1):
            prefix[i] = v
            yield from rec(i + 1, remaining - a * v)

    yield from rec(0, rhs)


def enumerate_finite(neq: NormalizedEquation, cap: int = DEFAULT_CAP) -> FiniteSolutionSet:
    """Every natural solution of a sign-uniform equation with solvable right-hand side.

    Raises :class:`ResourceLimitError` when the candidate box ``prod(1 + d_i)``
    is larger than ``cap``.
    """
    if has_sign_variation(neq.equation):
        raise InvalidArgument("equation has sign variation; its natural solution set is infinite")
    coeffs, rhs = _positive_form(neq.coeffs, neq.rhs)
    if rhs < 0:
        raise InvalidArgument(f"right-hand side {rhs} has no natural solutions")
    bounds = tuple(rhs // a for a in coeffs)
    count_bound = math.prod(1 + d for d in bounds)
    if count_bound > cap:
        raise ResourceLimitError(
            f"enumeration box has {count_bound} candidates, above the cap of {cap}"
        )
    solutions = frozenset(_backtrack(coeffs, rhs, bounds))
    return FiniteSolutionSet(solutions, bounds, count_bound)


@dataclass(frozen=True)
class MaxCountReport:
    n: int
    rhs: int
    coeff_cap: int
    counts: dict[tuple[int, ...], int]
    ones_count: int
    max_count: int

    @property
    def ones_is_max(self) -> bool:
        return self.ones_count == self.max_count

    @property
    def maximizers(self) -> list[tuple[int, ...]]:
        return sorted(a for a, c in self.counts.items() if c == self.max_count)

    @property
    def unique(self) -> bool:
        return self.ones_is_max and len(self.maximizers) == 1


def max_count_check(n: int, b: int, coeff_cap: int) -> MaxCountReport:
    """Count natural solutions for every coefficient vector in ``[1, coeff_cap]^n``.

    Desk-scale check of whether all-unit coefficients give the most solutions
    for a fixed positive right-hand side.
    """
    if not 1 <= n <= 3:
        raise InvalidArgument("n must be in [1, 3]")
    if not 1 <= b <= 12:
        raise InvalidArgument("b must be in [1, 12]")
    if not 1 <= coeff_cap <= 5:
        raise InvalidArgument("coeff_cap must be in [1, 5]")
    counts = {}
    for a in itertools.product(range(1, coeff_cap + 1), repeat=n):
        neq = normalize(LinearEquation(a, b))
        if isinstance(neq, Infeasible):
            counts[a] = 0
        else:
            counts[a] = len(enumerate_finite(neq))
    ones = (1,) * n
    return MaxCountReport(n, b, coeff_cap, counts, counts[ones], max(counts.values()))


def solve_ax_minus_by(a: int, b: int, c: int) -> TwoVarSolution | Infeasible:
    """Natural solutions of ``a*x - b*y = c`` for ``a, b > 0``.

    ``k_min`` is the smallest integer keeping both components nonnegative:
    ``max(ceil(-x0 / b), ceil(-y0 / a))``.
    """
    if a <= 0 or b <= 0:
        raise InvalidArgument(f"a and b must be positive, got a={a}, b={b}")
    res = gcd_ext(a, b)
    g = res.g
    if c % g:
        return Infeasible(g, c)
    a, b, c = a // g, b // g, c // g
    u, v = res.coefficients
    # u*a + v*b == 1 after reduction, so x = u*c, y = -v*c solves a*x - b*y = c
    x0, y0 = u * c, -v * c
    k_min = max(ceil_div(-x0, b), ceil_div(-y0, a))
    return TwoVarSolution(x0, y0, a, b, c, k_min, g)


def derive_nonneg_constraints(lat: IntegerSolutionLattice) -> ConstraintSystem:
    rows = []
    for i, p in enumerate(lat.particular):
        rows.append((tuple(vec[i] for vec in lat.basis), p))
    return ConstraintSystem(tuple(rows))


def parametric_natural_solution(neq: NormalizedEquation) -> ParametricNaturalSolution:
    lat = integer_general_solution(neq)
    return ParametricNaturalSolution(lat, derive_nonneg_constraints(lat))


def infinite_family(neq: NormalizedEquation, particular: Sequence[int]) -> InfiniteFamily:
    """Arithmetic progression of natural solutions through ``particular``.

    Positive-coefficient positions advance by ``h1 * c_i`` and negative ones by
    ``k1 * c_i``, which keeps the left-hand side constant because
    ``h * h1 * M == k * k1 * M == P * M``.
    """
    coeffs = neq.coeffs
    if not has_sign_variation(neq.equation):
        raise InvalidArgument("an infinite family needs coefficients of both signs")
    particular = tuple(particular)
    if not neq.equation.is_solution(particular):
        raise InvalidArgument(f"{list(particular)} does not solve the equation")
    M = math.lcm(*(abs(a) for a in coeffs))
    c = tuple(M // abs(a) for a in coeffs)
    h = sum(1 for a in coeffs if a > 0)
    k = len(coeffs) - h
    P = math.lcm(h, k)
    h1, k1 = P // h, P // k
    step = tuple((h1 if a > 0 else k1) * ci for a, ci in zip(coeffs, c))
    z_min = max(0, *(ceil_div(-x, s) for x, s in zip(particular, step)))
    return InfiniteFamily(M, c, h, k, P, h1, k1, particular, step, z_min)


def _with_sum(coeffs: Sequence[int], rhs: int, total: int) -> Iterator[tuple[int, ...]]:
    """Natural solutions whose components add up to ``total``, lexicographically."""
    n = len(coeffs)
    if n == 1:
        if coeffs[0] * total == rhs:
            yield (total,)
        return
    a_p, a_q = coeffs[-2], coeffs[-1]
    # the last two components are pinned by x_p + x_q = r, a_p*x_p + a_q*x_q = q
    for head in _compositions(n - 2, total):
        r = total - sum(head)
        q = rhs - sum(a * v for a, v in zip(coeffs, head))
        if a_p == a_q:
            if a_p * r == q:
                for x_p in range(r + 1):
                    yield head + (x_p, r - x_p)
            continue
        num = q - a_q * r
        den = a_p - a_q
        if num % den == 0:
            x_p = num // den
            if 0 <= x_p <= r:
                yield head + (x_p, r - x_p)


def _compositions(m: int, total: int) -> Iterator[tuple[int, ...]]:
    # m-tuples of naturals with sum <= total, lexicographic
    if m == 0:
        yield ()
        return
    for v in range(total + 1):
        for rest in _compositions(m - 1, total - v):
            yield (v,) + rest


def _admissible_sums(coeffs: Sequence[int], rhs: int) -> tuple[int, int] | None:
    """``(start, stride)`` such that integer solutions with component sum ``s``
    can only exist for ``s`` in ``start, start + stride, ...``; None if for no ``s``.

    Subtracting ``a_1 * (sum of x) = a_1 * s`` from the equation leaves
    ``sum((a_i - a_1) * x_i) = rhs - a_1 * s``, solvable only when the gcd of
    the differences divides the right side.
    """
    a1 = coeffs[0]
    g = math.gcd(*(a - a1 for a in coeffs))
    if g == 0:
        if rhs % a1 or rhs // a1 < 0:
            return None
        return rhs // a1, 0
    d = math.gcd(a1, g)
    if rhs % d:
        return None
    stride = g // d
    start = (rhs // d) * pow(a1 // d, -1, stride) % stride if stride > 1 else 0
    return start, stride


def iter_natural_solutions(eq: LinearEquation) -> Iterator[tuple[int, ...]]:
    """Natural solutions ordered by component sum, ties broken lexicographically.

    Finite for every regime except ``INFINITE``, where it never stops.
    """
    regime = classify(eq)
    if regime.is_empty:
        return
    if regime is Classification.TRIVIAL_ONLY:
        yield (0,) * eq.n
        return
    neq = normalize(eq)
    coeffs, rhs = neq.coeffs, neq.rhs
    if regime is Classification.FINITE:
        coeffs, rhs = _positive_form(coeffs, rhs)
    sums = _admissible_sums(coeffs, rhs)
    if sums is None:
        return
    start, stride = sums
    if stride == 0:
        totals = [start]
    elif regime is Classification.FINITE:
        totals = range(start, rhs // min(coeffs) + 1, stride)
    else:
        totals = itertools.count(start, stride)
    for s in totals:
        yield from _with_sum(coeffs, rhs, s)


def stream_natural_solutions(eq: LinearEquation, limit: int) -> list[tuple[int, ...]]:
    if limit < 1:
        raise InvalidArgument("limit must be at least 1")
    return list(itertools.islice(iter_natural_solutions(eq), limit))
