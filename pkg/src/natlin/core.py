"""Shared value types for linear equations over the naturals.

All numbers are plain Python ``int``, so every computation in the package is
exact regardless of magnitude.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

__all__ = [
    "NatlinError",
    "InvalidArgument",
    "ResourceLimitError",
    "LinearEquation",
    "NormalizedEquation",
    "Infeasible",
    "Classification",
    "IntegerSolutionLattice",
    "ConstraintSystem",
    "ParametricNaturalSolution",
    "InfiniteFamily",
    "FiniteSolutionSet",
    "TwoVarSolution",
    "normalize",
    "ceil_div",
]


class NatlinError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgument(NatlinError, ValueError):
    """A precondition of an operation was violated."""


class ResourceLimitError(NatlinError):
    """An operation would exceed its configured work cap."""


def ceil_div(num: int, den: int) -> int:
    """Exact ceiling of ``num / den`` for integers, ``den != 0``."""
    return -((-num) // den)


def _as_int_tuple(values: Sequence[int], what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidArgument(f"{what} must contain integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class LinearEquation:
    """``sum(coeffs[i] * x[i]) == rhs`` with every coefficient nonzero.

    ``var_names`` defaults to ``x1 .. xn``.
    """

    coeffs: tuple[int, ...]
    rhs: int
    var_names: tuple[str, ...] = ()

    def __post_init__(self):
        coeffs = _as_int_tuple(self.coeffs, "coeffs")
        if isinstance(self.rhs, bool) or not isinstance(self.rhs, int):
            raise InvalidArgument(f"rhs must be an integer, got {self.rhs!r}")
        if not coeffs:
            raise InvalidArgument("an equation needs at least one variable")
        if any(a == 0 for a in coeffs):
            raise InvalidArgument(f"zero coefficient in {list(coeffs)}")
        names = tuple(self.var_names) or tuple(f"x{i + 1}" for i in range(len(coeffs)))
        if len(names) != len(coeffs):
            raise InvalidArgument(
                f"{len(names)} variable names for {len(coeffs)} coefficients"
            )
        if len(set(names)) != len(names):
            raise InvalidArgument(f"duplicate variable names in {list(names)}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", int(self.rhs))
        object.__setattr__(self, "var_names", names)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def lhs(self, x: Sequence[int]) -> int:
        if len(x) != self.n:
            raise InvalidArgument(f"expected a vector of length {self.n}, got {len(x)}")
        return sum(a * v for a, v in zip(self.coeffs, x))

    def is_solution(self, x: Sequence[int]) -> bool:
        return self.lhs(x) == self.rhs

    def is_natural_solution(self, x: Sequence[int]) -> bool:
        return all(v >= 0 for v in x) and self.is_solution(x)

    def gcd(self) -> int:
        return math.gcd(*self.coeffs)

    def negated(self) -> LinearEquation:
        return LinearEquation(tuple(-a for a in self.coeffs), -self.rhs, self.var_names)

    def permuted(self, order: Sequence[int]) -> LinearEquation:
        """Reorder variables so that new position ``i`` holds old ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise InvalidArgument(f"{list(order)} is not a permutation of range({self.n})")
        return LinearEquation(
            tuple(self.coeffs[i] for i in order),
            self.rhs,
            tuple(self.var_names[i] for i in order),
        )


@dataclass(frozen=True)
class NormalizedEquation:
    """An equation divided through by the gcd ``original_gcd`` of its coefficients."""

    equation: LinearEquation
    original_gcd: int

    def __post_init__(self):
        if self.original_gcd <= 0:
            raise InvalidArgument("original_gcd must be positive")
        if self.equation.gcd() != 1:
            raise InvalidArgument(f"coefficients {list(self.equation.coeffs)} are not coprime")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.equation.coeffs

    @property
    def rhs(self) -> int:
        return self.equation.rhs

    @property
    def n(self) -> int:
        return self.equation.n


@dataclass(frozen=True)
class Infeasible:
    """Report that an equation has no integer solution at all.

    This is a normal return value, not an error.
    """

    gcd: int
    rhs: int

    @property
    def reason(self) -> str:
        return f"gcd {self.gcd} of the coefficients does not divide {self.rhs}"


def normalize(eq: LinearEquation) -> NormalizedEquation | Infeasible:
    d = eq.gcd()
    if eq.rhs % d:
        return Infeasible(d, eq.rhs)
    reduced = LinearEquation(tuple(a // d for a in eq.coeffs), eq.rhs // d, eq.var_names)
    return NormalizedEquation(reduced, d)


class Classification(enum.Enum):
    EMPTY_NO_INTEGER = "empty_no_integer"
    EMPTY_NO_NATURAL = "empty_no_natural"
    TRIVIAL_ONLY = "trivial_only"
    FINITE = "finite"
    INFINITE = "infinite"

    @property
    def is_empty(self) -> bool:
        return self in (Classification.EMPTY_NO_INTEGER, Classification.EMPTY_NO_NATURAL)


@dataclass(frozen=True)
class IntegerSolutionLattice:
    """Integer solutions as ``particular + sum(k[j] * basis[j])`` for integer ``k``."""

    particular: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "particular", _as_int_tuple(self.particular, "particular"))
        basis = tuple(_as_int_tuple(v, "basis vector") for v in self.basis)
        n = len(self.particular)
        if len(basis) != n - 1 or any(len(v) != n for v in basis):
            raise InvalidArgument(f"a lattice in dimension {n} needs {n - 1} basis vectors of length {n}")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return len(self.particular)


@dataclass(frozen=True)
class ConstraintSystem:
    """Inequalities ``dot(coeffs, k) + constant >= 0``, one per equation variable."""

    inequalities: tuple[tuple[tuple[int, ...], int], ...]

    def satisfied_by(self, params: Sequence[int]) -> bool:
        return all(
            sum(c * k for c, k in zip(coeffs, params)) + const >= 0
            for coeffs, const in self.inequalities
        )

    def __len__(self):
        return len(self.inequalities)


@dataclass(frozen=True)
class ParametricNaturalSolution:
    lattice: IntegerSolutionLattice
    constraints: ConstraintSystem


@dataclass(frozen=True)
class InfiniteFamily:
    """Natural solutions ``base + z * step`` for every integer ``z >= z_min``.

    ``M`` is the lcm of the absolute coefficients and ``c[i] = M / |a_i|``;
    ``h`` and ``k`` count positive and negative coefficients, ``P = lcm(h, k)``,
    ``h1 = P / h`` and ``k1 = P / k``.
    """

    M: int
    c: tuple[int, ...]
    h: int
    k: int
    P: int
    h1: int
    k1: int
    base: tuple[int, ...]
    step: tuple[int, ...]
    z_min: int

    def at(self, z: int) -> tuple[int, ...]:
        return tuple(b + z * s for b, s in zip(self.base, self.step))


@dataclass(frozen=True)
class FiniteSolutionSet:
    solutions: frozenset[tuple[int, ...]]
    per_var_bounds: tuple[int, ...]
    count_bound: int

    def sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.solutions, key=lambda x: (sum(x), x))

    def __len__(self):
        return len(self.solutions)


@dataclass(frozen=True)
class TwoVarSolution:
    """Natural solutions of ``a*x - b*y = c`` as ``(b*k + x0, a*k + y0)``, ``k >= k_min``.

    ``a``, ``b`` and ``c`` are already divided by their common gcd, recorded in ``gcd``.
    """

    x0: int
    y0: int
    a: int
    b: int
    c: int
    k_min: int
    gcd: int = field(default=1)

    def at(self, k: int) -> tuple[int, int]:
        return self.b * k + self.x0, self.a * k + self.y0
