import itertools

import pytest
from hypothesis import given, strategies as st

from natlin import Infeasible, InvalidArgument, LinearEquation, NormalizedEquation, normalize
from natlin.core import ceil_div


def test_equation_defaults_and_validation():
    eq = LinearEquation((3, -7, 2), -18)
    assert eq.var_names == ("x1", "x2", "x3")
    assert eq.n == 3
    assert eq.lhs((0, 4, 5)) == -18
    assert eq.is_natural_solution((0, 4, 5))
    assert eq.is_solution((-1, -1, -11))
    assert not eq.is_natural_solution((-1, -1, -11))

    with pytest.raises(InvalidArgument):
        LinearEquation((1, 0), 3)
    with pytest.raises(InvalidArgument):
        LinearEquation((), 3)
    with pytest.raises(InvalidArgument):
        LinearEquation((1, 2), 3, ("x", "x"))
    with pytest.raises(InvalidArgument):
        LinearEquation((1, 2), 3, ("x",))
    with pytest.raises(InvalidArgument):
        LinearEquation((1.5,), 3)


def test_normalize_examples():
    neq = normalize(LinearEquation((3, -7, 2), -18))
    assert neq.coeffs == (3, -7, 2) and neq.rhs == -18 and neq.original_gcd == 1

    neq = normalize(LinearEquation((2, 4), 6))
    assert neq.coeffs == (1, 2) and neq.rhs == 3 and neq.original_gcd == 2

    res = normalize(LinearEquation((2, 4), 5))
    assert isinstance(res, Infeasible)
    assert res.gcd == 2


def test_normalized_equation_rejects_common_factor():
    with pytest.raises(InvalidArgument):
        NormalizedEquation(LinearEquation((2, 4), 6), 1)


nonzero = st.integers(-12, 12).filter(bool)


@given(st.lists(nonzero, min_size=1, max_size=3), st.integers(-20, 20))
def test_normalize_preserves_solution_set(coeffs, rhs):
    eq = LinearEquation(tuple(coeffs), rhs)
    neq = normalize(eq)
    for x in itertools.product(range(-4, 5), repeat=eq.n):
        if isinstance(neq, Infeasible):
            assert not eq.is_solution(x)
        else:
            assert eq.is_solution(x) == neq.equation.is_solution(x)


@given(st.integers(), st.integers().filter(bool))
def test_ceil_div(num, den):
    q = ceil_div(num, den)
    # smallest integer q with q >= num/den
    if den > 0:
        assert q * den >= num > (q - 1) * den
    else:
        assert q * den <= num < (q - 1) * den


def test_negated_and_permuted():
    eq = LinearEquation((3, -7, 2), -18, ("x", "y", "z"))
    assert eq.negated() == LinearEquation((-3, 7, -2), 18, ("x", "y", "z"))
    assert eq.permuted((2, 0, 1)) == LinearEquation((2, 3, -7), -18, ("z", "x", "y"))
    with pytest.raises(InvalidArgument):
        eq.permuted((0, 0, 1))
