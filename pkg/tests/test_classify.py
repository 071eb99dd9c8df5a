import pytest
from hypothesis import given, strategies as st

from natlin import Classification as C, LinearEquation, classify, has_sign_variation
from natlin.oracle import count_natural

from _corpus import corpus


@pytest.mark.parametrize(
    "coeffs, expected", [((3, -7, 2), True), ((2, 3), False), ((-1, -2), False), ((5,), False)]
)
def test_sign_variation(coeffs, expected):
    assert has_sign_variation(LinearEquation(coeffs, 0)) is expected


@pytest.mark.parametrize(
    "coeffs, rhs, expected",
    [
        ((3, -7, 2), -18, C.INFINITE),
        ((2, 4), 5, C.EMPTY_NO_INTEGER),
        ((1, 1), 0, C.TRIVIAL_ONLY),
        ((2, 3), 12, C.FINITE),
        ((3, 5), 1, C.FINITE),
        ((2, 3), -1, C.EMPTY_NO_NATURAL),
        ((-2, -3), 1, C.EMPTY_NO_NATURAL),
        ((-2, -3), -12, C.FINITE),
        # sign variation without an integer solution is empty, not infinite
        ((2, -4), 1, C.EMPTY_NO_INTEGER),
    ],
)
def test_classify_examples(coeffs, rhs, expected):
    assert classify(LinearEquation(coeffs, rhs)) is expected


nonzero = st.integers(-9, 9).filter(bool)


@given(st.lists(nonzero, min_size=1, max_size=5), st.integers(-30, 30), st.randoms())
def test_classify_invariances(coeffs, rhs, rnd):
    eq = LinearEquation(tuple(coeffs), rhs)
    order = list(range(eq.n))
    rnd.shuffle(order)
    c = classify(eq)
    assert classify(eq.negated()) is c
    assert classify(eq.permuted(order)) is c


def test_classify_matches_box_growth_sample():
    # the full 500-equation run lives in the acceptance suite
    for eq in corpus(101, 60, max_n=3):
        c = classify(eq)
        counts = [count_natural(eq, B) for B in (20, 40, 80)]
        if c is C.INFINITE:
            assert counts[0] < counts[1] < counts[2]
        elif c is C.TRIVIAL_ONLY:
            assert counts == [1, 1, 1]
        elif c.is_empty:
            assert counts == [0, 0, 0]
        else:
            b0 = max(abs(eq.rhs) // abs(a) for a in eq.coeffs) + 1
            assert count_natural(eq, b0) == count_natural(eq, 2 * b0)
