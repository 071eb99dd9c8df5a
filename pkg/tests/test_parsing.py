import pytest
from hypothesis import given, strategies as st

from natlin import LinearEquation, ParseError, parse_equation, render_equation
from natlin.parsing import render_affine


@pytest.mark.parametrize(
    "text, coeffs, rhs, names",
    [
        ("3x - 7y + 2z = -18", (3, -7, 2), -18, ("x", "y", "z")),
        ("3x − 7y + 2z = −18", (3, -7, 2), -18, ("x", "y", "z")),
        ("x + y = 2", (1, 1), 2, ("x", "y")),
        ("-x+y=0", (-1, 1), 0, ("x", "y")),
        ("  2 a1 +3b2c= +7 ", (2, 3), 7, ("a1", "b2c")),
        ("x + 2y + 3x = 4", (4, 2), 4, ("x", "y")),
        ("123456789012345678901234567890q = 0", (123456789012345678901234567890,), 0, ("q",)),
    ],
)
def test_parse(text, coeffs, rhs, names):
    parsed = parse_equation(text)
    assert parsed.equation == LinearEquation(coeffs, rhs, names)
    assert parsed.source_text == text


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("2x - 2x + y = 1", "variable x has zero merged coefficient"),
        ("= 4", "empty left-hand side"),
        ("x + y", "missing '='"),
        ("x + = 3", "expected a variable name"),
        ("x y = 3", "expected '+' or '-'"),
        ("x = y", "expected an integer right-hand side"),
        ("x = 3 3", "after the right-hand side"),
        ("x * 2 = 3", "unexpected character '*' at position 2"),
        ("0x = 3", "zero merged coefficient"),
        ("", "expected a variable name"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_equation(text)
    assert fragment in str(err.value)


def test_error_position():
    with pytest.raises(ParseError) as err:
        parse_equation("3x - 7y + = 1")
    assert err.value.position == 10


def test_render():
    eq = LinearEquation((-1, 7, -1, 1), -3, ("x", "y", "z", "w"))
    assert render_equation(eq) == "-x + 7y - z + w = -3"
    assert render_affine([2, -1, 0], 3, ["k1", "k2", "k3"]) == "2k1 - k2 + 3"
    assert render_affine([0, 0], -4, ["k1", "k2"]) == "-4"
    assert render_affine([0], 0, ["k"]) == "0"
    assert render_affine([-3], -4, ["t"]) == "-3t - 4"


names = st.from_regex(r"[A-Za-z][A-Za-z0-9]{0,3}", fullmatch=True)


@given(
    st.lists(st.tuples(names, st.integers(-10**12, 10**12).filter(bool)), min_size=1, max_size=6,
             unique_by=lambda t: t[0]),
    st.integers(-10**12, 10**12),
)
def test_round_trip(terms, rhs):
    eq = LinearEquation(tuple(c for _, c in terms), rhs, tuple(n for n, _ in terms))
    assert parse_equation(render_equation(eq)).equation == eq
