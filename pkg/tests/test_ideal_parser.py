import pytest

from algebra.errors import VariableIndexError
from algebra.ideal import MonomialIdeal
from helpers import STABIND_TEXT, path_ideal, stabind_ideal
from utils.ideal_parser import IdealSyntaxError, parse_ideal


def test_indexed_variables():
    ideal, names = parse_ideal("x1*x2, x2*x3")
    assert ideal == path_ideal()
    assert names == ["x1", "x2", "x3"]


def test_stabind_example_text():
    assert parse_ideal(STABIND_TEXT).ideal == stabind_ideal()


def test_redundant_generator_is_dropped():
    assert parse_ideal("x1^2, x1").ideal == MonomialIdeal(1, [(1,)])


def test_letters_numbered_by_first_appearance():
    ideal, names = parse_ideal("Y*X, Y*Z")
    assert names == ["Y", "X", "Z"]
    assert ideal == MonomialIdeal(3, [(1, 1, 0), (1, 0, 1)])


def test_repeated_factors_add_up_and_whitespace_is_ignored():
    assert parse_ideal("  x1 * x1^2 ,x2 ").ideal == MonomialIdeal(2, [(3, 0), (0, 1)])


def test_vars_override():
    ideal, names = parse_ideal("x1^2", vars=3)
    assert ideal.r == 3 and names == ["x1", "x2", "x3"]
    with pytest.raises(VariableIndexError):
        parse_ideal("x1*x4", vars=2)


@pytest.mark.parametrize(
    "text, column",
    [
        ("", 0),
        ("x1^0", 3),
        ("x1 + x2", 3),
        ("x1*", 3),
        ("x1^", 3),
        ("x1, y", 4),
        ("x0", 0),
        ("x1 x2", 3),
    ],
)
def test_syntax_errors_carry_a_column(text, column):
    with pytest.raises(IdealSyntaxError) as info:
        parse_ideal(text)
    assert info.value.column == column
