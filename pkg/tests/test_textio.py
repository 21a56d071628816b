from fractions import Fraction

import pytest

from fintop.catalog import three_point_catalog
from fintop.errors import InconsistentBase, NotClosedUnderUnion, ParseError
from fintop.textio import (
    format_space,
    parse_cuts,
    parse_map,
    parse_pwl,
    parse_set,
    parse_space,
    parse_spaces,
)

TAU3_OPENS = """\
# tau3
points: x y z
opens: {x y z} {} {x} {y} {x y} {x}
"""


def test_parse_opens(tau):
    assert parse_space(TAU3_OPENS) == tau["tau3"]


def test_parse_minbase(tau):
    text = "points: x y z\nminbase: x:{x} y:{y} z:{x y z}\n"
    assert parse_space(text) == tau["tau3"]


def test_parse_order(tau):
    assert parse_space("points: x y z\norder: z<x z<y\n") == tau["tau3"]
    s = parse_space("points: x y z\norder:\n")
    assert len(s.opens) == 8


@pytest.mark.parametrize("style", ["opens", "minbase", "order"])
def test_format_round_trip(style):
    for name, s in three_point_catalog().items():
        assert parse_space(format_space(s, style)) == s, name


def test_multiple_blocks(tau):
    text = format_space(tau["tau1"]) + "\n# next\n" + format_space(tau["tau9"], "minbase")
    assert parse_spaces(text) == [tau["tau1"], tau["tau9"]]


@pytest.mark.parametrize("text, line, column", [
    ("opens: {}\n", 1, 1),
    ("points: x y\nopens: {} {x} {x y\n", 2, 19),
    ("points: x y\nopens: {} {q} {x y}\n", 2, 12),
    ("points: x x\nopens: {}\n", 1, 11),
    ("points: x y\nminbase: x:{x}\n", 2, 9),
    ("points: x y\nfoo: {}\n", 2, 1),
    ("points: x y\n", 2, 1),
    ("points: x $\n", 1, 11),
    ("points: a b\norder: a<\n", 2, 10),
])
def test_parse_errors_report_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_spaces(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_domain_errors_pass_through():
    with pytest.raises(NotClosedUnderUnion):
        parse_space("points: x y z\nopens: {} {x} {y} {x y z}\n")
    with pytest.raises(InconsistentBase):
        parse_space("points: x y z\nminbase: x:{x} y:{y z} z:{x z}\n")


def test_set_and_map_literals(tau):
    s = tau["tau3"]
    assert parse_set(s, "{y z}") == 0b110
    assert parse_set(s, "{}") == 0
    with pytest.raises(ParseError):
        parse_set(s, "{y w}")
    assert parse_map(s, tau["tau5"], "x:x y:z z:y") == [0, 2, 1]
    assert parse_map(s, s, "x:{x y} y:{} z:{z}", multi=True) == [3, 0, 4]
    with pytest.raises(ParseError):
        parse_map(s, s, "x:x y:y")


def test_rational_literals():
    assert parse_cuts("0,1/2,1") == [0, Fraction(1, 2), 1]
    assert parse_pwl("0:3/4 1/4:1/4 1:1/2") == [(0, Fraction(3, 4)), (Fraction(1, 4), Fraction(1, 4)),
                                               (1, Fraction(1, 2))]
    with pytest.raises(ParseError):
        parse_cuts("0,1/0,1")
    with pytest.raises(ParseError):
        parse_pwl("0-1")
    with pytest.raises(ParseError):
        parse_cuts("0,0.5,1")
