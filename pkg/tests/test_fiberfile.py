import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabred import DescentData, Kind, dumps_descent, dumps_fiber, parse_descent, parse_fiber
from stabred.errors import ParseError

from .conftest import random_reduced_configs


class TestParseFiber:
    def test_hyperelliptic_example(self, fiber_file):
        config = fiber_file("hyperelliptic.fiber")
        assert config.kind is Kind.NORMAL_CROSSINGS
        assert len(config.components) == 7
        assert config.declared_genus == 2
        assert config.component("C0").multiplicity == 2

    def test_comments_and_blank_lines(self):
        text = "# head\n\nfiber kind=stable   # trailing\ncomponent A genus=2 mult=1\n"
        assert parse_fiber(text).ids == ["A"]

    @pytest.mark.parametrize(
        "text, line",
        [
            ("fiber kind=nc\ncomponent C0 genus=0 mult=1\ncomponent C0 genus=1 mult=1\n", 3),
            ("fiber kind=nc\ncomponent C0 genus=0 mult=1\nnode C0 C9\n", 3),
            ("fiber kind=nc\ncomponent C0 genus=x mult=1\n", 2),
            ("fiber kind=nc\ncomponent C0 genus=-1 mult=1\n", 2),
            ("fiber kind=nc\ncomponent C0 genus=0 mult=0\n", 2),
            ("fiber kind=nc\ncomponent C0 mult=1 genus=0\n", 2),
            ("fiber kind=nc\nedge C0 C1\n", 2),
            ("component C0 genus=0 mult=1\n", 1),
            ("fiber kind=weird\n", 1),
            ("\n\nfiber kind=nc\nfiber kind=nc\n", 4),
            ("fiber kind=nc\ncomponent C/0 genus=0 mult=1\n", 2),
            ("", 1),
        ],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_fiber(text)
        assert info.value.line == line
        assert f"line {line}" in str(info.value)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_fiber_roundtrip(seed):
    (config,) = random_reduced_configs(1, seed=seed)
    text = dumps_fiber(config)
    again = parse_fiber(text)
    assert again == config
    assert dumps_fiber(again) == text


class TestDescentFile:
    def test_roundtrip(self):
        descent = DescentData(4, {"E": (2, 2)}, {1: ((0, 1), (1, 0))})
        text = dumps_descent(descent)
        assert text == "descent N=4\ncover E piece degree=2\ncover E piece degree=2\nmatch 1 0 0 1\nmatch 1 1 1 0\n"
        assert parse_descent(text) == descent

    def test_defaults(self):
        assert parse_descent("descent N=2\n") == DescentData(2)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("cover E piece degree=1\n", 1),
            ("descent N=0\n", 1),
            ("descent N=2\ncover E degree=1\n", 2),
            ("descent N=2\nmatch 0 0 0\n", 2),
            ("descent N=2\nmatch 0 0 0 0\nmatch 0 0 1 1\n", 3),
            ("descent N=2\nmatch 0 1 0 0\n", 2),
            ("descent N=2\nsheet E\n", 2),
        ],
    )
    def test_errors(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_descent(text)
        assert info.value.line == line
