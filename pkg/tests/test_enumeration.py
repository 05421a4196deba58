import pytest

from stabred import canonical_form, enumerate_stable_graphs, stability_report, stable_graphs
from stabred.errors import BoundExceeded, GenusTooSmall

from .oracles import brute_stable_graphs


class TestSmallCases:
    def test_one_vertex(self):
        assert enumerate_stable_graphs(2, 1) == [b"0/1|0-0:2", b"1/1|0-0:1", b"2/1|"]

    def test_genus_two(self):
        assert len(enumerate_stable_graphs(2, 2)) == 7
        assert enumerate_stable_graphs(2, 5) == enumerate_stable_graphs(2, 2)

    @pytest.mark.parametrize("g, mv", [(2, 1), (2, 2), (2, 5), (3, 1), (3, 3), (3, 4)])
    def test_brute_oracle(self, g, mv):
        assert enumerate_stable_graphs(g, mv) == brute_stable_graphs(g, mv)


@pytest.mark.parametrize("g, count", [(2, 7), (3, 42), (4, 379)])
def test_known_totals(g, count):
    assert len(enumerate_stable_graphs(g, min(2 * g - 2, 8))) == count


def test_sorted_and_unique():
    forms = enumerate_stable_graphs(3, 8)
    assert forms == sorted(set(forms))


def test_configs_are_stable():
    for config in stable_graphs(3, 8):
        report = stability_report(config)
        assert report.stable and report.arithmetic_genus == 3
        assert canonical_form(config) in enumerate_stable_graphs(3, 8)


@pytest.mark.parametrize("g, mv", [(6, 2), (2, 9), (2, 0)])
def test_bounds(g, mv):
    with pytest.raises((BoundExceeded, ValueError)):
        enumerate_stable_graphs(g, mv)


def test_genus_too_small():
    with pytest.raises(GenusTooSmall):
        enumerate_stable_graphs(1, 3)
