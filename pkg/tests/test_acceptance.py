"""Acceptance criteria, one test each. Every test prints a PASS/FAIL line."""

import random
import time
from contextlib import contextmanager
from math import gcd, lcm

import pytest

from stabred import (
    Kind,
    arithmetic_genus,
    canonical_form,
    component_invariants,
    enumerate_stable_graphs,
    genus_formulas,
    hilbert_polynomial,
    node_base_change,
    normalization_witness,
    reduce_fiber,
    search_descent,
    stabilize,
    stable_graphs,
    trivial_descent,
)
from stabred.basechange import cover_pieces
from stabred.cli import main
from stabred.stabilize import random_order_chooser

from .conftest import FIBERS, hyperelliptic, random_reduced_configs
from .oracles import brute_stable_graphs
from .test_cli import DISCONNECTING_DESCENT, DOUBLE_BANANA


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def check(number, title, seconds=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            if seconds is not None:
                assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.2f}s)")

    return check


def test_1_numerology(criterion):
    with criterion(1, "numerology closed forms for g=2..50", seconds=1):
        for g in range(2, 51):
            rec = genus_formulas(g)
            assert rec.moduli_dimension == 3 * g - 3
            assert rec.canonical_degree == 2 * g - 2
            assert rec.tricanonical_dimension == 5 * g - 5
            assert rec.embedding_target == 5 * g - 6
            assert rec.hurwitz_bound == 42 * (2 * g - 2)
            assert rec.severi_min_degree == g + 1
            assert rec.tricanonical_very_ample is True
            for n in range(1, 11):
                assert hilbert_polynomial(g, n) == (6 * n - 1) * (g - 1)
            assert hilbert_polynomial(g, 1) == 5 * g - 5


def test_2_local_models(criterion):
    with criterion(2, "local node base change and normalization witness", seconds=1):
        for a in range(1, 13):
            for b in range(1, 13):
                m = lcm(a, b)
                for k in range(1, 7):
                    r = node_base_change(a, b, k * m)
                    assert r.branch_count == gcd(a, b)
                    assert r.chain_length == k * m // m - 1
                assert normalization_witness(a, b).injective == (gcd(a, b) == 1)


def test_3_genus_conservation(criterion):
    with criterion(3, "p_a conserved through base change and stabilize (1000 configs x 3 N)", seconds=30):
        configs = random_reduced_configs(1000, seed=2024, genera=(2, 3, 4), max_moves=5)
        checked = 0
        for config in configs:
            pa = arithmetic_genus(config)
            for N in (2, 3, 4):
                result = reduce_fiber(config, descent=trivial_descent(config, N))
                assert [g for _, g in result.genus_audit] == [pa, pa, pa]
                checked += 1
        assert len({canonical_form(c, max_components=None) for c in configs}) > 100
        assert checked == 3000


def test_4_roundtrip(criterion):
    with criterion(4, "stabilize(base_change(S)) == S for genus 2, 3 stable graphs", seconds=30):
        graphs = [s for g in (2, 3) for s in stable_graphs(g, 6)]
        assert len(graphs) == 7 + 42
        for s in graphs:
            form = canonical_form(s)
            for N in range(2, 6):
                result = reduce_fiber(s, descent=trivial_descent(s, N))
                assert canonical_form(result.final) == form


def test_5_dualizing_degree_sum(criterion):
    with criterion(5, "sum of dualizing degrees is 2 p_a - 2 on stable outputs"):
        outputs = [s for g in (2, 3, 4) for s in stable_graphs(g, 8)]
        outputs += [stabilize(c)[0] for c in random_reduced_configs(200, seed=5)]
        outputs.append(reduce_fiber(hyperelliptic()).final)
        for out in outputs:
            assert out.kind is Kind.STABLE
            pa = arithmetic_genus(out)
            inv = component_invariants(out)
            assert sum(2 * c.genus - 2 + out.valence(c.id) for c in out.components) == 2 * pa - 2
            assert sum(v.dualizing_degree for v in inv.values()) == genus_formulas(pa).canonical_degree


def test_6_hyperelliptic(criterion):
    with criterion(6, "hyperelliptic fiber reduces to one smooth genus-2 curve", seconds=1):
        config = hyperelliptic()
        (descent,) = search_descent(config, 2, max_results=8)
        (center,) = cover_pieces(config, descent)["C0"]
        # 2g' - 2 = 2 * (-2) + 6 * 1
        assert 2 * center.genus - 2 == 2 * (-2) + 6 * 1
        result = reduce_fiber(config, N=2)
        final = result.final
        assert [(c.genus, c.multiplicity) for c in final.components] == [(2, 1)]
        assert not final.nodes
        assert result.stability.stable
        assert [g for _, g in result.genus_audit] == [2, 2, 2]


def test_7_enumerator_oracle(criterion):
    with criterion(7, "enumerate_stable_graphs(2, 5) matches brute force", seconds=10):
        produced = enumerate_stable_graphs(2, 5)
        oracle = brute_stable_graphs(2, 5)
        assert len(produced) == 7
        assert produced == oracle


def test_8_order_independence(criterion):
    with criterion(8, "100 configs x 100 contraction orders agree", seconds=60):
        rng = random.Random(8)
        configs = random_reduced_configs(100, seed=88, max_moves=7)
        for config in configs:
            reference = canonical_form(stabilize(config)[0])
            for _ in range(100):
                chooser = random_order_chooser(random.Random(rng.getrandbits(32)))
                assert canonical_form(stabilize(config, chooser)[0]) == reference


def test_9_error_taxonomy(criterion, capsys, tmp_path):
    with criterion(9, "exit codes for Zariski, genus failure and malformed files"):
        assert main(["reduce", str(FIBERS / "isolated.fiber")]) == 2
        err = capsys.readouterr().err
        assert "ZariskiViolation" in err and "Zariski's main theorem" in err

        fiber_path = tmp_path / "banana.fiber"
        fiber_path.write_text(DOUBLE_BANANA)
        descent_path = tmp_path / "bad.descent"
        descent_path.write_text(DISCONNECTING_DESCENT)
        assert main(["reduce", str(fiber_path), "--descent", str(descent_path)]) == 2
        assert "GenusNotConserved" in capsys.readouterr().err

        bad = tmp_path / "bad.fiber"
        bad.write_text("fiber kind=nc\ncomponent C0 genus=0 mult=2\ncomponent C0 genus=0 mult=1\n")
        assert main(["validate", str(bad)]) == 1
        assert "line 3" in capsys.readouterr().err
        bad.write_text("fiber kind=nc\ncomponent C0 genus=zero mult=1\n")
        assert main(["reduce", str(bad)]) == 1
        assert "line 2" in capsys.readouterr().err
