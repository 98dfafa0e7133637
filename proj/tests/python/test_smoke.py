"""End-to-end checks of the python bindings against known values."""

import json
import math
import os
import subprocess

import pytest

import lowdisc


def test_generators_shape_and_determinism():
    pts = lowdisc.fibonacci_set(260)
    assert len(pts) == 260 and len(pts[0]) == 2
    assert pts[0] == [0.0, 0.0]

    r1 = lowdisc.random_set(20, 3, seed=7)
    assert r1 == lowdisc.random_set(20, 3, seed=7)
    assert r1 != lowdisc.random_set(20, 3, seed=8)

    lat = lowdisc.fibonacci_integration_lattice(7)
    assert len(lat) == 13
    assert lat[1] == [1.0 / 13.0, 8.0 / 13.0]


def test_benchmark_values():
    pts = lowdisc.fibonacci_set(260)
    r = lowdisc.evaluate(pts, "l2-star")
    assert abs(r["root"] - 0.003438) < 1e-6
    assert math.isclose(r["root"] ** 2, r["squared"], rel_tol=1e-12)
    assert abs(lowdisc.linf_star(pts) - 0.01200) < 1e-5


def test_errors_are_typed():
    with pytest.raises(ValueError):
        lowdisc.evaluate([[0.5, 0.5]], "l3-star")
    with pytest.raises(lowdisc.LowdiscError):
        lowdisc.evaluate([[0.5, 1.5]], "l2-star")
    with pytest.raises(lowdisc.BudgetExceeded):
        lowdisc.linf_star(lowdisc.sobol_set(500, d=5))


def test_sobol_matches_scipy_bitwise():
    qmc = pytest.importorskip("scipy.stats.qmc")
    ref = qmc.Sobol(d=5, scramble=False, bits=52).random(128)
    ours = lowdisc.sobol_set(128, d=5)
    for i in range(128):
        for k in range(5):
            assert ours[i][k] == ref[i][k]


def test_gradient_is_a_descent_direction():
    pts = lowdisc.random_set(12, 2, seed=3)
    g = lowdisc.l2_grad(pts, "l2-star")
    step = [[min(1.0, max(0.0, x - 1e-4 * gi)) for x, gi in zip(p, gp)]
            for p, gp in zip(pts, g)]
    before = lowdisc.evaluate(pts, "l2-star")["squared"]
    after = lowdisc.evaluate(step, "l2-star")["squared"]
    assert after < before


def test_optimize_improves_and_tracks():
    pts = lowdisc.fibonacci_set(89)
    out = lowdisc.optimize(pts, kind="l2-star", steps=40, track_linf=True)
    assert out["trajectory"][0] == lowdisc.evaluate(pts, "l2-star")["squared"]
    assert out["trajectory"][-1] < out["trajectory"][0]
    assert not out["aborted"]
    assert out["best_metric"] <= lowdisc.linf_star(out["final"]) + 1e-15
    assert len(out["final"]) == 89

    again = lowdisc.optimize(pts, kind="l2-star", steps=40, track_linf=True)
    assert again["final"] == out["final"]


def test_quadrature_oracle_agrees():
    pts = lowdisc.random_set(4, 2, seed=11)
    for kind in ("l2-star", "l2-periodic", "l2-extreme"):
        closed = lowdisc.evaluate(pts, kind)["squared"]
        assert abs(lowdisc.quadrature_oracle(pts, kind) - closed) < 1e-12


def test_cli_agrees_with_bindings(tmp_path):
    cli = os.environ.get("LOWDISC_CLI")
    if not cli or not os.path.exists(cli):
        pytest.skip("LOWDISC_CLI not set")
    out = tmp_path / "fib.txt"
    subprocess.run([cli, "generate", "fibonacci", "--n", "144", "-o", str(out)],
                   check=True)
    rep = subprocess.run([cli, "evaluate", str(out)], check=True,
                         capture_output=True, text=True)
    payload = json.loads(rep.stdout)
    ours = lowdisc.evaluate(lowdisc.fibonacci_set(144), "l2-star")
    assert payload["results"]["l2-star"]["root"] == ours["root"]
