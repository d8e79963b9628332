import json
import math

import pytest

import tpc


def test_bessel_and_zeros():
    assert tpc.bessel_j(0.0, 0.0) == 1.0
    assert tpc.bessel_j(0.5, math.pi / 2) == pytest.approx(2 / math.pi, abs=1e-14)
    assert tpc.bessel_zero(0.5, 3) == pytest.approx(3 * math.pi, abs=1e-10)
    assert tpc.gamma_half(1) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    with pytest.raises(ValueError):
        tpc.bessel_j(-1.0, 1.0)


def test_geometry_and_critical_radius():
    assert tpc.unit_ball_volume(3) == pytest.approx(4 * math.pi / 3, rel=1e-15)
    cp = tpc.critical_point(3)
    assert cp["mu"] == pytest.approx(math.pi, abs=1e-10)
    assert cp["rho"] == pytest.approx(tpc.rho_n(3))
    assert 0.66 < cp["rho"] < 0.67


def test_homogeneous_eigenvalue():
    sol = tpc.principal_eigenvalue(tpc.RadialProfile.homogeneous(3, 1.0))
    assert sol.lambda_ == pytest.approx(math.pi**2, rel=1e-8)
    assert sol.rayleigh_quotient() == pytest.approx(sol.lambda_, rel=1e-6)
    assert sol.l2_norm_squared() == pytest.approx(1.0, rel=1e-9)
    samples = sol.samples()
    assert set(samples) == {"r", "y", "y_prime", "sigma"}
    assert samples["r"][0] == 0.0 and samples["r"][-1] == 1.0


def test_profile_round_trip_and_errors():
    p = tpc.RadialProfile(2, 1.0, 2.0, [(0.4, "high"), (1.0, "low")])
    assert tpc.RadialProfile.from_json(p.to_json()) == p
    assert p.layers == [(0.4, "high"), (1.0, "low")]
    assert p.interfaces == [0.4]
    with pytest.raises(ValueError, match="material"):
        tpc.RadialProfile.from_json(json.dumps(
            {"dim": 2, "alpha": 1, "beta": 2, "layers": [{"r_outer": 1, "material": "gold"}]}))
    with pytest.raises(tpc.SolverError):
        tpc.principal_eigenvalue(tpc.RadialProfile(3, 1e-300, 1.0, [(0.5, "high"), (1.0, "low")]))


def test_improve_and_optimize_descend():
    ball = tpc.RadialProfile.ball(3, 1.0, 1.05, fraction=0.729)
    step = tpc.improve(ball)
    after = tpc.principal_eigenvalue(step["profile"]).lambda_
    assert after < step["lambda_before"]
    assert step["high_region"][-1][1] == 1.0
    trace = tpc.optimize(ball)
    assert trace["converged"]
    lambdas = trace["lambdas"]
    assert all(b <= a * (1 + 1e-9) for a, b in zip(lambdas, lambdas[1:]))


def test_counterexample_and_low_contrast():
    report = tpc.check_counterexample(2, 1.0, 1.05, fraction=0.81)
    assert report["verdict"] == "refuted"
    assert report["y2_prime_at_1"] < report["z"]
    low = tpc.low_contrast_optimizer(3, fraction=0.5)
    assert low["shape"] == "ball_and_boundary_annulus"
    assert low["boundary_contact_measure"] < low["critical_ball_measure"]


def test_sweep_rows():
    rows = tpc.sweep([2, 3], [0.3, 0.7], [1.01, 1.05])
    assert len(rows) == 8
    assert [r["n"] for r in rows] == [2, 2, 2, 2, 3, 3, 3, 3]
    bad = tpc.sweep([2], [1.5], [1.05])
    assert bad[0]["verdict"] == "error"
