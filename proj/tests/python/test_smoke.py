"""Smoke tests for the python bindings: closed-form anchors and a tiny scan."""

import math

import pytest

import orlicz_sampling as osp


def test_nfunction_basics():
    sq = osp.NFunction("power", 2.0)
    assert sq.value(3.0) == pytest.approx(9.0)
    assert sq.inverse(4.0) == pytest.approx(2.0, rel=1e-9)
    assert sq.conjugate(2.0) == pytest.approx(1.0, rel=1e-8)

    pl = osp.NFunction("power_log", 2.0, 1.0)
    assert pl.value(1.0) == pytest.approx(1.0, abs=1e-12)

    with pytest.raises(ValueError):
        osp.NFunction("power_log", 1.0, 1.0)
    with pytest.raises(ValueError):
        osp.NFunction("nope", 2.0)


def test_delta2_and_indices():
    assert osp.delta2_constant(osp.NFunction("power", 2.0)).value == pytest.approx(4.0)
    est = osp.matuszewska_indices(osp.NFunction("power", 1.5))
    assert est.alpha_index == pytest.approx(1.5, abs=1e-3)
    assert est.beta_index == pytest.approx(1.5, abs=1e-3)


def test_trigpoly_and_hilbert():
    d = osp.dirichlet(4)
    assert d.evaluate(0.0) == pytest.approx(9.0 + 0.0j)

    f = osp.random_poly(8, 42, "gaussian")
    hh = osp.hilbert_transform(osp.hilbert_transform(f))
    for k in range(-8, 9):
        want = 0.0 if k == 0 else -f.coeff(k)
        assert abs(hh.coeff(k) - want) < 1e-14

    g = osp.random_poly(11, 3, "gaussian")
    trunc = osp.project(g, 5)
    comp = osp.project_via_modulation(g, 5)
    assert all(abs(trunc.coeff(k) - comp.coeff(k)) < 1e-12 for k in range(-13, 14))


def test_spike_norm_closed_forms():
    pl = osp.NFunction("power_log", 2.0, 1.0)
    n, k = 8, 3
    spike = osp.spike_poly(n, list(range(-n, -n + k)))
    samples = osp.node_samples(spike, n)
    ell = osp.discrete_norm_ln(pl, samples)
    omega = osp.discrete_norm_omega(pl, samples, n)
    assert ell.value == pytest.approx(1.0 / pl.inverse(1.0 / k), rel=1e-9)
    assert omega.value == pytest.approx(1.0 / pl.inverse((2 * n + 1) / k), rel=1e-9)
    assert ell.converged and omega.converged


def test_parseval_norm():
    sq = osp.NFunction("power", 2.0)
    f = osp.random_poly(6, 5, "gaussian")
    energy = sum(abs(f.coeff(k)) ** 2 for k in range(-6, 7))
    r = osp.luxemburg_norm_continuous(sq, f)
    assert r.value == pytest.approx(math.sqrt(energy), rel=1e-9)


def test_verify_and_scan():
    sq = osp.NFunction("power", 2.0)
    rep = osp.verify_simple(sq, osp.dirichlet(8), 8)
    assert rep.pass_
    assert rep.ratio == pytest.approx(1.0 / 3.0, rel=1e-7)

    config = """{
      "nfunctions": [{"family": "power", "alpha": 2.0}],
      "degrees": [4],
      "family": {"kind": "standard", "count": 8, "seed": 7},
      "checks": ["simple", "zygmund", "upper", "lower"]
    }"""
    csv1, violations, errors = osp.run_scan(config)
    csv2, _, _ = osp.run_scan(config)
    assert violations == 0 and errors == 0
    assert csv1 == csv2
    assert csv1.splitlines()[0] == "check,phi,n,case_id,lhs,rhs,ratio,pass,witness"


def test_sampling_function():
    tab = osp.sampling_function(osp.NFunction("power", 2.0))
    assert all(
        env == pytest.approx(t * t, rel=1e-9)
        for t, env in zip(tab["t"], tab["envelope"])
    )
    slope = osp.loglog_slope_at_zero(osp.NFunction("power_log", 2.0, 1.0))
    assert slope == pytest.approx(2.0, abs=0.05)
