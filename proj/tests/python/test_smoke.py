"""Smoke tests for the python bindings."""

import json
import math
import os
from pathlib import Path

import pytest

import magsym


def test_version():
    assert magsym.__version__


def test_classical_generator_algebra():
    consts = magsym.PhysicalConstants()
    A = magsym.symmetric_gauge(["0", "0", "1"])
    g1 = magsym.passive_translation_generator(A, 1, consts)
    g2 = magsym.passive_translation_generator(A, 2, consts)
    assert g1.exists() and g2.exists()
    bracket = magsym.poisson(g1.value(), g2.value())
    minus_one = magsym.PolyObservable([("-1", [0, 0, 0, 0, 0, 0])])
    assert bracket == minus_one

    gradient = magsym.gradient_gauge("1", "1")
    refused = magsym.passive_translation_generator(gradient, 1, consts)
    assert not refused.exists()
    assert "dB3/dx1" in refused.report().summary()


def test_gauge_independence_of_kinematical_form():
    consts = magsym.PhysicalConstants()
    A = magsym.symmetric_gauge(["0", "0", "1"])
    L = magsym.landau_gauge("1", 3)
    gA = magsym.passive_translation_generator(A, 1, consts).value()
    gL = magsym.passive_translation_generator(L, 1, consts).value()
    assert magsym.substitute_kinematical(gA, A, consts) == magsym.substitute_kinematical(
        gL, L, consts)


def test_weyl_commutators():
    alg = magsym.WeylAlgebra("1/2")
    x1 = magsym.WeylOp.position(0)
    p1 = magsym.WeylOp.momentum(0)
    comm = alg.commutator(x1, p1)
    assert comm.is_scalar()
    assert str(comm) == "(1/2*i)"

    consts = magsym.PhysicalConstants(hbar="1/2")
    A = magsym.symmetric_gauge(["0", "0", "1"])
    identities = magsym.verify_identities(A, consts)
    assert len(identities) >= 30
    assert all(entry["pass"] for entry in identities)


def test_flow_and_trajectory():
    consts = magsym.PhysicalConstants()
    A = magsym.symmetric_gauge(["0", "0", "1"])
    G1 = magsym.passive_translation_generator(A, 1, consts).value()
    end = magsym.flow(G1, 1.0, magsym.PhasePoint())
    assert abs(end.x.x1 - 1.0) < 1e-12
    assert abs(end.p.x2 - 0.5) < 1e-12

    T = 2 * math.pi
    traj = magsym.integrate_trajectory(
        magsym.PhasePoint(magsym.Vec3(0, 0, 0), magsym.Vec3(1, 0, 0)), A, consts, T, T / 2000)
    assert magsym.drift(traj, G1) < 1e-8


def test_ray_phase_small_grid():
    consts = magsym.PhysicalConstants()
    n, h = 128, 0.05
    half = 0.5 * (n - 1) * h
    spec = magsym.GridSpec(n, h, [-half, -half])
    psi = magsym.gaussian_packet(spec, [0.0, 0.0], 0.2, [0.0, 0.0])
    assert abs(psi.norm() - 1.0) < 1e-12
    res = magsym.compose_phase(psi, magsym.LatticeShift(10, 0), magsym.LatticeShift(0, 10),
                               1.0, consts, magsym.Family.passive)
    assert res.comparable
    assert res.fidelity >= 1.0 - 1e-12
    assert abs(res.phi - 0.125) < 1e-10


def test_scenario_runner():
    scenario_dir = os.environ.get("MAGSYM_SCENARIO_DIR")
    if not scenario_dir:
        pytest.skip("MAGSYM_SCENARIO_DIR not set")
    path = Path(scenario_dir) / "uniform_field_full_suite.json"
    code, report = magsym.run_scenario_file(str(path))
    assert code == 0
    parsed = json.loads(report)
    assert parsed["overall"] == "pass"
    assert "ray-phase — Eq. (19)" in magsym.list_checks()
