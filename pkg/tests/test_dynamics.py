import math

import numpy as np
import pytest

from adiasearch.dynamics import (
    full_simulate,
    marked_probability,
    reduced_rhs,
    simulate,
    simulate_on_grid,
)
from adiasearch.error_models import p_lower_bound_from_q
from adiasearch.integrator import IvpConfig
from adiasearch.schedules import ScheduleKind, duration, ideal_q_of_tau
from adiasearch.spectral import SearchInstance


class TestReducedRhs:
    def test_final_time_freezes_marked_amplitude(self):
        chi = np.array([0.3 + 0.1j, 1.2 - 0.4j])
        derivative = reduced_rhs(1.0, chi, ScheduleKind.PROPOSED, 8.0, 5.0)
        assert derivative[0] == 0.0
        # second row is -iT(-psi_m + psi_bar)
        assert derivative[1] == pytest.approx(-5j * (chi[1] - chi[0]), abs=1e-14)

    def test_initial_state_is_stationary(self):
        N = 16.0
        chi = np.array([1.0 / math.sqrt(N), math.sqrt(N)], dtype=complex)
        derivative = reduced_rhs(0.0, chi, ScheduleKind.ORIGINAL, N, 7.0)
        assert abs(derivative[0]) <= 1e-14
        assert abs(derivative[1]) <= 1e-14

    def test_midpoint_matrix_product(self):
        derivative = reduced_rhs(0.5, np.array([1.0 + 0j, 0.0j]), ScheduleKind.PROPOSED, 4.0, 1.0)
        assert derivative[0] == pytest.approx(-0.5j, abs=1e-15)
        assert derivative[1] == pytest.approx(0.5j, abs=1e-15)


class TestSimulate:
    def test_initial_point(self):
        points = simulate(ScheduleKind.PROPOSED, SearchInstance(n=4, eps=0.1), grid_points=11)
        start = points[0]
        assert start.tau == 0.0
        assert start.p == pytest.approx(1.0 / 16.0, abs=1e-14)
        assert start.eps_exact <= 1e-12
        assert abs(start.norm_residual) <= 1e-12

    def test_grid_and_schedule_column(self):
        points = simulate(ScheduleKind.LINEAR, SearchInstance(n=2, eps=0.1), grid_points=5)
        assert [p.tau for p in points] == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
        assert [p.s for p in points] == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])

    def test_norm_identity_preserved(self, n8_proposed_002):
        assert max(abs(p.norm_residual) for p in n8_proposed_002) <= 1e-9

    @pytest.mark.parametrize(
        "n,eps",
        [(8, 0.02), (10, 0.02), (8, 0.05)],
    )
    @pytest.mark.parametrize("kind", [ScheduleKind.PROPOSED, ScheduleKind.ORIGINAL])
    def test_adiabatic_error_stays_below_diabaticity(self, n, eps, kind, n8_proposed_002):
        if (n, eps, kind) == (8, 0.02, ScheduleKind.PROPOSED):
            points = n8_proposed_002
        else:
            points = simulate(kind, SearchInstance(n=n, eps=eps), grid_points=2001)
        assert max(p.eps_exact for p in points) <= eps * (1.0 + 1e-3)

    def test_final_probability_near_one(self, n8_proposed_002):
        assert n8_proposed_002[-1].p >= 1.0 - 0.02**2

    def test_consistent_with_pointwise_bound(self):
        # measured probability can never fall below the worst case implied by
        # the ideal curve and the actual error at that instant
        for kind in (ScheduleKind.PROPOSED, ScheduleKind.ORIGINAL):
            points = simulate(kind, SearchInstance(n=6, eps=0.05), grid_points=801)
            for point in points:
                q_ideal = ideal_q_of_tau(kind, point.tau, 64.0)
                assert point.p >= p_lower_bound_from_q(q_ideal, point.eps_exact) - 1e-9

    def test_converges_to_ideal_curve(self):
        # at very small diabaticity the exact probability hugs the errorless one
        eps = 0.001
        instance = SearchInstance(n=6, eps=eps)
        cfg = IvpConfig(atol=1e-9, rtol=1e-9)
        points = simulate(ScheduleKind.PROPOSED, instance, grid_points=801, cfg=cfg)
        worst = max(abs(p.p - ideal_q_of_tau(ScheduleKind.PROPOSED, p.tau, 64.0)) for p in points)
        assert worst <= 3.0 * eps

    def test_marked_probability_single_point(self):
        instance = SearchInstance(n=4, eps=0.1)
        T = duration(ScheduleKind.PROPOSED, 16.0, 0.1)
        points = simulate(ScheduleKind.PROPOSED, instance, grid_points=5)
        single = marked_probability(ScheduleKind.PROPOSED, 16.0, T, 0.5)
        assert single == pytest.approx(points[2].p, abs=1e-11)
        assert marked_probability(ScheduleKind.PROPOSED, 16.0, T, 0.0) == 1.0 / 16.0


class TestFullOracle:
    def test_initial_point_and_unit_norm(self):
        points = full_simulate(3, 0, ScheduleKind.PROPOSED, 0.1, 201)
        assert points[0].p == pytest.approx(1.0 / 8.0, abs=1e-14)
        assert points[0].eps_exact <= 1e-12
        assert max(abs(p.norm_residual) for p in points) <= 1e-9

    def test_matches_reduced_system(self):
        for kind, eps in ((ScheduleKind.PROPOSED, 0.1), (ScheduleKind.ORIGINAL, 0.02)):
            instance = SearchInstance(n=3, eps=eps)
            reduced = simulate(kind, instance, grid_points=501)
            full = full_simulate(3, 0, kind, eps, 501)
            assert max(abs(a.p - b.p) for a, b in zip(reduced, full)) <= 1e-8
            assert max(abs(a.eps_exact - b.eps_exact) for a, b in zip(reduced, full)) <= 1e-8

    def test_marked_index_immaterial(self):
        first = full_simulate(4, 0, ScheduleKind.ORIGINAL, 0.1, 301)
        last = full_simulate(4, 15, ScheduleKind.ORIGINAL, 0.1, 301)
        assert max(abs(a.p - b.p) for a, b in zip(first, last)) <= 1e-10
        assert max(abs(a.eps_exact - b.eps_exact) for a, b in zip(first, last)) <= 1e-10

    def test_size_guard(self):
        with pytest.raises(ValueError):
            full_simulate(13, 0, ScheduleKind.PROPOSED, 0.1, 11)
        with pytest.raises(ValueError):
            full_simulate(3, 8, ScheduleKind.PROPOSED, 0.1, 11)


class TestSimulateOnGrid:
    def test_partial_window(self):
        # dense sampling of the initial error peak only
        N, eps = 2.0**10, 0.02
        T = duration(ScheduleKind.PROPOSED, N, eps)
        cap = (math.pi**2 / 4.0) * eps * eps
        points = simulate_on_grid(ScheduleKind.PROPOSED, N, T, np.linspace(0.0, cap, 301))
        assert points[-1].tau == pytest.approx(cap)
        peak = max(p.eps_exact for p in points)
        assert 0.0 < peak <= eps
