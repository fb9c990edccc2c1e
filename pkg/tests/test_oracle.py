"""Finite-difference oracle: Sturm counting, grid laws, matched operators.

Golden value frozen from this implementation after validating convergence
against the independent closed form (relative gap 2.8e-8):

    matched grid, alpha=2, m=phi=0, M=a=1, r_max=200, n=20000:
        lowest eigenvalue = -0.001217305455611356
"""

import numpy as np
import pytest

from conical_ab.errors import NoBoundStateError
from conical_ab import oracle
from conical_ab.oracle import (
    GridPolicy,
    GridSpacing,
    InnerBoundary,
    RadialGrid,
    TridiagonalOperator,
    build_hamiltonian,
    convergence_study,
    eigenvalue_by_index,
    eigenvalue_count_below,
    grid_bound_state,
    lowest_eigenvalue,
    matched_grid,
    negative_eigenvalue_count,
    zero_energy_log_derivative,
)
from conical_ab.spectrum import (
    anticone_bound_energy,
    boundary_log_derivative_target,
    cone_bound_energy,
    make_channel,
)

GOLDEN_GRID_ALPHA2 = -0.001217305455611356


def _random_tridiag(rng, n):
    diag = rng.normal(size=n)
    off = rng.normal(size=n - 1)
    return TridiagonalOperator(
        diagonal=diag,
        off_diagonal=off,
        grid=RadialGrid(0.1, 10.0, n, GridSpacing.UNIFORM),
        mass=1.0,
        boundary=InnerBoundary.HARD_WALL,
    )


def _charpoly_count_below(diag, off, x):
    # sign changes in the leading-principal-minor sequence of (A - x I)
    # count the eigenvalues below x
    seq = [1.0, diag[0] - x]
    for k in range(1, len(diag)):
        seq.append((diag[k] - x) * seq[-1] - off[k - 1] ** 2 * seq[-2])
    changes = 0
    prev_sign = 1
    for val in seq[1:]:
        sign = prev_sign if val == 0.0 else (1 if val > 0 else -1)
        if sign != prev_sign:
            changes += 1
        prev_sign = sign
    return changes


class TestSturm:
    def test_diagonal_matrix(self):
        op = TridiagonalOperator(
            diagonal=np.array([1.0, 2.0, 3.0]),
            off_diagonal=np.zeros(2),
            grid=RadialGrid(0.1, 10.0, 3, GridSpacing.UNIFORM),
            mass=1.0,
            boundary=InnerBoundary.HARD_WALL,
        )
        assert lowest_eigenvalue(op) == pytest.approx(1.0, abs=1e-12)

    def test_count_matches_charpoly_on_5x5(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            op = _random_tridiag(rng, 5)
            for x in rng.normal(scale=2.0, size=4):
                expect = _charpoly_count_below(op.diagonal, op.off_diagonal, x)
                assert eigenvalue_count_below(op, x) == expect

    def test_count_matches_numpy(self):
        rng = np.random.default_rng(3)
        op = _random_tridiag(rng, 60)
        full = np.diag(op.diagonal) + np.diag(op.off_diagonal, 1) + np.diag(op.off_diagonal, -1)
        evs = np.linalg.eigvalsh(full)
        for x in (-2.5, -1.0, 0.0, 0.3, 2.2):
            assert eigenvalue_count_below(op, x) == int(np.sum(evs < x))

    def test_eigenvalues_match_numpy(self):
        rng = np.random.default_rng(11)
        op = _random_tridiag(rng, 40)
        full = np.diag(op.diagonal) + np.diag(op.off_diagonal, 1) + np.diag(op.off_diagonal, -1)
        evs = np.linalg.eigvalsh(full)
        for j in (0, 1, 5, 39):
            assert eigenvalue_by_index(op, j) == pytest.approx(evs[j], abs=1e-11)


class TestHardWallOperator:
    def test_symmetric_by_construction(self):
        ch = make_channel(0, 0.0, 2.0)
        op = build_hamiltonian(ch, 1.0, 1.0, RadialGrid(0.01, 50.0, 500, GridSpacing.UNIFORM))
        # one shared off-diagonal array represents both triangles exactly
        assert op.off_diagonal.shape == (499,)
        assert np.all(np.isfinite(op.diagonal))

    @pytest.mark.parametrize("spacing", [GridSpacing.UNIFORM, GridSpacing.LOG_UNIFORM])
    def test_shell_weight_integral(self, spacing):
        ch = make_channel(0, 0.0, 2.0)
        mass = 1.7
        grid = RadialGrid(0.01, 50.0, 800, spacing)
        op = build_hamiltonian(ch, mass, 1.0, grid)
        t = boundary_log_derivative_target(2.0)
        integral = op.shell_spike * op.shell_node_dr * 2.0 * mass
        assert integral == pytest.approx(t / 1.0, rel=1e-12)

    def test_plane_box_spectrum_nonnegative(self):
        ch = make_channel(0, 0.0, 1.0)
        op = build_hamiltonian(ch, 1.0, 1.0, RadialGrid(1e-3, 50.0, 2000, GridSpacing.UNIFORM))
        assert negative_eigenvalue_count(op) == 0
        assert lowest_eigenvalue(op) >= 0.0

    def test_attractive_shell_never_raises_ground_state(self):
        ch = make_channel(0, 0.0, 2.0)
        grid = RadialGrid(1e-3, 60.0, 1500, GridSpacing.UNIFORM)
        with_shell = lowest_eigenvalue(build_hamiltonian(ch, 1.0, 1.0, grid))
        without = lowest_eigenvalue(build_hamiltonian(ch, 1.0, 1.0, grid, include_shell=False))
        assert with_shell <= without + 1e-12

    def test_repulsive_shell_no_negative_eigenvalue(self):
        # cone with a real-order channel: lambda_sq = 3.25 >= 0
        ch = make_channel(1, 0.0, 0.5)
        assert ch.lambda_sq >= 0.0
        op = build_hamiltonian(ch, 1.0, 1.0, RadialGrid(1e-3, 50.0, 2000, GridSpacing.UNIFORM))
        assert negative_eigenvalue_count(op) == 0

    def test_hard_wall_anticone_below_binding_threshold(self):
        # with the regular wall the shell alone cannot bind (its strength
        # sits below the centrifugal threshold), which is exactly why the
        # matched boundary exists
        ch = make_channel(0, 0.0, 2.0)
        op = build_hamiltonian(ch, 1.0, 1.0, RadialGrid(0.02, 405.0, 8000, GridSpacing.UNIFORM))
        assert negative_eigenvalue_count(op) == 0

    def test_cone_tower_accumulates_as_wall_shrinks(self):
        ch = make_channel(0, 0.0, 0.6)
        counts = []
        for r_min in (1e-2, 1e-4, 1e-6):
            grid = RadialGrid(r_min, 50.0, 3000, GridSpacing.LOG_UNIFORM)
            counts.append(negative_eigenvalue_count(build_hamiltonian(ch, 1.0, 1.0, grid)))
        assert counts[0] < counts[1] < counts[2]

    def test_shell_outside_grid_rejected(self):
        ch = make_channel(0, 0.0, 2.0)
        with pytest.raises(ValueError):
            build_hamiltonian(ch, 1.0, 100.0, RadialGrid(0.01, 50.0, 500, GridSpacing.UNIFORM))


class TestMatchedOperator:
    def test_golden_spec_grid(self):
        ch = make_channel(0, 0.0, 2.0)
        grid = matched_grid(ch, 1.0, n=20000, r_max=200.0)
        op = build_hamiltonian(ch, 1.0, 1.0, grid, boundary=InnerBoundary.MATCHED)
        ev = lowest_eigenvalue(op)
        assert ev == pytest.approx(GOLDEN_GRID_ALPHA2, rel=1e-10)
        assert negative_eigenvalue_count(op) == 1

    def test_converges_to_matching_energy(self):
        ch = make_channel(0, 0.0, 2.0)
        target = anticone_bound_energy(ch, 1.0, 1.0).energy
        gaps = []
        for n in (1000, 2000, 4000):
            state = grid_bound_state(ch, 1.0, 1.0, n=n)
            gaps.append(abs((state.energy - target) / target))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[-1] < 1e-4

    def test_cone_window_branches(self):
        ch = make_channel(0, 0.0, 0.6)
        for branch in (0, 1):
            target = cone_bound_energy(ch, 1.0, 1.0, branch=branch).energy
            state = grid_bound_state(ch, 1.0, 1.0, n=4000, branch=branch)
            assert state.energy == pytest.approx(target, rel=1e-3)

    def test_unbindable_channel_raises(self):
        ch = make_channel(0, 0.0, 1.5)
        with pytest.raises(NoBoundStateError):
            grid_bound_state(ch, 1.0, 1.0, n=1000)

    def test_nodes_increasing_all_spacings(self):
        for grid in (
            RadialGrid(0.1, 10.0, 50, GridSpacing.UNIFORM),
            RadialGrid(0.1, 10.0, 50, GridSpacing.LOG_UNIFORM),
            matched_grid(make_channel(0, 0.0, 2.0), 1.0, n=50, r_max=10.0),
        ):
            nodes = grid.nodes()
            assert np.all(np.diff(nodes) > 0.0)

    def test_matched_spacing_validation(self):
        ch = make_channel(0, 0.0, 2.0)
        with pytest.raises(ValueError):
            build_hamiltonian(
                ch, 1.0, 1.0, RadialGrid(0.01, 50.0, 500, GridSpacing.UNIFORM),
                boundary=InnerBoundary.MATCHED,
            )


class TestZeroEnergyLogDerivative:
    @pytest.mark.parametrize("alpha", [0.5, 2.0])
    def test_jump_equals_target(self, alpha):
        ch = make_channel(0, 0.0, alpha)
        jump = zero_energy_log_derivative(ch, 1.0, 1e-3)
        assert jump == pytest.approx(boundary_log_derivative_target(alpha), abs=1e-6)

    def test_plane_jump_vanishes(self):
        ch = make_channel(0, 0.5, 1.0)
        assert zero_energy_log_derivative(ch, 1.0, 1e-3) == pytest.approx(0.0, abs=1e-9)

    def test_width_refinement_tightens_jump(self):
        ch = make_channel(0, 0.0, 2.0)
        target = boundary_log_derivative_target(2.0)
        coarse = zero_energy_log_derivative(ch, 1.0, 1e-3, shell_width_fraction=1e-3)
        fine = zero_energy_log_derivative(ch, 1.0, 1e-3, shell_width_fraction=1e-7)
        assert abs(fine - target) < abs(coarse - target)


class TestConvergenceStudy:
    def test_anticone_scale_invariance(self):
        ch = make_channel(0, 0.0, 2.0)
        report = convergence_study(ch, 1.0, [1.0, 0.5, 0.25], policy=GridPolicy(n=2000))
        assert report.ma2_spread_matching < 1e-13
        assert report.ma2_spread_grid < 1e-8
        assert report.refinement_improves
        for row in report.rows:
            assert abs(row.relative_gap) < 1e-3

    def test_cone_scale_invariance(self):
        ch = make_channel(0, 0.0, 0.6)
        report = convergence_study(ch, 1.0, [1.0, 0.5, 0.25], policy=GridPolicy(n=2000))
        assert report.ma2_spread_matching < 1e-13
        assert report.ma2_spread_grid < 1e-8
