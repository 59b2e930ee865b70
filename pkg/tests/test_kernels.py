import math
import random
from fractions import Fraction

import pytest

from totpos import kernels as kz
from totpos.generators import GenSpec, random_matrix
from totpos.linalg import Matrix, MinorSelector, enumerate_minors, minor_value, tn_order, tp_order


class TestPFEval:
    def test_one_sided_jump_value(self):
        pf = kz.OneSidedExp(a=1.0, delta=0.0)
        assert kz.pf_eval(pf, 0.0) == 0.5
        assert kz.pf_eval(pf, -1.0) == 0.0
        assert kz.pf_eval(pf, 2.0) == pytest.approx(math.exp(-2.0))

    def test_omega(self):
        assert kz.pf_eval(kz.Omega(), 1.0) == pytest.approx(math.exp(-1.0))
        assert kz.pf_eval(kz.Omega(), 0.0) == 0.0
        assert kz.pf_eval(kz.Omega(), -3.0) == 0.0

    def test_even_family_at_zero(self):
        assert kz.pf_eval(kz.EvenM(gamma=1.0), 0.0) == pytest.approx(1.0)

    def test_gaussian_mass(self):
        pf = kz.GaussianPF(variance=2.0)
        assert kz.pf_eval(pf, 0.0) == pytest.approx(1.0 / math.sqrt(4 * math.pi))

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            kz.OneSidedExp(a=0.0)
        with pytest.raises(ValueError):
            kz.EvenM(gamma=-1.0)


class TestSampling:
    def test_product_kernel_grid(self):
        m = kz.sample_kernel(kz.Jain(), (1, 2, 3), (1, 2, 3))
        assert [list(r) for r in m.entries()] == [[2, 3, 4], [3, 5, 7], [4, 7, 10]]
        assert m.exact
        from totpos.linalg import det_exact

        assert det_exact(m) == 0

    def test_hankel_exact_fractions(self):
        m = kz.sample_kernel(kz.Hankel(u0=Fraction(1, 2)), (1, 2), (1, 2))
        assert [list(r) for r in m.entries()] == [
            [Fraction(5, 4), Fraction(9, 8)],
            [Fraction(9, 8), Fraction(17, 16)],
        ]

    def test_hankel_float_on_fractional_grid(self):
        m = kz.sample_kernel(kz.Hankel(u0=Fraction(1, 2)), (0.5, 1.5), (0.5, 1.5))
        assert not m.exact

    def test_constant(self):
        m = kz.sample_kernel(kz.Constant(c=Fraction(3, 2)), (0, 1), (0, 1, 2))
        assert all(v == Fraction(3, 2) for row in m.entries() for v in row)
        assert m.row_points == (0, 1)

    def test_clamped_kernel_matches_product_on_positive_grids(self):
        grid = (Fraction(1, 2), 2, 3)
        assert kz.sample_kernel(kz.JKS(), grid, grid) == kz.sample_kernel(kz.Jain(), grid, grid)

    def test_clamped_kernel_clamps(self):
        m = kz.sample_kernel(kz.JKS(), (-2, 1), (1, 2))
        assert m[0, 1] == 0 and m[0, 0] == 0 and m[1, 1] == 3

    def test_rank_one_requires_tabulated_points(self):
        spec = kz.RankOne(phi={1: 2, 2: 3}, psi={1: 1, 2: 5})
        m = kz.sample_kernel(spec, (1, 2), (1, 2))
        assert m[1, 1] == 15
        with pytest.raises(ValueError):
            kz.sample_kernel(spec, (1, 3), (1, 2))

    def test_rank_one_approx_converges_and_stays_strict(self):
        grid = (0.5, 1.5, 2.5, 3.5)
        phi = {x: 1.0 + 0.3 * x for x in grid}
        psi = {x: 2.0 - 0.2 * x for x in grid}
        limit = kz.sample_kernel(kz.RankOne(phi, psi), grid, grid)
        gaps = []
        for n in (1, 2, 4, 8):
            m = kz.sample_kernel(kz.RankOneApprox(phi, psi, n=n), grid, grid)
            gaps.append(max(abs(m[i, j] - limit[i, j]) for i in range(4) for j in range(4)))
        assert gaps == sorted(gaps, reverse=True)
        for n in (1, 2, 5):
            m = kz.sample_kernel(kz.RankOneApprox(phi, psi, n=n), grid, grid)
            assert tp_order(m).full

    def test_exponential_kernel_strictly_positive_up_to_six(self):
        rng = random.Random(2)
        for _ in range(10):
            n = rng.randint(2, 6)
            xs = sorted(rng.uniform(0.1, 3.0) for _ in range(n))
            ys = sorted(rng.uniform(0.1, 3.0) for _ in range(n))
            if min((b - a for a, b in zip(xs, xs[1:])), default=1) < 0.2:
                continue
            if min((b - a for a, b in zip(ys, ys[1:])), default=1) < 0.2:
                continue
            m = kz.sample_kernel(kz.VandermondeExp(scale=1.0), xs, ys)
            assert tp_order(m).full


class TestPadding:
    def test_center_single_entry(self):
        m = kz.pad(Matrix([[1]]), (1, 2, 3), (1, 2, 3), (1,), (1,), pad_value=0)
        assert tn_order(m).full

    def test_pad_by_ones_kills_strict_order(self):
        m = kz.pad(Matrix([[1, 2], [2, 1]]), (1, 2, 3, 4), (1, 2, 3, 4), (0, 1), (0, 1), 1)
        report = tp_order(m)
        assert report.order == 1

    def test_band_matrix_keeps_order_two(self):
        band = Matrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
        m = kz.pad(band, range(5), range(5), (1, 2, 3), (1, 2, 3), 0)
        assert tn_order(m).order == 2

    def test_padding_preserves_full_order(self):
        rng = random.Random(7)
        for trial in range(500):
            n = rng.randint(1, 3)
            inner = random_matrix(GenSpec(n=n, kind="tn", seed=trial))
            big = rng.randint(n, n + 3)
            rows = tuple(sorted(rng.sample(range(big), n)))
            cols = tuple(sorted(rng.sample(range(big), n)))
            padded = kz.pad(inner, range(big), range(big), rows, cols, 0)
            assert tn_order(padded).full

    def test_placement_validation(self):
        with pytest.raises(ValueError):
            kz.pad(Matrix([[1, 2], [2, 1]]), (1, 2, 3), (1, 2, 3), (1, 0), (0, 1), 0)
        with pytest.raises(ValueError):
            kz.pad(Matrix([[1]]), (1, 2), (1, 2), (0,), (0,), pad_value=2)


class TestInflation:
    def test_reproduces_table_on_anchors(self):
        eye = Matrix([[1, 0], [0, 1]])
        spec = kz.inflate(eye, (1, 2), (1, 2), Fraction(1, 4))
        assert kz.sample_kernel(spec, (1, 2), (1, 2)).entries() == eye.entries()

    def test_off_anchor_rows_vanish(self):
        eye = Matrix([[1, 0], [0, 1]])
        spec = kz.inflate(eye, (1, 2), (1, 2), Fraction(1, 4))
        m = kz.sample_kernel(spec, (Fraction(1, 2), 1, 2), (1, 2))
        assert [list(r) for r in m.entries()] == [[0, 0], [1, 0], [0, 1]]

    def test_keeps_total_nonnegativity(self):
        for seed in range(5):
            inner = random_matrix(GenSpec(n=3, kind="tn", seed=seed))
            spec = kz.inflate(inner, (1, 2, 3), (1, 2, 3), Fraction(2, 5))
            refined = kz.sample_kernel(spec, (Fraction(1, 2), 1, 2, 3), (1, 2, Fraction(5, 2), 3))
            assert tn_order(refined).full

    def test_oversized_eps_rejected(self):
        with pytest.raises(ValueError):
            kz.inflate(Matrix([[1, 0], [0, 1]]), (1, 2), (1, 2), Fraction(1, 2))


class TestPiecewiseLinear:
    def test_anchor_images(self):
        f = kz.piecewise_linear((1, 2, 3), (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2)))
        assert f(2) == Fraction(3, 2)

    def test_interpolation(self):
        f = kz.piecewise_linear((1, 3), (0, 1))
        assert f(2) == Fraction(1, 2)

    def test_extrapolation_uses_end_slopes(self):
        f = kz.piecewise_linear((0, 1, 3), (0, 2, 3))
        assert f(-1) == -2  # first segment slope 2
        assert f(5) == 4  # last segment slope 1/2

    def test_single_anchor_unit_slope(self):
        f = kz.piecewise_linear((5,), (9,))
        assert f(7) == 11

    def test_strictly_increasing_required(self):
        with pytest.raises(ValueError):
            kz.piecewise_linear((1, 1), (0, 1))


class TestToeplitzSampling:
    def test_one_sided_values(self):
        m = kz.toeplitz_sample(kz.OneSidedExp(1.0, 0.0), None, None, (0, 1), (0, 1))
        assert m[0, 0] == 0.5 and m[1, 1] == 0.5
        assert m[0, 1] == 0.0
        assert m[1, 0] == pytest.approx(math.exp(-1.0))

    def test_omega_diagonal(self):
        m = kz.toeplitz_sample(kz.Omega(), None, None, (1, 2, 3), (0, 1, 2))
        for i in range(3):
            assert m[i, i] == pytest.approx(math.exp(-1.0))

    def test_gaussian_symmetric(self):
        m = kz.toeplitz_sample(kz.GaussianPF(1.0), None, None, (0, 1, 2), (0, 1, 2))
        assert m.is_symmetric()

    def test_one_sided_toeplitz_is_tn(self):
        rng = random.Random(4)
        for _ in range(25):
            n = rng.randint(2, 5)
            xs = sorted(rng.uniform(0.0, 5.0) for _ in range(n))
            ys = sorted(rng.uniform(0.0, 5.0) for _ in range(n))
            m = kz.toeplitz_sample(kz.OneSidedExp(rng.uniform(0.5, 2.0), 0.0), None, None, xs, ys)
            assert tn_order(m).full

    def test_reflection_flag(self):
        pf = kz.OneSidedExp(1.0, -3.0)
        m = kz.toeplitz_sample(pf, None, None, (0,), (1,), negate=True)
        # argument -(0 - 1) = 1 > -3, so the value is exp(-(1 + 3))
        assert m[0, 0] == pytest.approx(math.exp(-4.0))


class TestSmoothing:
    def test_tabulated_vanishes_far_left(self):
        sm = kz.gaussian_smooth_pf(kz.OneSidedExp(1.0, 0.0), 0.01)
        assert sm(-50.0) == 0.0

    def test_integral_preserved(self):
        sm = kz.gaussian_smooth_pf(kz.OneSidedExp(1.0, 0.0), 0.0025)
        assert abs(sm.integral() - 1.0) <= 1e-6

    def test_smoothed_omega_strictly_positive_sample(self):
        sm = kz.gaussian_smooth_pf(kz.Omega(), 0.1)
        grid = (0.0, 0.5, 1.0)
        m = kz.toeplitz_sample(sm, None, None, grid, grid)
        assert tp_order(m).full


class TestWhitneySmoothing:
    def test_constant_is_fixed_point(self):
        ones = Matrix([[1.0] * 3 for _ in range(3)], row_points=(1, 2, 3), col_points=(1, 2, 3))
        out = kz.whitney_smooth_kernel(ones, 0.5)
        assert all(abs(out[i, j] - 1.0) <= 1e-12 for i in range(3) for j in range(3))
        assert tp_order(out).order == 1

    def test_symmetric_output_bit_exact(self):
        m = random_matrix(GenSpec(n=4, kind="stn", seed=3))
        m = Matrix(m.entries(), row_points=(1, 2, 3, 4), col_points=(1, 2, 3, 4)).to_float()
        out = kz.whitney_smooth_kernel(m, 0.3)
        for i in range(4):
            for j in range(4):
                assert out[i, j] == out[j, i]

    def test_padded_band_matrix_becomes_strictly_positive_at_order_two(self):
        band = Matrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
        grid = (1.0, 1.5, 2.0, 2.5, 3.0)
        padded = kz.pad(band, grid, grid, (1, 2, 3), (1, 2, 3), 0).to_float()
        out = kz.whitney_smooth_kernel(padded, 0.05)
        assert tn_order(out).order >= 2
        for sel in enumerate_minors(out, 2):
            value, _ = minor_value(out, sel)
            assert value > 1e-10
        assert all(out[i, j] > 1e-10 for i in range(5) for j in range(5))

    def test_requires_grid_metadata(self):
        with pytest.raises(ValueError):
            kz.whitney_smooth_kernel(Matrix([[1.0]]), 0.1)


class TestSerialization:
    def test_kernel_round_trips(self):
        specs = [
            kz.VandermondeExp(scale=2.0),
            kz.Jain(),
            kz.JKS(),
            kz.Hankel(u0=Fraction(1, 2)),
            kz.Constant(c=Fraction(3)),
            kz.RankOne(phi={1: 2}, psi={1: 3}),
            kz.RankOneApprox(phi={1: 2.0}, psi={1: 3.0}, n=4.0),
            kz.ToeplitzPF(pf=kz.Omega(), negate=True),
            kz.ToeplitzPF(
                pf=kz.OneSidedExp(1.0, -3.0),
                phi_x=kz.piecewise_linear((1, 2), (0, 1)),
                phi_y=None,
            ),
            kz.Padded(inner=kz.Jain(), inner_x=(1, 2), inner_y=(1, 2), pad_value=1),
            kz.Padded(inner=Matrix([[1, 2], [2, 1]]), inner_x=(1, 2), inner_y=(1, 2), pad_value=0),
            kz.Inflation(table=Matrix([[1]]), x_anchors=(1,), y_anchors=(2,), eps=Fraction(1, 8)),
        ]
        for spec in specs:
            back = kz.kernel_from_json(kz.kernel_to_json(spec))
            assert back == spec, spec

    def test_padded_kernel_sampling(self):
        spec = kz.Padded(inner=kz.Jain(), inner_x=(1, 2), inner_y=(1, 2), pad_value=1)
        m = kz.sample_kernel(spec, (1, 2, 3), (1, 2, 3))
        assert m[0, 0] == 2 and m[2, 2] == 1 and m[0, 2] == 1

    def test_padded_requires_subgrid(self):
        spec = kz.Padded(inner=kz.Jain(), inner_x=(1, 5), inner_y=(1, 2), pad_value=0)
        with pytest.raises(ValueError):
            kz.sample_kernel(spec, (1, 2, 3), (1, 2, 3))
