import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totpos.linalg import (
    Matrix,
    MinorSelector,
    MixedArithmeticError,
    Tolerance,
    det_exact,
    det_float,
    enumerate_minors,
    minor_value,
    tn_order,
    tp_order,
)

BAND = [[1, 1, 0], [1, 1, 1], [0, 1, 1]]


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


class TestMatrix:
    def test_rejects_mixed_arithmetic(self):
        with pytest.raises(MixedArithmeticError):
            Matrix([[1, 2.0], [3, 4]])

    def test_rejects_ragged_and_empty(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            Matrix([])

    def test_points_must_increase(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3, 4]], row_points=(2, 1))
        m = Matrix([[1, 2], [3, 4]], row_points=(0, 1), col_points=(5, 9))
        assert m.row_points == (0, 1)

    def test_entries_normalized_to_fractions(self):
        m = Matrix([[1, Fraction(1, 2)], [0, 3]])
        assert m.exact and m[0, 1] == Fraction(1, 2) and isinstance(m[0, 0], Fraction)

    def test_submatrix_carries_points(self):
        m = Matrix([[1, 2, 3], [4, 5, 6]], row_points=(0, 1), col_points=(1, 2, 3))
        sub = m.submatrix(MinorSelector((0, 1), (0, 2)))
        assert sub.col_points == (1, 3)

    def test_json_round_trip_exact(self):
        m = Matrix([[Fraction(1, 3), 2], [0, Fraction(7, 2)]], row_points=(Fraction(1, 2), 1))
        assert Matrix.from_json(m.to_json()) == m

    def test_json_round_trip_float(self):
        m = Matrix([[0.1, 2.0], [3.5, 1e-17]])
        assert Matrix.from_json(m.to_json()) == m

    def test_csv_parse(self):
        m = Matrix.from_csv("1.0,2.0\n3.0,4.0\n")
        assert m.shape == (2, 2) and not m.exact


class TestDeterminants:
    def test_band_matrix(self):
        assert det_exact(Matrix(BAND)) == -1

    def test_identity(self):
        assert det_exact(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1

    def test_blocked_rank_two(self):
        m = Matrix([[2, 2, 1, 1], [2, 2, 1, 1], [1, 1, 2, 2], [1, 1, 2, 2]])
        assert det_exact(m) == 0

    def test_float_one_by_one(self):
        value, sign = det_float(Matrix([[5.0]]))
        assert value == 5.0 and sign == "pos"

    def test_sqrt2_power_dets(self):
        s = 1 / math.sqrt(2)
        m = Matrix([[1.0, s, 0.0], [s, 1.0, s], [0.0, s, 1.0]])
        value, sign = det_float(m)
        assert abs(value) <= 1e-12 and sign == "zero"
        half = Matrix([[v**0.5 for v in row] for row in m.entries()])
        value, sign = det_float(half)
        assert sign == "neg" and abs(value - (1 - 2**0.5)) <= 1e-12

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            det_float(Matrix([[float("nan"), 1.0], [1.0, 1.0]]))

    def test_exact_vs_cofactor_oracle(self):
        rng = random.Random(5)
        for _ in range(1000):
            rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
            assert det_exact(Matrix(rows)) == cofactor_det(rows)

    def test_exact_float_sign_agreement(self):
        # random rational matrices, entries in [0, 4], denominators <= 16
        rng = random.Random(12)
        for _ in range(10_000):
            n = rng.randint(1, 5)
            rows = [
                [Fraction(rng.randint(0, 4 * (d := rng.randint(1, 16))), d) for _ in range(n)]
                for _ in range(n)
            ]
            m = Matrix(rows)
            exact = det_exact(m)
            _, sign = det_float(m.to_float())
            want = "pos" if exact > 0 else ("neg" if exact < 0 else "zero")
            assert sign == want, (rows, exact, sign)


class TestEnumeration:
    def test_counts(self):
        m = Matrix(BAND)
        assert len(list(enumerate_minors(m, 2))) == 9
        assert len(list(enumerate_minors(m, 2, "contiguous"))) == 4
        wide = Matrix([[1] * 3 for _ in range(4)])
        assert len(list(enumerate_minors(wide, 3))) == 4

    def test_lexicographic_order(self):
        sels = list(enumerate_minors(Matrix(BAND), 2))
        assert sels[0] == MinorSelector((0, 1), (0, 1))
        assert sels == sorted(sels, key=lambda s: (s.rows, s.cols))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            list(enumerate_minors(Matrix(BAND), 4))

    def test_selector_validation(self):
        with pytest.raises(ValueError):
            MinorSelector((1, 0), (0, 1))
        with pytest.raises(ValueError):
            MinorSelector((0,), (0, 1))


class TestOrders:
    def test_band_matrix_order(self):
        report = tn_order(Matrix(BAND), k_max=3)
        assert report.order == 2 and not report.full
        sel, det = report.witness
        assert sel.size == 3 and det == -1
        values = sorted({minor_value(Matrix(BAND), s)[0] for s in enumerate_minors(Matrix(BAND), 2)})
        assert values == [0, 1]

    def test_swap_like_matrix(self):
        report = tn_order(Matrix([[1, 2], [2, 1]]), k_max=2)
        assert report.order == 1
        assert report.witness[0] == MinorSelector((0, 1), (0, 1))
        assert report.witness[1] == -3

    def test_row_matrix_full(self):
        report = tn_order(Matrix([[1, 0, 3, 2]]))
        assert report.full and report.order == 1

    def test_tp_exponential_sample(self):
        m = Matrix([[math.exp(x * y) for y in (1, 2)] for x in (1, 2)])
        assert tp_order(m).full

    def test_tp_capped_product_sample(self):
        assert tp_order(Matrix([[2, 3], [3, 5]])).full

    def test_tp_repeated_rows(self):
        report = tp_order(Matrix([[1, 1], [1, 1]]))
        assert report.order == 1 and report.witness[1] == 0

    def test_tp_zero_entry_gives_order_zero(self):
        report = tp_order(Matrix([[1, 0], [0, 1]]))
        assert report.order == 0 and report.witness[0].size == 1

    def test_negative_entry_gives_tn_order_zero(self):
        report = tn_order(Matrix([[1, -1], [0, 1]]))
        assert report.order == 0

    def test_kmax_caps_report(self):
        report = tn_order(Matrix(BAND), k_max=2)
        assert report.order == 2 and not report.full and report.checked_up_to == 2

    def test_transpose_invariance(self):
        rng = random.Random(3)
        from totpos.generators import GenSpec, random_matrix

        for seed in range(40):
            m = random_matrix(GenSpec(n=rng.randint(2, 4), kind="tn", seed=seed))
            assert tn_order(m).order == tn_order(m.transpose()).order
            p = random_matrix(GenSpec(n=rng.randint(2, 4), kind="tp", seed=seed))
            assert tp_order(p).order == tp_order(p.transpose()).order

    def test_kmax_monotonicity(self):
        from totpos.generators import GenSpec, random_matrix

        for seed in range(30):
            m = random_matrix(GenSpec(n=4, kind="tn", seed=seed + 300))
            full = tn_order(m)
            for a in (1, 2, 3):
                assert tn_order(m, k_max=a).order == min(a, full.order)

    def test_deletion_never_decreases_order(self):
        cases = [Matrix(BAND), Matrix([[1, 2], [2, 1]])]
        from totpos.generators import GenSpec, random_matrix

        cases += [random_matrix(GenSpec(n=4, kind="tn", seed=s)) for s in range(10)]
        for m in cases:
            order = tn_order(m).order
            rows = tuple(range(1, m.rows))
            cols = tuple(range(m.cols))
            sub = m.submatrix(MinorSelector(rows, cols[: len(rows)])) if m.rows > 1 else m
            if m.rows > 1:
                sub = Matrix([m.row(i) for i in range(1, m.rows)])
                assert tn_order(sub).order >= min(order, min(sub.rows, sub.cols))

    def test_fekete_consistency(self):
        # contiguous-only strict orders agree with the full scan on
        # generator outputs of every class and size up to 6
        from totpos.generators import GenSpec, random_matrix

        rng = random.Random(99)
        for trial in range(1000):
            n = rng.randint(2, 6)
            kind = rng.choice(("tn", "tp", "stn", "stp"))
            m = random_matrix(GenSpec(n=n, kind=kind, seed=trial))
            fast = tp_order(m, contiguous=True)
            slow = tp_order(m)
            assert fast.order == slow.order and fast.full == slow.full


class TestTolerance:
    def test_validation(self):
        with pytest.raises(ValueError):
            Tolerance(zero_eps=0.0)

    def test_absolute_mode(self):
        tol = Tolerance(zero_eps=1e-6, relative=False)
        assert tol.sign(5e-7, scale=1e12) == "zero"
        assert tol.sign(-2e-6, scale=1e12) == "neg"

    def test_relative_mode_scales(self):
        tol = Tolerance(zero_eps=1e-10, relative=True)
        assert tol.sign(1e-6, scale=1e6) == "zero"
        assert tol.sign(1e-6, scale=1.0) == "pos"


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=16), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_bareiss_matches_cofactor_expansion(rows):
    m = Matrix(rows)
    assert det_exact(m) == cofactor_det([list(r) for r in rows])
