"""Random TN/TP/STN/STP matrix generation for property tests.

TN and TP matrices come from products of elementary nonnegative bidiagonal
factors and a nonnegative diagonal (all entries rational so verification is
exact); the symmetric classes are Gram squares W W^T of such products,
which Cauchy-Binet keeps inside the class.  Every emitted matrix is
verified to have the requested full order before it is returned: the
construction is rejection-free, so a verification failure is a bug and is
raised, never masked.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import kernels
from .linalg import Matrix, tn_order, tp_order

__all__ = ["GenSpec", "GeneratorError", "random_matrix", "random_kernel_tuple"]


class GeneratorError(RuntimeError):
    """Internal self-verification failed; indicates a generator bug."""


@dataclass(frozen=True)
class GenSpec:
    n: int
    kind: str  # tn | tp | stn | stp
    low: Fraction = Fraction(1, 4)
    high: Fraction = Fraction(4)
    seed: int = 0
    zero_prob: float = 0.3
    max_denominator: int = 16

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("size must be at least 1")
        if self.kind not in ("tn", "tp", "stn", "stp"):
            raise ValueError(f"unknown matrix class {self.kind!r}")
        low = Fraction(self.low)
        high = Fraction(self.high)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "high", high)
        if not (0 < low < high):
            raise ValueError("parameter range must satisfy 0 < low < high")
        if not (0 <= self.zero_prob < 1):
            raise ValueError("zero_prob must lie in [0, 1)")
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be positive")


def _rand_fraction(rng: random.Random, low: Fraction, high: Fraction, max_den: int) -> Fraction:
    while True:
        d = rng.randint(1, max_den)
        lo = math.ceil(low * d)
        hi = math.floor(high * d)
        if lo <= hi:
            return Fraction(rng.randint(lo, hi), d)


def _matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p)]
        for i in range(n)
    ]


def _bidiagonal(n: int, params, lower: bool):
    rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for i, v in enumerate(params):
        if lower:
            rows[i + 1][i] = Fraction(v)
        else:
            rows[i][i + 1] = Fraction(v)
    return rows


def _factor_product(rng: random.Random, spec: GenSpec, strict: bool):
    """Product of n-1 full lower factors, a diagonal, and n-1 upper factors."""
    n = spec.n

    def draw() -> Fraction:
        if not strict and rng.random() < spec.zero_prob:
            return Fraction(0)
        return _rand_fraction(rng, spec.low, spec.high, spec.max_denominator)

    diag = [_rand_fraction(rng, spec.low, spec.high, spec.max_denominator) for _ in range(n)]
    if not strict:
        diag = [
            Fraction(0) if rng.random() < spec.zero_prob / 2 else v for v in diag
        ]
    acc = [[diag[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for _ in range(n - 1):
        acc = _matmul(_bidiagonal(n, [draw() for _ in range(n - 1)], lower=True), acc)
        acc = _matmul(acc, _bidiagonal(n, [draw() for _ in range(n - 1)], lower=False))
    return acc


def random_matrix(spec: GenSpec) -> Matrix:
    """Draw one matrix of the requested class, exactly verified.

    Strict draws are checked through the contiguous-minor (Fekete) fast
    path, which decides full positivity; symmetric nonnegative draws get a
    full exact minor scan.  Plain TN draws are TN by construction
    (Cauchy-Binet over nonnegative factors), which the test suite spot
    checks on samples.
    """
    rng = random.Random(spec.seed)
    strict = spec.kind in ("tp", "stp")
    raw = _factor_product(rng, spec, strict)
    if spec.kind in ("stn", "stp"):
        raw = _matmul(raw, [list(col) for col in zip(*raw)])
    m = Matrix(raw)
    if strict:
        report = tp_order(m, contiguous=True)
        if not report.full:
            raise GeneratorError(f"{spec.kind} draw failed strict verification: {report}")
    elif spec.kind == "stn":
        if not m.is_symmetric():
            raise GeneratorError("stn draw is not symmetric")
        report = tn_order(m)
        if not report.full:
            raise GeneratorError(f"stn draw failed verification: {report}")
    return m


_TP_KERNELS = (kernels.VandermondeExp, kernels.RankOneApprox)


def random_kernel_tuple(coord_specs: Sequence, X, Y) -> list[Matrix]:
    """Materialize one matrix per coordinate on a shared grid.

    Each entry of ``coord_specs`` is either a :class:`GenSpec` (a random
    matrix of that class, which must match the grid size) or a kernel spec
    from the zoo; every coordinate is verified to have full order of its
    expected class on the grid.
    """
    xs = kernels.as_points(X)
    ys = kernels.as_points(Y)
    out = []
    for spec in coord_specs:
        if isinstance(spec, GenSpec):
            if spec.n != len(xs) or spec.n != len(ys):
                raise ValueError("generated coordinate size must match the grid")
            m = random_matrix(spec)
            m = Matrix(m.entries(), row_points=xs.values, col_points=ys.values)
        else:
            m = kernels.sample_kernel(spec, xs, ys)
            if isinstance(spec, _TP_KERNELS):
                report = tp_order(m.to_float() if m.exact else m)
                if not report.full:
                    raise GeneratorError(f"kernel sample not fully positive: {spec!r}")
            else:
                report = tn_order(m)
                if not report.full:
                    raise GeneratorError(f"kernel sample not totally nonnegative: {spec!r}")
        out.append(m)
    return out
