"""Kernel zoo: closed-form kernels, Polya frequency functions, Toeplitz
lifts, reparametrizations, padding, inflation, and Gaussian smoothing.

Every constructor here is a small closed-form description; ``sample_kernel``
materializes it on strictly increasing grids as a :class:`~totpos.linalg.Matrix`
with the grid points attached.  Sampling is exact (rational) whenever the
formula and the grid allow it, float otherwise.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .linalg import Matrix, Scalar

__all__ = [
    "OrderedPoints",
    "OneSidedExp",
    "Omega",
    "EvenM",
    "GaussianPF",
    "PFSpec",
    "pf_eval",
    "TabulatedPF",
    "gaussian_smooth_pf",
    "PiecewiseLinearMap",
    "piecewise_linear",
    "VandermondeExp",
    "Jain",
    "JKS",
    "Hankel",
    "RankOne",
    "RankOneApprox",
    "ToeplitzPF",
    "Constant",
    "Padded",
    "Inflation",
    "KernelSpec",
    "sample_kernel",
    "pad",
    "inflate",
    "toeplitz_sample",
    "whitney_smooth_kernel",
    "pf_to_json",
    "pf_from_json",
    "kernel_to_json",
    "kernel_from_json",
]


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class OrderedPoints:
    """Strictly increasing finite tuple of sampling points."""

    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("points must be nonempty")
        if any(not (a < b) for a, b in zip(vals, vals[1:])):
            raise ValueError("points must be strictly increasing")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def all_exact(self) -> bool:
        return all(_is_exact(v) for v in self.values)


def as_points(obj) -> OrderedPoints:
    if isinstance(obj, OrderedPoints):
        return obj
    return OrderedPoints(tuple(obj))


# ---------------------------------------------------------------------------
# Polya frequency functions


@dataclass(frozen=True)
class OneSidedExp:
    """One-sided exponential: e^{-a(x-delta)} for x > delta, 1/2 at the jump,
    0 below.  The midpoint value at the jump makes it regular."""

    a: float
    delta: float = 0.0

    def __post_init__(self):
        if not (self.a > 0):
            raise ValueError("decay rate a must be positive")


@dataclass(frozen=True)
class Omega:
    """x e^{-x} on the positive axis (the convolution square of the
    one-sided unit exponential); continuous, vanishes for x <= 0."""


@dataclass(frozen=True)
class EvenM:
    """(gamma+1) e^{-gamma |x|} - gamma e^{-(gamma+1)|x|}, an even PF
    function whose integer powers > 1 fail total nonnegativity."""

    gamma: float

    def __post_init__(self):
        if not (self.gamma > 0):
            raise ValueError("gamma must be positive")


@dataclass(frozen=True)
class GaussianPF:
    """Gaussian density with the given variance."""

    variance: float

    def __post_init__(self):
        if not (self.variance > 0):
            raise ValueError("variance must be positive")


PFSpec = Union[OneSidedExp, Omega, EvenM, GaussianPF]


def pf_eval(pf: PFSpec, x) -> float:
    """Evaluate a PF function at a point, including regular jump values."""
    x = float(x)
    if isinstance(pf, OneSidedExp):
        if x > pf.delta:
            return math.exp(-pf.a * (x - pf.delta))
        if x == pf.delta:
            return 0.5
        return 0.0
    if isinstance(pf, Omega):
        return x * math.exp(-x) if x > 0 else 0.0
    if isinstance(pf, EvenM):
        g = pf.gamma
        return (g + 1) * math.exp(-g * abs(x)) - g * math.exp(-(g + 1) * abs(x))
    if isinstance(pf, GaussianPF):
        return math.exp(-x * x / (2.0 * pf.variance)) / math.sqrt(2.0 * math.pi * pf.variance)
    raise TypeError(f"not a PF spec: {pf!r}")


def _pf_support(pf: PFSpec) -> tuple[float, float]:
    # window outside which the function is negligible (< ~1e-16 relative)
    if isinstance(pf, OneSidedExp):
        return (pf.delta, pf.delta + 40.0 / pf.a)
    if isinstance(pf, Omega):
        return (0.0, 45.0)
    if isinstance(pf, EvenM):
        return (-40.0 / pf.gamma, 40.0 / pf.gamma)
    if isinstance(pf, GaussianPF):
        s = math.sqrt(pf.variance)
        return (-9.0 * s, 9.0 * s)
    raise TypeError(f"not a PF spec: {pf!r}")


@dataclass(frozen=True)
class TabulatedPF:
    """Uniformly tabulated function evaluated by linear interpolation;
    zero outside the table window."""

    xs: tuple
    ys: tuple

    def __call__(self, x) -> float:
        return float(np.interp(float(x), self.xs, self.ys, left=0.0, right=0.0))

    def integral(self) -> float:
        xs = np.asarray(self.xs)
        ys = np.asarray(self.ys)
        return float(np.sum((ys[1:] + ys[:-1]) * 0.5 * np.diff(xs)))


def gaussian_smooth_pf(pf: PFSpec, variance: float, step: Optional[float] = None) -> TabulatedPF:
    """Convolve a PF function with a Gaussian of the given variance.

    Midpoint quadrature on a uniform grid (step sigma/20 by default)
    spanning six standard deviations beyond the support window; the result
    is tabulated and interpolated linearly.  Sampling at cell midpoints
    sidesteps the jump of the one-sided exponential.
    """
    if not (variance > 0):
        raise ValueError("variance must be positive")
    sigma = math.sqrt(variance)
    h = sigma / 20.0 if step is None else float(step)
    if not (h > 0):
        raise ValueError("step must be positive")
    lo, hi = _pf_support(pf)
    n_src = max(int(math.ceil((hi - lo) / h)), 2)
    ts = lo + (np.arange(n_src) + 0.5) * h
    lam = np.array([pf_eval(pf, t) for t in ts])
    half = 6.0 * sigma
    n_ker = max(int(math.ceil(2.0 * half / h)), 3)
    us = -half + (np.arange(n_ker) + 0.5) * h
    ker = np.exp(-(us**2) / (2.0 * variance)) / math.sqrt(2.0 * math.pi * variance)
    ys = np.convolve(lam, ker) * h
    x0 = float(ts[0] + us[0])
    xs = x0 + np.arange(len(ys)) * h
    return TabulatedPF(xs=tuple(float(x) for x in xs), ys=tuple(float(y) for y in ys))


# ---------------------------------------------------------------------------
# Piecewise-linear reparametrizations


@dataclass(frozen=True)
class PiecewiseLinearMap:
    """Order-preserving injection interpolating anchor pairs linearly and
    extrapolating with the end segment slopes (slope 1 for one anchor)."""

    inputs: tuple
    outputs: tuple

    def __post_init__(self):
        ins = tuple(self.inputs)
        outs = tuple(self.outputs)
        object.__setattr__(self, "inputs", ins)
        object.__setattr__(self, "outputs", outs)
        if len(ins) != len(outs) or not ins:
            raise ValueError("anchor tuples must be nonempty and of equal length")
        if any(not (a < b) for a, b in zip(ins, ins[1:])):
            raise ValueError("anchor inputs must be strictly increasing")
        if any(not (a < b) for a, b in zip(outs, outs[1:])):
            raise ValueError("anchor outputs must be strictly increasing")

    def __call__(self, x):
        ins, outs = self.inputs, self.outputs
        n = len(ins)
        if n == 1:
            return outs[0] + (x - ins[0])
        k = bisect.bisect_left(ins, x)
        if k <= 0:
            seg = 0
        elif k >= n:
            seg = n - 2
        else:
            if ins[k] == x:
                return outs[k]
            seg = k - 1
        slope = (outs[seg + 1] - outs[seg]) / (ins[seg + 1] - ins[seg])
        return outs[seg] + (x - ins[seg]) * slope


def piecewise_linear(anchor_inputs, anchor_outputs) -> PiecewiseLinearMap:
    return PiecewiseLinearMap(tuple(anchor_inputs), tuple(anchor_outputs))


IDENTITY_MAP = PiecewiseLinearMap((0, 1), (0, 1))


# ---------------------------------------------------------------------------
# Kernel specs


@dataclass(frozen=True)
class VandermondeExp:
    """K(x, y) = exp(x*y / scale); totally positive on increasing grids."""

    scale: float = 1.0

    def __post_init__(self):
        if not (self.scale > 0):
            raise ValueError("scale must be positive")


@dataclass(frozen=True)
class Jain:
    """K(x, y) = 1 + x*y."""


@dataclass(frozen=True)
class JKS:
    """K(x, y) = max(1 + x*y, 0); agrees with Jain on positive grids."""


@dataclass(frozen=True)
class Hankel:
    """K(x, x') = 1 + u0^(x + x') for u0 in (0, 1); rank-two symmetric TN."""

    u0: Union[Fraction, float]

    def __post_init__(self):
        if not (0 < self.u0 < 1):
            raise ValueError("u0 must lie in (0, 1)")


@dataclass
class RankOne:
    """K(x, y) = phi(x) * psi(y) with positive tabulated functions."""

    phi: dict
    psi: dict


@dataclass
class RankOneApprox:
    """K(x, y) = exp(x*y/n) * phi(x) * psi(y): totally positive approximants
    of the rank-one kernel, converging entrywise as n grows."""

    phi: dict
    psi: dict
    n: float

    def __post_init__(self):
        if not (self.n > 0):
            raise ValueError("n must be positive")


@dataclass(frozen=True)
class ToeplitzPF:
    """K(x, y) = pf(phi_x(x) - phi_y(y)), optionally with a reflected
    argument (``negate``) so mirrored one-sided exponentials need no
    separate spec."""

    pf: PFSpec
    phi_x: Optional[PiecewiseLinearMap] = None
    phi_y: Optional[PiecewiseLinearMap] = None
    negate: bool = False


@dataclass(frozen=True)
class Constant:
    """Constant kernel c >= 0."""

    c: Union[Fraction, float, int]

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("constant must be nonnegative")


@dataclass
class Padded:
    """Inner kernel or matrix on a sub-grid, a constant 0 or 1 outside."""

    inner: Union["KernelSpec", Matrix]
    inner_x: tuple
    inner_y: tuple
    pad_value: int = 0

    def __post_init__(self):
        self.inner_x = tuple(self.inner_x)
        self.inner_y = tuple(self.inner_y)
        if self.pad_value not in (0, 1):
            raise ValueError("pad_value must be 0 or 1")
        if isinstance(self.inner, Matrix):
            if (len(self.inner_x), len(self.inner_y)) != self.inner.shape:
                raise ValueError("inner grid must match the matrix shape")


@dataclass
class Inflation:
    """Entries of a matrix replicated on eps-boxes around anchor pairs,
    zero elsewhere."""

    table: Matrix
    x_anchors: tuple
    y_anchors: tuple
    eps: Union[Fraction, float]

    def __post_init__(self):
        self.x_anchors = tuple(self.x_anchors)
        self.y_anchors = tuple(self.y_anchors)
        for anchors, count, label in (
            (self.x_anchors, self.table.rows, "x_anchors"),
            (self.y_anchors, self.table.cols, "y_anchors"),
        ):
            if len(anchors) != count:
                raise ValueError(f"{label} must match the table dimension")
            if any(not (a < b) for a, b in zip(anchors, anchors[1:])):
                raise ValueError(f"{label} must be strictly increasing")
        gaps = [b - a for a, b in zip(self.x_anchors, self.x_anchors[1:])]
        gaps += [b - a for a, b in zip(self.y_anchors, self.y_anchors[1:])]
        if gaps and not (self.eps < min(gaps) / 2):
            raise ValueError("eps must be less than half the minimal anchor gap")
        if not (self.eps > 0):
            raise ValueError("eps must be positive")


KernelSpec = Union[
    VandermondeExp,
    Jain,
    JKS,
    Hankel,
    RankOne,
    RankOneApprox,
    ToeplitzPF,
    Constant,
    Padded,
    Inflation,
]


def _integral(x) -> bool:
    return _is_exact(x) and Fraction(x).denominator == 1


def sample_kernel(spec: KernelSpec, X, Y) -> Matrix:
    """Materialize a kernel on grids X, Y; entry (i, j) = K(X_i, Y_j)."""
    xs = as_points(X)
    ys = as_points(Y)

    if isinstance(spec, Constant):
        c = spec.c if _is_exact(spec.c) else float(spec.c)
        rows = [[c] * len(ys) for _ in xs]
    elif isinstance(spec, (Jain, JKS)):
        exact = xs.all_exact and ys.all_exact
        clamp = isinstance(spec, JKS)

        def jain(x, y):
            v = (1 + x * y) if exact else (1.0 + float(x) * float(y))
            if clamp:
                zero = Fraction(0) if exact else 0.0
                return max(v, zero)
            return v

        rows = [[jain(x, y) for y in ys] for x in xs]
    elif isinstance(spec, Hankel):
        exact = _is_exact(spec.u0) and all(_integral(x + y) for x in xs for y in ys)
        if exact:
            u = Fraction(spec.u0)
            rows = [[1 + u ** int(x + y) for y in ys] for x in xs]
        else:
            u = float(spec.u0)
            rows = [[1.0 + u ** float(x + y) for y in ys] for x in xs]
    elif isinstance(spec, VandermondeExp):
        s = float(spec.scale)
        rows = [[math.exp(float(x) * float(y) / s) for y in ys] for x in xs]
    elif isinstance(spec, RankOne):
        try:
            phi = [spec.phi[x] for x in xs]
            psi = [spec.psi[y] for y in ys]
        except KeyError as exc:
            raise ValueError(f"rank-one kernel not tabulated at point {exc.args[0]!r}") from exc
        if any(v <= 0 for v in phi + psi):
            raise ValueError("rank-one tables must be positive")
        exact = all(_is_exact(v) for v in phi + psi)
        if exact:
            rows = [[Fraction(p) * Fraction(q) for q in psi] for p in phi]
        else:
            rows = [[float(p) * float(q) for q in psi] for p in phi]
    elif isinstance(spec, RankOneApprox):
        base = sample_kernel(RankOne(spec.phi, spec.psi), xs, ys).to_float()
        n = float(spec.n)
        rows = [
            [base[i, j] * math.exp(float(xs[i]) * float(ys[j]) / n) for j in range(len(ys))]
            for i in range(len(xs))
        ]
    elif isinstance(spec, ToeplitzPF):
        return toeplitz_sample(spec.pf, spec.phi_x, spec.phi_y, xs, ys, negate=spec.negate)
    elif isinstance(spec, Padded):
        xi = {x: i for i, x in enumerate(spec.inner_x)}
        yi = {y: j for j, y in enumerate(spec.inner_y)}
        missing = [p for p in spec.inner_x if p not in set(xs.values)]
        missing += [p for p in spec.inner_y if p not in set(ys.values)]
        if missing:
            raise ValueError(f"inner grid points {missing!r} are not in the sampling grid")
        if isinstance(spec.inner, Matrix):
            inner = spec.inner
        else:
            inner = sample_kernel(spec.inner, spec.inner_x, spec.inner_y)
        fill = Fraction(spec.pad_value) if inner.exact else float(spec.pad_value)
        rows = [
            [
                inner[xi[x], yi[y]] if (x in xi and y in yi) else fill
                for y in ys
            ]
            for x in xs
        ]
    elif isinstance(spec, Inflation):
        tbl = spec.table
        zero = Fraction(0) if tbl.exact else 0.0

        def boxed(x, y):
            for i, xa in enumerate(spec.x_anchors):
                if abs(x - xa) < spec.eps:
                    for j, ya in enumerate(spec.y_anchors):
                        if abs(y - ya) < spec.eps:
                            return tbl[i, j]
                    return zero
            return zero

        rows = [[boxed(x, y) for y in ys] for x in xs]
    else:
        raise TypeError(f"not a kernel spec: {spec!r}")

    return Matrix(rows, row_points=xs.values, col_points=ys.values)


def toeplitz_sample(
    pf,
    phi_x: Optional[PiecewiseLinearMap],
    phi_y: Optional[PiecewiseLinearMap],
    X,
    Y,
    negate: bool = False,
) -> Matrix:
    """Sample (x, y) -> pf(phi_x(x) - phi_y(y)) on the given grids.

    ``pf`` may be a PF spec, a tabulated function, or any callable.
    ``negate`` reflects the argument, giving the mirrored PF variant.
    """
    xs = as_points(X)
    ys = as_points(Y)
    fx = phi_x if phi_x is not None else IDENTITY_MAP
    fy = phi_y if phi_y is not None else IDENTITY_MAP
    if isinstance(pf, (OneSidedExp, Omega, EvenM, GaussianPF)):
        f: Callable = lambda t: pf_eval(pf, t)
    else:
        f = pf
    rows = []
    for x in xs:
        u = fx(x)
        row = []
        for y in ys:
            d = u - fy(y)
            if negate:
                d = -d
            row.append(float(f(float(d))))
        rows.append(row)
    return Matrix(rows, row_points=xs.values, col_points=ys.values)


def pad(
    inner: Matrix,
    X,
    Y,
    row_placement: Sequence[int],
    col_placement: Sequence[int],
    pad_value: int = 0,
) -> Matrix:
    """Embed a matrix into a larger grid, filling the rest with 0 or 1.

    ``row_placement`` / ``col_placement`` give the target indices of the
    inner rows and columns; they must be strictly increasing so the
    embedding is order-preserving.
    """
    xs = as_points(X)
    ys = as_points(Y)
    rp = tuple(row_placement)
    cp = tuple(col_placement)
    if pad_value not in (0, 1):
        raise ValueError("pad_value must be 0 or 1")
    if len(rp) != inner.rows or len(cp) != inner.cols:
        raise ValueError("placement must cover every inner row and column")
    for idx, bound, label in ((rp, len(xs), "row"), (cp, len(ys), "column")):
        if any(i < 0 or i >= bound for i in idx):
            raise ValueError(f"{label} placement out of range")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"{label} placement must be order-preserving")
    fill = Fraction(pad_value) if inner.exact else float(pad_value)
    rows = [[fill] * len(ys) for _ in xs]
    for i, ti in enumerate(rp):
        for j, tj in enumerate(cp):
            rows[ti][tj] = inner[i, j]
    return Matrix(rows, row_points=xs.values, col_points=ys.values)


def inflate(A: Matrix, x_anchors, y_anchors, eps) -> Inflation:
    """Inflation of a matrix to eps-boxes around anchor pairs.

    Sampling the result on any grid refining the anchors reproduces A as a
    submatrix; off-box samples are zero.
    """
    return Inflation(table=A, x_anchors=tuple(x_anchors), y_anchors=tuple(y_anchors), eps=eps)


def whitney_smooth_kernel(m: Matrix, variance: float) -> Matrix:
    """Discrete Gaussian smoothing of a sampled kernel on its own grid.

    Entry (i, j) becomes sum_kl m[k,l] w_x(i,k) w_y(j,l) with Gaussian
    weights normalized to unit mass per row; constants are fixed points and
    symmetric inputs on a shared grid give bit-exact symmetric output.
    """
    if m.row_points is None or m.col_points is None:
        raise ValueError("whitney smoothing needs row_points and col_points")
    if not (variance > 0):
        raise ValueError("variance must be positive")

    def weights(points):
        pts = [float(p) for p in points]
        w = []
        for x in pts:
            row = [math.exp(-((x - t) ** 2) / (2.0 * variance)) for t in pts]
            total = sum(row)
            w.append([v / total for v in row])
        return w

    wx = weights(m.row_points)
    wy = weights(m.col_points)
    vals = [[float(x) for x in row] for row in m.entries()]
    n, p = m.shape

    def entry(i, j):
        return sum(
            wx[i][k] * wy[j][l] * vals[k][l] for k in range(n) for l in range(p)
        )

    symmetric = (
        n == p
        and tuple(m.row_points) == tuple(m.col_points)
        and m.is_symmetric()
    )
    out = [[0.0] * p for _ in range(n)]
    if symmetric:
        for i in range(n):
            for j in range(i, p):
                v = entry(i, j)
                out[i][j] = v
                out[j][i] = v
    else:
        for i in range(n):
            for j in range(p):
                out[i][j] = entry(i, j)
    return Matrix(out, row_points=m.row_points, col_points=m.col_points)


# ---------------------------------------------------------------------------
# JSON forms (tagged unions)


def pf_to_json(pf) -> dict:
    if isinstance(pf, OneSidedExp):
        return {"kind": "one_sided_exp", "a": pf.a, "delta": pf.delta}
    if isinstance(pf, Omega):
        return {"kind": "omega"}
    if isinstance(pf, EvenM):
        return {"kind": "even_m", "gamma": pf.gamma}
    if isinstance(pf, GaussianPF):
        return {"kind": "gaussian", "variance": pf.variance}
    raise TypeError(f"not a PF spec: {pf!r}")


def pf_from_json(obj: dict) -> PFSpec:
    kind = obj["kind"]
    if kind == "one_sided_exp":
        return OneSidedExp(a=obj["a"], delta=obj.get("delta", 0.0))
    if kind == "omega":
        return Omega()
    if kind == "even_m":
        return EvenM(gamma=obj["gamma"])
    if kind == "gaussian":
        return GaussianPF(variance=obj["variance"])
    raise ValueError(f"unknown PF kind {kind!r}")


def _map_to_json(plm: Optional[PiecewiseLinearMap]):
    if plm is None:
        return None
    return {
        "inputs": [_point_to_json(v) for v in plm.inputs],
        "outputs": [_point_to_json(v) for v in plm.outputs],
    }


def _map_from_json(obj) -> Optional[PiecewiseLinearMap]:
    if obj is None:
        return None
    return PiecewiseLinearMap(
        tuple(_point_from_json(v) for v in obj["inputs"]),
        tuple(_point_from_json(v) for v in obj["outputs"]),
    )


def _point_to_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def _point_from_json(v):
    if isinstance(v, str):
        return Fraction(v)
    return v


def _table_to_json(table: dict) -> list:
    return [[_point_to_json(k), _point_to_json(v)] for k, v in table.items()]


def _table_from_json(items) -> dict:
    return {_point_from_json(k): _point_from_json(v) for k, v in items}


def kernel_to_json(spec) -> dict:
    if isinstance(spec, VandermondeExp):
        return {"kind": "vandermonde_exp", "scale": spec.scale}
    if isinstance(spec, Jain):
        return {"kind": "jain"}
    if isinstance(spec, JKS):
        return {"kind": "jks"}
    if isinstance(spec, Hankel):
        return {"kind": "hankel", "u0": _point_to_json(spec.u0)}
    if isinstance(spec, RankOne):
        return {"kind": "rank_one", "phi": _table_to_json(spec.phi), "psi": _table_to_json(spec.psi)}
    if isinstance(spec, RankOneApprox):
        return {
            "kind": "rank_one_approx",
            "phi": _table_to_json(spec.phi),
            "psi": _table_to_json(spec.psi),
            "n": spec.n,
        }
    if isinstance(spec, ToeplitzPF):
        return {
            "kind": "toeplitz_pf",
            "pf": pf_to_json(spec.pf),
            "phi_x": _map_to_json(spec.phi_x),
            "phi_y": _map_to_json(spec.phi_y),
            "negate": spec.negate,
        }
    if isinstance(spec, Constant):
        return {"kind": "constant", "c": _point_to_json(spec.c)}
    if isinstance(spec, Padded):
        if isinstance(spec.inner, Matrix):
            inner = {"matrix": spec.inner.to_json()}
        else:
            inner = {"kernel": kernel_to_json(spec.inner)}
        return {
            "kind": "padded",
            "inner": inner,
            "inner_x": [_point_to_json(v) for v in spec.inner_x],
            "inner_y": [_point_to_json(v) for v in spec.inner_y],
            "pad_value": spec.pad_value,
        }
    if isinstance(spec, Inflation):
        return {
            "kind": "inflation",
            "table": spec.table.to_json(),
            "x_anchors": [_point_to_json(v) for v in spec.x_anchors],
            "y_anchors": [_point_to_json(v) for v in spec.y_anchors],
            "eps": _point_to_json(spec.eps),
        }
    raise TypeError(f"not a kernel spec: {spec!r}")


def kernel_from_json(obj: dict):
    kind = obj["kind"]
    if kind == "vandermonde_exp":
        return VandermondeExp(scale=obj.get("scale", 1.0))
    if kind == "jain":
        return Jain()
    if kind == "jks":
        return JKS()
    if kind == "hankel":
        return Hankel(u0=_point_from_json(obj["u0"]))
    if kind == "rank_one":
        return RankOne(phi=_table_from_json(obj["phi"]), psi=_table_from_json(obj["psi"]))
    if kind == "rank_one_approx":
        return RankOneApprox(
            phi=_table_from_json(obj["phi"]),
            psi=_table_from_json(obj["psi"]),
            n=obj["n"],
        )
    if kind == "toeplitz_pf":
        return ToeplitzPF(
            pf=pf_from_json(obj["pf"]),
            phi_x=_map_from_json(obj.get("phi_x")),
            phi_y=_map_from_json(obj.get("phi_y")),
            negate=bool(obj.get("negate", False)),
        )
    if kind == "constant":
        return Constant(c=_point_from_json(obj["c"]))
    if kind == "padded":
        inner_obj = obj["inner"]
        if "matrix" in inner_obj:
            inner = Matrix.from_json(inner_obj["matrix"])
        else:
            inner = kernel_from_json(inner_obj["kernel"])
        return Padded(
            inner=inner,
            inner_x=tuple(_point_from_json(v) for v in obj["inner_x"]),
            inner_y=tuple(_point_from_json(v) for v in obj["inner_y"]),
            pad_value=obj.get("pad_value", 0),
        )
    if kind == "inflation":
        return Inflation(
            table=Matrix.from_json(obj["table"]),
            x_anchors=tuple(_point_from_json(v) for v in obj["x_anchors"]),
            y_anchors=tuple(_point_from_json(v) for v in obj["y_anchors"]),
            eps=_point_from_json(obj["eps"]),
        )
    raise ValueError(f"unknown kernel kind {kind!r}")
