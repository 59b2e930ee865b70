"""Exact and floating-point substrate for minor-based positivity checks.

Matrices carry either exact rational entries (``fractions.Fraction``) or
double-precision floats; the two arithmetics are never mixed silently.
Determinants are computed fraction-free (Bareiss) on the exact side and by
LU with partial pivoting on the float side, and the order computations
``tn_order`` / ``tp_order`` scan minors in lexicographic order so that
witnesses are deterministic.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

Scalar = Union[Fraction, float]

__all__ = [
    "MixedArithmeticError",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "MinorSelector",
    "Matrix",
    "OrderReport",
    "det_exact",
    "det_float",
    "enumerate_minors",
    "minor_value",
    "tn_order",
    "tp_order",
    "scalar_to_json",
    "scalar_from_json",
]


class MixedArithmeticError(TypeError):
    """Raised when exact rationals and floats meet in one operation."""


@dataclass(frozen=True)
class Tolerance:
    """Sign-at-zero policy for floating-point determinants.

    A value ``v`` counts as zero when ``|v| <= zero_eps * max(1, scale)``
    (or plain ``zero_eps`` when ``relative`` is off), where the scale of a
    determinant is the product of row maxima of the matrix it came from,
    the natural magnitude against which rounding error accumulates.  TN
    checks accept zero, TP checks reject it.
    """

    zero_eps: float = 1e-10
    relative: bool = True

    def __post_init__(self):
        if not (self.zero_eps > 0):
            raise ValueError("zero_eps must be positive")

    def threshold(self, scale: float = 1.0) -> float:
        if self.relative:
            return self.zero_eps * max(1.0, scale)
        return self.zero_eps

    def sign(self, value: float, scale: float = 1.0) -> str:
        if math.isnan(value):
            raise ValueError("cannot classify NaN")
        thr = self.threshold(scale)
        if abs(value) <= thr:
            return "zero"
        return "pos" if value > 0 else "neg"


DEFAULT_TOLERANCE = Tolerance()


def _exact_sign(value: Fraction) -> str:
    if value > 0:
        return "pos"
    if value < 0:
        return "neg"
    return "zero"


@dataclass(frozen=True)
class MinorSelector:
    """Strictly increasing row and column index tuples of equal length."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ValueError("row and column selections must be nonempty and of equal length")
        for idx in (self.rows, self.cols):
            if any(i < 0 for i in idx):
                raise ValueError("indices must be nonnegative")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError("indices must be strictly increasing")

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}


def _is_exact_number(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _validate_points(points, count: int, label: str) -> Optional[tuple]:
    if points is None:
        return None
    pts = tuple(points)
    if len(pts) != count:
        raise ValueError(f"{label} must have length {count}")
    if any(not (a < b) for a, b in zip(pts, pts[1:])):
        raise ValueError(f"{label} must be strictly increasing")
    return pts


class Matrix:
    """Rectangular array of scalars, all exact rationals or all floats.

    Optionally tagged with the strictly increasing grid points that
    produced it when it is a kernel sample.
    """

    __slots__ = ("_entries", "_rows", "_cols", "_exact", "_row_points", "_col_points")

    def __init__(self, entries, row_points=None, col_points=None):
        data = [tuple(row) for row in entries]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ValueError("rows must all have the same length")

        exact = None
        for row in data:
            for x in row:
                if _is_exact_number(x):
                    this = True
                elif isinstance(x, float):
                    this = False
                else:
                    raise TypeError(f"unsupported entry type {type(x).__name__}")
                if exact is None:
                    exact = this
                elif exact is not this:
                    raise MixedArithmeticError(
                        "matrix mixes exact rationals and floats; convert explicitly"
                    )
        if exact:
            data = [tuple(Fraction(x) for x in row) for row in data]

        self._entries = tuple(data)
        self._rows = len(data)
        self._cols = ncols
        self._exact = bool(exact)
        self._row_points = _validate_points(row_points, self._rows, "row_points")
        self._col_points = _validate_points(col_points, self._cols, "col_points")

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def row_points(self) -> Optional[tuple]:
        return self._row_points

    @property
    def col_points(self) -> Optional[tuple]:
        return self._col_points

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self._entries[i][j]

    def row(self, i: int) -> tuple:
        return self._entries[i]

    def entries(self) -> tuple:
        return self._entries

    def submatrix(self, sel: MinorSelector) -> "Matrix":
        if sel.rows[-1] >= self._rows or sel.cols[-1] >= self._cols:
            raise ValueError("selector indices out of range")
        sub = [[self._entries[i][j] for j in sel.cols] for i in sel.rows]
        rp = tuple(self._row_points[i] for i in sel.rows) if self._row_points else None
        cp = tuple(self._col_points[j] for j in sel.cols) if self._col_points else None
        return Matrix(sub, row_points=rp, col_points=cp)

    def transpose(self) -> "Matrix":
        sub = [[self._entries[i][j] for i in range(self._rows)] for j in range(self._cols)]
        return Matrix(sub, row_points=self._col_points, col_points=self._row_points)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self._entries[i][j] == self._entries[j][i]
            for i in range(self._rows)
            for j in range(i + 1, self._cols)
        )

    def to_float(self) -> "Matrix":
        if not self._exact:
            return self
        return Matrix(
            [[float(x) for x in row] for row in self._entries],
            row_points=self._row_points,
            col_points=self._col_points,
        )

    def max_abs(self) -> float:
        return max(abs(float(x)) for row in self._entries for x in row)

    def det_scale(self) -> float:
        """Product of row maxima; the magnitude a determinant competes with."""
        scale = 1.0
        for row in self._entries:
            scale *= max(abs(float(x)) for x in row)
            if scale > 1e300:
                return 1e300
            if scale == 0.0:
                return 0.0
        return scale

    def schur(self, other: "Matrix") -> "Matrix":
        """Entrywise (Hadamard) product; exactness flags must match."""
        if self.shape != other.shape:
            raise ValueError("shape mismatch in Schur product")
        if self._exact is not other._exact:
            raise MixedArithmeticError("Schur product mixes exact and float matrices")
        return Matrix(
            [
                [self._entries[i][j] * other._entries[i][j] for j in range(self._cols)]
                for i in range(self._rows)
            ]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self._exact == other._exact
            and self._entries == other._entries
            and self._row_points == other._row_points
            and self._col_points == other._col_points
        )

    def __hash__(self):
        return hash((self._entries, self._exact))

    def __repr__(self) -> str:
        kind = "exact" if self._exact else "float"
        return f"Matrix({self._rows}x{self._cols}, {kind})"

    def to_json(self) -> dict:
        obj = {
            "rows": self._rows,
            "cols": self._cols,
            "exact": self._exact,
            "entries": [[scalar_to_json(x) for x in row] for row in self._entries],
        }
        if self._row_points is not None:
            obj["row_points"] = [scalar_to_json(p) for p in self._row_points]
        if self._col_points is not None:
            obj["col_points"] = [scalar_to_json(p) for p in self._col_points]
        return obj

    @staticmethod
    def from_json(obj: dict) -> "Matrix":
        exact = bool(obj.get("exact", False))
        entries = [
            [scalar_from_json(x, exact=exact) for x in row] for row in obj["entries"]
        ]
        rp = obj.get("row_points")
        cp = obj.get("col_points")
        if rp is not None:
            rp = [scalar_from_json(p) for p in rp]
        if cp is not None:
            cp = [scalar_from_json(p) for p in cp]
        m = Matrix(entries, row_points=rp, col_points=cp)
        if ("rows" in obj and m.rows != obj["rows"]) or ("cols" in obj and m.cols != obj["cols"]):
            raise ValueError("declared shape does not match entries")
        return m

    @staticmethod
    def from_csv(text: str) -> "Matrix":
        """Parse a float matrix from CSV text (one row per line)."""
        rows = []
        for record in csv.reader(io.StringIO(text)):
            if not record or all(not cell.strip() for cell in record):
                continue
            rows.append([float(cell) for cell in record])
        return Matrix(rows)


def scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, int):
        return str(x)
    return x


def scalar_from_json(x, exact: Optional[bool] = None) -> Scalar:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, bool):
        raise TypeError("boolean is not a scalar")
    if isinstance(x, int):
        if exact is False:
            return float(x)
        return Fraction(x)
    if isinstance(x, float):
        if exact is True:
            raise ValueError("exact matrix may not contain bare floats; use 'p/q' strings")
        return x
    raise TypeError(f"cannot parse scalar from {type(x).__name__}")


# ---------------------------------------------------------------------------
# Determinants


def _bareiss_int(rows: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination; exact integer determinant."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det_exact(m: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix (Bareiss, no rounding)."""
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    if not m.exact:
        raise MixedArithmeticError("det_exact requires exact rational entries")
    n = m.rows
    if n == 1:
        return m[0, 0]
    scale = Fraction(1)
    rows = []
    for i in range(n):
        denoms = [x.denominator for x in m.row(i)]
        lcm = math.lcm(*denoms)
        scale *= lcm
        rows.append([int(x * lcm) for x in m.row(i)])
    return Fraction(_bareiss_int(rows), 1) / scale


def lu_det(rows):
    """Generic LU-with-partial-pivoting determinant over any ordered field.

    Works for floats and for mpmath.mpf entries alike; mutates ``rows``.
    """
    n = len(rows)
    sign = 1
    det = 1
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(rows[i][k]))
        if rows[p][k] == 0:
            return rows[p][k] * 0
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        pivot = rows[k][k]
        det = det * pivot
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            for j in range(k + 1, n):
                rows[i][j] = rows[i][j] - factor * rows[k][j]
    return det if sign > 0 else -det


def det_float(m: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[float, str]:
    """LU determinant of a float matrix with tolerance-classified sign."""
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    if m.exact:
        raise MixedArithmeticError("det_float requires float entries; use to_float()")
    for row in m.entries():
        for x in row:
            if math.isnan(x) or math.isinf(x):
                raise ValueError("matrix contains NaN or Inf")
    value = float(lu_det([list(row) for row in m.entries()]))
    return value, tol.sign(value, scale=m.det_scale())


# ---------------------------------------------------------------------------
# Minor enumeration and TN/TP orders


def enumerate_minors(m: Matrix, r: int, mode: str = "all") -> Iterator[MinorSelector]:
    """Yield every r x r selector exactly once, in lexicographic order.

    ``contiguous`` restricts to consecutive index runs (the Fekete test set).
    """
    if not (1 <= r <= min(m.rows, m.cols)):
        raise ValueError(f"minor size {r} out of range for {m.rows}x{m.cols}")
    if mode == "all":
        row_sets = itertools.combinations(range(m.rows), r)
        col_sets = list(itertools.combinations(range(m.cols), r))
    elif mode == "contiguous":
        row_sets = (tuple(range(i, i + r)) for i in range(m.rows - r + 1))
        col_sets = [tuple(range(j, j + r)) for j in range(m.cols - r + 1)]
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    for rows in row_sets:
        for cols in col_sets:
            yield MinorSelector(rows, cols)


def minor_value(m: Matrix, sel: MinorSelector, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[Scalar, str]:
    """Determinant of the selected minor plus its classified sign."""
    sub = m.submatrix(sel)
    if m.exact:
        value = det_exact(sub)
        return value, _exact_sign(value)
    return det_float(sub, tol)


@dataclass(frozen=True)
class OrderReport:
    """Computed TN/TP order with a violating witness when bounded.

    ``order`` equals ``min(rows, cols)`` when ``full`` is set.  An order of
    zero means the matrix already fails at the entry level.
    """

    order: int
    full: bool
    checked_up_to: int
    witness: Optional[tuple[MinorSelector, Scalar]] = None

    def to_json(self) -> dict:
        obj = {
            "order": "full" if self.full else self.order,
            "checked_up_to": self.checked_up_to,
            "witness": None,
        }
        if self.witness is not None:
            sel, value = self.witness
            obj["witness"] = dict(sel.to_json(), det=scalar_to_json(value))
        return obj


def _order_scan(m: Matrix, k_max, tol: Tolerance, accept: frozenset, mode: str) -> OrderReport:
    limit = min(m.rows, m.cols)
    if k_max is None or k_max == math.inf:
        cap = limit
    else:
        if k_max < 1:
            raise ValueError("k_max must be at least 1")
        cap = min(int(k_max), limit)
    for r in range(1, cap + 1):
        for sel in enumerate_minors(m, r, mode=mode):
            value, sign = minor_value(m, sel, tol)
            if sign not in accept:
                return OrderReport(order=r - 1, full=False, checked_up_to=cap, witness=(sel, value))
    return OrderReport(order=cap, full=cap == limit, checked_up_to=cap)


def tn_order(m: Matrix, k_max=None, tol: Tolerance = DEFAULT_TOLERANCE) -> OrderReport:
    """Largest k <= k_max with every minor of size <= k nonnegative."""
    return _order_scan(m, k_max, tol, frozenset({"pos", "zero"}), "all")


def tp_order(
    m: Matrix,
    k_max=None,
    tol: Tolerance = DEFAULT_TOLERANCE,
    contiguous: bool = False,
) -> OrderReport:
    """Largest k <= k_max with every minor of size <= k strictly positive.

    With ``contiguous`` set, only consecutive-index minors are tested; by the
    Fekete criterion this decides the same order (sound for TP, not for TN).
    """
    mode = "contiguous" if contiguous else "all"
    return _order_scan(m, k_max, tol, frozenset({"pos"}), mode)
