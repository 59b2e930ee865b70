"""Embed a TN 2x2 matrix into a symmetric 3x3 TN matrix.

For A = [[a, b], [c, d]] with c > 0 the completion is

    [[*, a, b],
     [a, c, d],
     [b, d, (d^2 + 1)/c]]

with the free corner * chosen as the smallest value satisfying every minor
constraint that involves it, so the construction is deterministic and the
choice is testably minimal.  When b != 0 = c the transpose is completed
instead and A reappears as the bottom-left 2x2 block; when b = c = 0 the
matrix is padded by zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import Matrix, MinorSelector, Scalar

__all__ = ["CompletionResult", "stn_complete", "star_lower_bounds"]


@dataclass(frozen=True)
class CompletionResult:
    output: Matrix
    star: Scalar
    transposed: bool
    placement: MinorSelector

    def to_json(self) -> dict:
        from .linalg import scalar_to_json

        return {
            "output": self.output.to_json(),
            "star": scalar_to_json(self.star),
            "transposed": self.transposed,
            "placement": self.placement.to_json(),
        }


def _require_tn_2x2(m: Matrix):
    if m.shape != (2, 2):
        raise ValueError("completion expects a 2x2 matrix")
    for i in range(2):
        for j in range(2):
            if m[i, j] < 0:
                raise ValueError(f"entry ({i},{j}) = {m[i, j]} is negative; input is not TN")
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if det < 0:
        raise ValueError(f"determinant {det} is negative; input is not TN")


def star_lower_bounds(m: Matrix) -> list:
    """Lower bounds on the free corner for the c > 0 completion route.

    The bounds come from, in order: the (0,1)x(0,2)-style minors * d >= a b
    (skipped when d = 0, which forces b = 0), * >= 0, * c >= a^2,
    * e >= b^2 with e = (d^2+1)/c, and det >= 0.
    """
    a, b = m[0, 0], m[0, 1]
    c, d = m[1, 0], m[1, 1]
    if c <= 0:
        raise ValueError("lower bounds apply to the c > 0 route")
    e = (d * d + 1) / c
    bounds = []
    if d > 0:
        bounds.append(a * b / d)
    bounds.append(0 * c)
    bounds.append(a * a / c)
    bounds.append(b * b / e)
    bounds.append(a * a * e - 2 * a * b * d + b * b * c)
    return bounds


def stn_complete(m: Matrix) -> CompletionResult:
    """Complete a TN 2x2 matrix to a symmetric TN 3x3 matrix."""
    _require_tn_2x2(m)
    a, b = m[0, 0], m[0, 1]
    c, d = m[1, 0], m[1, 1]
    zero = Fraction(0) if m.exact else 0.0

    if b == 0 and c == 0:
        out = Matrix([[a, zero, zero], [zero, d, zero], [zero, zero, zero]])
        return CompletionResult(
            output=out,
            star=zero,
            transposed=False,
            placement=MinorSelector((0, 1), (0, 1)),
        )

    if c > 0:
        star = max(star_lower_bounds(m))
        e = (d * d + 1) / c
        out = Matrix([[star, a, b], [a, c, d], [b, d, e]])
        return CompletionResult(
            output=out,
            star=star,
            transposed=False,
            placement=MinorSelector((0, 1), (1, 2)),
        )

    # b != 0 = c: complete the transpose; A sits bottom-left
    t = m.transpose()
    star = max(star_lower_bounds(t))
    e = (t[1, 1] * t[1, 1] + 1) / t[1, 0]
    out = Matrix(
        [
            [star, t[0, 0], t[0, 1]],
            [t[0, 0], t[1, 0], t[1, 1]],
            [t[0, 1], t[1, 1], e],
        ]
    )
    return CompletionResult(
        output=out,
        star=star,
        transposed=True,
        placement=MinorSelector((1, 2), (0, 1)),
    )
