"""Multivariate entrywise transforms and the order-preservation decision
tables.

A mixed power transform is F(t) = c * prod_{j in J} t_j^alpha_j *
prod_{i not in J} 1_{t_i > 0}, with the conventions 0^0 = 1 and 0^alpha = 0
for alpha > 0, and with the step indicator vanishing at 0.  ``classify``
decides, for a tuple of input orders and a target order, whether such a
transform maps every admissible kernel tuple into the target class; the
clause structure mirrors the published classification of these preservers,
transcribed as an executable table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .linalg import (
    DEFAULT_TOLERANCE,
    Matrix,
    MixedArithmeticError,
    Scalar,
    Tolerance,
    scalar_from_json,
    scalar_to_json,
)

UNBOUNDED = math.inf

__all__ = [
    "UNBOUNDED",
    "Power",
    "Heaviside",
    "MixedPowerTransform",
    "OrderSpec",
    "ClassificationVerdict",
    "CLAUSES",
    "apply",
    "classify",
    "PropertyCheck",
    "check_mult_mid_convex",
    "check_jointly_monotone",
    "property_evidence",
    "transform_to_json",
    "transform_from_json",
    "spec_to_json",
    "spec_from_json",
]


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class Power:
    alpha: Union[int, Fraction, float]

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError("power exponents must be nonnegative")


@dataclass(frozen=True)
class Heaviside:
    """Indicator of the open positive semi-axis: 1 for t > 0, 0 at t = 0."""


Term = Union[Power, Heaviside]


@dataclass(frozen=True)
class MixedPowerTransform:
    """c * prod powers * prod step indicators, coordinate by coordinate."""

    c: Scalar
    terms: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("transform arity must be at least 1")
        if self.c < 0:
            raise ValueError("scale c must be nonnegative")
        for t in self.terms:
            if not isinstance(t, (Power, Heaviside)):
                raise TypeError(f"bad term {t!r}")

    @property
    def arity(self) -> int:
        return len(self.terms)

    @property
    def is_exactly_evaluable(self) -> bool:
        """True when c is rational and every exponent is a whole number."""
        if not _is_exact(self.c):
            return False
        for t in self.terms:
            if isinstance(t, Power):
                if not (_is_exact(t.alpha) and Fraction(t.alpha).denominator == 1):
                    return False
        return True

    def __call__(self, values: Sequence[Scalar]) -> Scalar:
        if len(values) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(values)}")
        if any(v < 0 for v in values):
            raise ValueError("transform arguments must be nonnegative")
        exact = self.is_exactly_evaluable and all(_is_exact(v) for v in values)
        if exact:
            out = Fraction(self.c)
            for t, v in zip(self.terms, values):
                v = Fraction(v)
                if isinstance(t, Heaviside):
                    if v == 0:
                        return Fraction(0)
                else:
                    a = int(Fraction(t.alpha))
                    if v == 0:
                        if a > 0:
                            return Fraction(0)
                        # 0^0 = 1 contributes nothing
                    else:
                        out *= v**a
            return out
        out = float(self.c)
        for t, v in zip(self.terms, values):
            v = float(v)
            if isinstance(t, Heaviside):
                if v <= 0.0:
                    return 0.0
            else:
                a = float(t.alpha)
                if v == 0.0:
                    if a > 0.0:
                        return 0.0
                else:
                    out *= v**a
        return out


def apply(F: MixedPowerTransform, mats: Sequence[Matrix]) -> Matrix:
    """Entrywise evaluation of F on a tuple of equal-shape matrices.

    Exact when all inputs are rational, c is rational, and every exponent
    is a whole number; float otherwise.  Negative entries are rejected.
    """
    mats = list(mats)
    if len(mats) != F.arity:
        raise ValueError(f"transform takes {F.arity} matrices, got {len(mats)}")
    shape = mats[0].shape
    if any(m.shape != shape for m in mats):
        raise ValueError("input matrices must share a shape")
    exact_flags = {m.exact for m in mats}
    if len(exact_flags) > 1:
        raise MixedArithmeticError("input matrices mix exact and float arithmetic")
    rows, cols = shape
    out = [
        [F([m[i, j] for m in mats]) for j in range(cols)]
        for i in range(rows)
    ]
    rp = mats[0].row_points
    cp = mats[0].col_points
    if any(m.row_points != rp or m.col_points != cp for m in mats):
        rp = cp = None
    return Matrix(out, row_points=rp, col_points=cp)


# ---------------------------------------------------------------------------
# Order bookkeeping


def _check_order(value, label: str):
    if value == UNBOUNDED:
        return UNBOUNDED
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{label} must be a positive integer or unbounded")
    if value < 1:
        raise ValueError(f"{label} must be at least 1")
    return value


@dataclass(frozen=True)
class OrderSpec:
    """Input orders k_1..k_p, target order l, and the domain cardinalities.

    The working size N = min(|X|, |Y|, l) (symmetric: min(|X|, l)) is
    derived, never stored.  Unbounded orders and cardinalities are written
    as ``UNBOUNDED`` (math.inf).
    """

    k: tuple
    l: Union[int, float]
    size_x: Union[int, float]
    size_y: Optional[Union[int, float]] = None
    symmetric: bool = False

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(_check_order(v, "k_j") for v in self.k))
        if not self.k:
            raise ValueError("at least one input order is required")
        _check_order(self.l, "l")
        _check_order(self.size_x, "size_x")
        if self.symmetric:
            if self.size_y is not None and self.size_y != self.size_x:
                raise ValueError("symmetric specs use a single domain X")
            object.__setattr__(self, "size_y", self.size_x)
        else:
            if self.size_y is None:
                raise ValueError("size_y is required for asymmetric specs")
            _check_order(self.size_y, "size_y")

    @property
    def p(self) -> int:
        return len(self.k)

    @property
    def working_size(self):
        if self.symmetric:
            return min(self.size_x, self.l)
        return min(self.size_x, self.size_y, self.l)


@dataclass(frozen=True)
class ClassificationVerdict:
    """``admissible`` is None when the configuration falls outside the
    decision table's hypotheses (see the scope clauses)."""

    admissible: Optional[bool]
    rule: str
    reason: str


CLAUSES = frozenset(
    {
        "tn:n1", "tn:n2", "tn:n3", "tn:n4+",
        "tp:n1", "tp:n2", "tp:n3", "tp:n4+", "tp:n4+:scope",
        "stn:n1", "stn:n2a", "stn:n2b", "stn:n3", "stn:n4", "stn:n5+",
        "stp:n1", "stp:n2a", "stp:n2b", "stp:n3", "stp:n4", "stp:n4:scope",
        "stp:n5+", "stp:n5+:scope",
    }
)


def _term_info(F: MixedPowerTransform, positive_domain: bool):
    """Exponent list with None marking step indicators.

    On the open orthant the indicator is identically one, so positive-domain
    modes fold it into a zeroth power.
    """
    alphas = []
    for t in F.terms:
        if isinstance(t, Heaviside):
            alphas.append(0 if positive_domain else None)
        else:
            alphas.append(t.alpha)
    return alphas


def classify(F: MixedPowerTransform, spec: OrderSpec, mode: str) -> ClassificationVerdict:
    """Decide admissibility of a mixed power transform for the given orders.

    ``mode`` is one of ``tn``, ``tp``, ``stn``, ``stp``.  The verdict's
    ``rule`` names the clause of the decision table that fired.
    """
    mode = mode.lower()
    if mode not in ("tn", "tp", "stn", "stp"):
        raise ValueError(f"unknown mode {mode!r}")
    symmetric_mode = mode in ("stn", "stp")
    if symmetric_mode != spec.symmetric:
        raise ValueError("spec symmetry flag does not match the mode")
    if F.arity != spec.p:
        raise ValueError("transform arity differs from the number of input orders")

    n = spec.working_size
    strict = mode in ("tp", "stp")
    alphas = _term_info(F, positive_domain=strict)
    heavisides = [j for j, a in enumerate(alphas) if a is None]
    positives = [j for j, a in enumerate(alphas) if a is not None and a > 0]
    zero_c = F.c == 0

    def verdict(adm, rule, reason):
        return ClassificationVerdict(admissible=adm, rule=rule, reason=reason)

    # --- strict modes reject the zero map everywhere -----------------------
    if strict and zero_c:
        rule = f"{mode}:n1" if n == 1 else _strict_rule(mode, n, spec)
        return verdict(False, rule, "c = 0 gives the zero map, which is never totally positive")

    if n == 1:
        if strict:
            return verdict(True, f"{mode}:n1", "only entries are checked; any positive-valued map works")
        return verdict(True, f"{mode}:n1", "only entries are checked; any nonnegative map works")

    if mode == "tn":
        return _classify_tn(F, spec, n, alphas, heavisides, positives, zero_c, verdict)
    if mode == "tp":
        return _classify_tp(F, spec, n, alphas, positives, verdict)
    if mode == "stn":
        return _classify_stn(F, spec, n, alphas, heavisides, positives, zero_c, verdict)
    return _classify_stp(F, spec, n, alphas, positives, verdict)


def _strict_rule(mode: str, n, spec: OrderSpec) -> str:
    if n == 2:
        if mode == "stp":
            return "stp:n2a" if spec.size_x == 2 else "stp:n2b"
        return "tp:n2"
    if n == 3:
        return f"{mode}:n3"
    if mode == "stp":
        return "stp:n4" if n == 4 else "stp:n5+"
    return "tp:n4+"


def _low_order_coords_ok(spec: OrderSpec, alphas, n) -> Optional[int]:
    """Index of a coordinate with k_j < n that is not a plain zeroth power."""
    for j, kj in enumerate(spec.k):
        if kj < n and alphas[j] != 0:
            return j
    return None


def _alpha_is_integer(a) -> bool:
    if isinstance(a, float):
        return a.is_integer()
    return Fraction(a).denominator == 1


def _in_power_necessity_set(a, n) -> bool:
    """Exponents surviving the Toeplitz/Hankel necessity arguments: positive
    integers together with everything above n - 2 (everything >= 1 at n=3,
    only whole numbers once n is unbounded)."""
    if n == UNBOUNDED:
        return _alpha_is_integer(a)
    return _alpha_is_integer(a) or a > n - 2


def _classify_tn(F, spec, n, alphas, heavisides, positives, zero_c, verdict):
    if n == 2:
        if zero_c:
            return verdict(True, "tn:n2", "the zero map preserves total nonnegativity trivially")
        bad = _low_order_coords_ok(spec, alphas, n)
        if bad is not None:
            return verdict(
                False,
                "tn:n2",
                f"coordinate {bad} has input order below 2, so only its zeroth power may appear",
            )
        return verdict(True, "tn:n2", "product of powers and step indicators with admissible exponents")

    # n >= 3: constants or a single power, no indicators
    rule = _tn_rule(n)
    if zero_c:
        return verdict(True, rule, "the zero map preserves total nonnegativity trivially")
    if heavisides:
        return verdict(False, rule, "step indicator factors are excluded once 3x3 minors are in play")
    if not positives:
        return verdict(True, rule, "nonnegative constant map")
    if len(positives) > 1:
        return verdict(False, rule, "more than one coordinate carries a positive power")
    j = positives[0]
    a = alphas[j]
    if spec.k[j] < n:
        return verdict(False, rule, f"input order k_{j} is below the working size {n}")
    if n == 3:
        if a < 1:
            return verdict(False, "tn:n3", "fractional exponents below 1 break 3x3 nonnegativity")
        return verdict(True, "tn:n3", "single power with exponent >= 1 on an input of order >= 3")
    if a != 1:
        return verdict(False, "tn:n4+", "only homotheties survive at working size 4 and beyond")
    return verdict(True, "tn:n4+", "homothety in one coordinate of sufficient input order")


def _tn_rule(n) -> str:
    return "tn:n3" if n == 3 else "tn:n4+"


def _classify_tp(F, spec, n, alphas, positives, verdict):
    if n == 2:
        if not positives:
            return verdict(False, "tp:n2", "constant maps lose strict positivity of 2x2 minors")
        bad = _low_order_coords_ok(spec, alphas, n)
        if bad is not None:
            return verdict(
                False,
                "tp:n2",
                f"coordinate {bad} has input order 1, so its exponent must vanish",
            )
        return verdict(True, "tp:n2", "mixed power map with a nonzero exponent vector")

    rule = "tp:n3" if n == 3 else "tp:n4+"
    if not positives:
        return verdict(False, rule, "constant maps lose strict positivity of 2x2 minors")
    if len(positives) > 1:
        return verdict(False, rule, "more than one coordinate carries a positive power")
    j = positives[0]
    a = alphas[j]
    if not _in_power_necessity_set(a, n):
        return verdict(False, rule, f"exponent {a} falls in the excluded fractional range")
    if n == 3:
        if a < 1:
            return verdict(False, "tp:n3", "fractional exponents below 1 break 3x3 positivity")
        if spec.k[j] < n:
            return verdict(False, "tp:n3", f"input order k_{j} is below the working size {n}")
        return verdict(True, "tp:n3", "single power with exponent >= 1 on an input of order >= 3")
    # n >= 4: the remaining refinements assume the side hypothesis below
    both_infinite = spec.size_x == UNBOUNDED and spec.size_y == UNBOUNDED
    if both_infinite and spec.l != UNBOUNDED and any(k == UNBOUNDED for k in spec.k):
        return verdict(
            None,
            "tp:n4+:scope",
            "infinite domains with a finite target order require finite input orders; "
            "outside the classification's hypotheses",
        )
    if spec.k[j] < n:
        return verdict(False, "tp:n4+", f"input order k_{j} is below the working size {n}")
    if a != 1:
        return verdict(False, "tp:n4+", "only homotheties survive at working size 4 and beyond")
    return verdict(True, "tp:n4+", "homothety in one coordinate of sufficient input order")


def _classify_stn(F, spec, n, alphas, heavisides, positives, zero_c, verdict):
    if n == 2:
        rule = "stn:n2a" if spec.size_x == 2 else "stn:n2b"
        if zero_c:
            return verdict(True, rule, "the zero map preserves symmetric total nonnegativity trivially")
        bad = _low_order_coords_ok(spec, alphas, n)
        if bad is not None:
            return verdict(
                False,
                rule,
                f"coordinate {bad} has input order 1 and the map may not depend on it",
            )
        if rule == "stn:n2a":
            reason = (
                "on a two-point domain the preservers are the nonnegative, jointly "
                "non-decreasing, multiplicatively mid-convex maps; every product of "
                "powers and step indicators qualifies"
            )
        else:
            reason = "product of powers and step indicators with admissible exponents"
        return verdict(True, rule, reason)

    if n == 3:
        if zero_c:
            return verdict(True, "stn:n3", "the zero map preserves symmetric total nonnegativity trivially")
        if heavisides:
            return verdict(False, "stn:n3", "step indicator factors are excluded once 3x3 minors are in play")
        if not positives:
            return verdict(True, "stn:n3", "nonnegative constant map")
        for j in positives:
            if alphas[j] < 1:
                return verdict(False, "stn:n3", f"exponent on coordinate {j} is below 1")
            if spec.k[j] < 3:
                return verdict(False, "stn:n3", f"input order k_{j} is below the working size 3")
        if len(positives) > 1 and spec.size_x > 3:
            # the symmetric blocked pair lives on four points and its powered
            # Schur product has a negative 3x3 minor, so products of two or
            # more powers survive only on a three-point domain
            return verdict(
                False,
                "stn:n3",
                "products of several powers fail on domains with more than three points",
            )
        return verdict(True, "stn:n3", "product of powers >= 1 over coordinates of input order >= 3")

    rule = "stn:n4" if n == 4 else "stn:n5+"
    if zero_c:
        return verdict(True, rule, "the zero map preserves symmetric total nonnegativity trivially")
    if heavisides:
        return verdict(False, rule, "step indicator factors are excluded once 3x3 minors are in play")
    if not positives:
        return verdict(True, rule, "nonnegative constant map")
    if len(positives) > 1:
        return verdict(False, rule, "more than one coordinate carries a positive power")
    j = positives[0]
    a = alphas[j]
    if spec.k[j] < n:
        return verdict(False, rule, f"input order k_{j} is below the working size {n}")
    if n == 4 and spec.size_x == 4:
        if a == 1 or a >= 2:
            return verdict(True, "stn:n4", "single power with exponent 1 or >= 2 on a four-point domain")
        return verdict(False, "stn:n4", "exponents strictly between 1 and 2 fail on four-point domains")
    if a != 1:
        return verdict(False, rule, "only homotheties survive beyond four points")
    return verdict(True, rule, "homothety in one coordinate of sufficient input order")


def _classify_stp(F, spec, n, alphas, positives, verdict):
    if n == 2:
        rule = "stp:n2a" if spec.size_x == 2 else "stp:n2b"
        if not positives:
            return verdict(False, rule, "constant maps lose strict positivity of 2x2 minors")
        bad = _low_order_coords_ok(spec, alphas, n)
        if bad is not None:
            return verdict(
                False,
                rule,
                f"coordinate {bad} has input order 1 and the map may not depend on it",
            )
        if rule == "stp:n2a":
            reason = (
                "on a two-point domain the preservers are the positive, jointly "
                "increasing, multiplicatively mid-convex maps; every nonconstant "
                "mixed power map qualifies"
            )
        else:
            reason = "mixed power map with a nonzero exponent vector"
        return verdict(True, rule, reason)

    if n == 3:
        if not positives:
            return verdict(False, "stp:n3", "constant maps lose strict positivity of 2x2 minors")
        for j in positives:
            if alphas[j] < 1:
                return verdict(False, "stp:n3", f"exponent on coordinate {j} is below 1")
            if spec.k[j] < 3:
                return verdict(False, "stp:n3", f"input order k_{j} is below the working size 3")
        if len(positives) > 1 and spec.size_x > 3:
            # strictly positive approximants of the symmetric blocked pair
            # inherit its negative powered 3x3 minor on four or more points
            return verdict(
                False,
                "stp:n3",
                "products of several powers fail on domains with more than three points",
            )
        return verdict(True, "stp:n3", "product of powers >= 1 over coordinates of input order >= 3")

    rule = "stp:n4" if n == 4 else "stp:n5+"
    if not positives:
        return verdict(False, rule, "constant maps lose strict positivity of 2x2 minors")
    # exponent necessity from the Hankel argument holds without side hypotheses
    for j in positives:
        if not _in_power_necessity_set(alphas[j], n):
            return verdict(
                False, rule, f"exponent {alphas[j]} falls in the excluded fractional range"
            )
    x_infinite = spec.size_x == UNBOUNDED
    if n == 4 and x_infinite and any(k == UNBOUNDED for k in spec.k):
        return verdict(
            None,
            "stp:n4:scope",
            "an infinite domain at working size 4 requires finite input orders; "
            "outside the classification's hypotheses",
        )
    if n >= 5 and x_infinite and spec.l != UNBOUNDED and any(k == UNBOUNDED for k in spec.k):
        return verdict(
            None,
            "stp:n5+:scope",
            "an infinite domain with finite target order requires finite input orders; "
            "outside the classification's hypotheses",
        )
    if len(positives) > 1:
        return verdict(False, rule, "more than one coordinate carries a positive power")
    j = positives[0]
    a = alphas[j]
    if spec.k[j] < n:
        return verdict(False, rule, f"input order k_{j} is below the working size {n}")
    if n == 4 and spec.size_x == 4:
        if a == 1 or a >= 2:
            return verdict(True, "stp:n4", "single power with exponent 1 or >= 2 on a four-point domain")
        return verdict(False, "stp:n4", "exponents strictly between 1 and 2 fail on four-point domains")
    if a != 1:
        return verdict(False, rule, "only homotheties survive beyond four points")
    return verdict(True, rule, "homothety in one coordinate of sufficient input order")


# ---------------------------------------------------------------------------
# Sampled functional-property checks


@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    violation: Optional[dict] = None


def check_mult_mid_convex(
    F: Callable,
    samples: Sequence[tuple[Sequence[float], Sequence[float]]],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> PropertyCheck:
    """Verify F(t) F(t') >= F(sqrt(t t'))^2 on the given point pairs."""
    for t, tp in samples:
        t = tuple(float(v) for v in t)
        tp = tuple(float(v) for v in tp)
        if any(v < 0 for v in t + tp):
            raise ValueError("multiplicative mid-convexity needs nonnegative coordinates")
        mid = tuple(math.sqrt(a * b) for a, b in zip(t, tp))
        lhs = float(F(t)) * float(F(tp))
        rhs = float(F(mid)) ** 2
        if lhs < rhs - tol.threshold(max(abs(lhs), abs(rhs))):
            return PropertyCheck(False, {"t": t, "t_prime": tp, "lhs": lhs, "rhs": rhs})
    return PropertyCheck(True)


def check_jointly_monotone(
    F: Callable,
    samples: Sequence[tuple[Sequence[float], Sequence[float]]],
    strict: bool = False,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> PropertyCheck:
    """Verify F(x) <= F(y) (or <, when strict) on componentwise-ordered pairs."""
    for x, y in samples:
        x = tuple(float(v) for v in x)
        y = tuple(float(v) for v in y)
        if not all(a < b for a, b in zip(x, y)):
            raise ValueError("sample pairs must be strictly ordered in every coordinate")
        fx, fy = float(F(x)), float(F(y))
        if strict:
            ok = fx < fy
        else:
            ok = fx <= fy + tol.threshold(max(abs(fx), abs(fy)))
        if not ok:
            return PropertyCheck(False, {"x": x, "y": y, "fx": fx, "fy": fy})
    return PropertyCheck(True)


def property_evidence(F: Callable, p: int, rng, trials: int = 1000, strict: bool = False) -> dict:
    """Sampled monotonicity and mid-convexity evidence for an arbitrary map.

    A sampled property can refute but never prove membership in the
    two-point symmetric preserver class, so the result is labeled
    non-conclusive.
    """
    mono_pairs = []
    convex_pairs = []
    for _ in range(trials):
        x = tuple(rng.uniform(0.05, 10.0) for _ in range(p))
        gaps = tuple(rng.uniform(0.05, 5.0) for _ in range(p))
        mono_pairs.append((x, tuple(a + g for a, g in zip(x, gaps))))
        convex_pairs.append(
            (
                tuple(rng.uniform(0.05, 10.0) for _ in range(p)),
                tuple(rng.uniform(0.05, 10.0) for _ in range(p)),
            )
        )
    mono = check_jointly_monotone(F, mono_pairs, strict=strict)
    convex = check_mult_mid_convex(F, convex_pairs)
    return {
        "conclusive": False,
        "jointly_monotone": mono,
        "mult_mid_convex": convex,
        "trials": trials,
        "note": "sampled evidence only; a pass does not certify the preserver property",
    }


# ---------------------------------------------------------------------------
# JSON forms


def transform_to_json(F: MixedPowerTransform) -> dict:
    terms = []
    for t in F.terms:
        if isinstance(t, Heaviside):
            terms.append({"kind": "heaviside"})
        else:
            terms.append({"kind": "power", "alpha": scalar_to_json(t.alpha)})
    return {"c": scalar_to_json(F.c), "terms": terms}


def transform_from_json(obj: dict) -> MixedPowerTransform:
    terms = []
    for t in obj["terms"]:
        if t["kind"] == "heaviside":
            terms.append(Heaviside())
        elif t["kind"] == "power":
            terms.append(Power(alpha=scalar_from_json(t["alpha"])))
        else:
            raise ValueError(f"unknown term kind {t['kind']!r}")
    return MixedPowerTransform(c=scalar_from_json(obj["c"]), terms=tuple(terms))


def _order_to_json(v):
    return "inf" if v == UNBOUNDED else v


def _order_from_json(v):
    if v in ("inf", "unbounded", None):
        return UNBOUNDED
    return int(v)


def spec_to_json(spec: OrderSpec) -> dict:
    return {
        "k": [_order_to_json(v) for v in spec.k],
        "l": _order_to_json(spec.l),
        "size_x": _order_to_json(spec.size_x),
        "size_y": _order_to_json(spec.size_y),
        "symmetric": spec.symmetric,
    }


def spec_from_json(obj: dict) -> OrderSpec:
    symmetric = bool(obj.get("symmetric", False))
    return OrderSpec(
        k=tuple(_order_from_json(v) for v in obj["k"]),
        l=_order_from_json(obj["l"]),
        size_x=_order_from_json(obj["size_x"]),
        size_y=None if symmetric else _order_from_json(obj.get("size_y")),
        symmetric=symmetric,
    )
