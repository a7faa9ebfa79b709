"""Precision-tracked complex scalars, matrices, and determinant identities.

This module is the numeric foundation for the package: a complex scalar
that carries its working precision, dense matrices with LU determinants,
Vandermonde and Cauchy products, a numeric check of the determinant
condensation identity, and the confluent alternant machinery shared by
the symmetric-function and moment-formula layers.

Precision discipline: every tracked value knows its precision in bits,
and a binary operation rounds exactly once, at the smaller of the two
operand precisions.  Plain Python numbers and decimal strings are
coerced at the precision of the tracked operand, so a result can never
claim more accuracy than its least precise input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from ._backends import BACKEND, decimal_digits
from .errors import DimensionError, DomainError, PoleError

DEFAULT_PRECISION_BITS = 256
MIN_PRECISION_BITS = 64

__all__ = [
    "DEFAULT_PRECISION_BITS",
    "MIN_PRECISION_BITS",
    "ComplexValue",
    "ComplexMatrix",
    "EvalReport",
    "alternant_ratio",
    "as_value",
    "as_values",
    "cauchy_det_check",
    "cauchy_product",
    "condensation_check",
    "dense_to_terms",
    "det",
    "eval_terms",
    "float_abs",
    "is_near",
    "magnitude_below",
    "make_report",
    "min_precision",
    "pi_value",
    "pole_threshold_log2",
    "rel_error_float",
    "require_disjoint",
    "require_separated",
    "rel_tolerance_log2",
    "scaled_derivative_terms",
    "vandermonde",
    "within",
]


def _check_precision(bits: int) -> int:
    if not isinstance(bits, int) or bits < MIN_PRECISION_BITS:
        raise DomainError(
            "precision must be an int of at least {} bits, got {!r}".format(
                MIN_PRECISION_BITS, bits
            )
        )
    return bits


def rel_tolerance_log2(precision_bits: int) -> int:
    """Default log2 relative tolerance for values computed at this precision."""
    return -(precision_bits // 2)


def pole_threshold_log2(precision_bits: int) -> int:
    """Log2 distance below which two points count as a coincidence/pole hit."""
    return -(precision_bits // 4)


class ComplexValue:
    """An immutable complex number with explicit binary precision.

    Arithmetic between two ComplexValues rounds once at the minimum of
    the two precisions.  int, float, complex, and decimal-string
    operands are coerced at the tracked operand's precision.
    """

    __slots__ = ("_raw", "_bits")

    def __init__(self, raw: Any, precision_bits: int):
        # raw is a backend payload; use make()/as_value() in client code
        self._raw = raw
        self._bits = _check_precision(precision_bits)

    @classmethod
    def make(cls, re: Any = 0, im: Any = 0, precision_bits: int | None = None) -> "ComplexValue":
        bits = DEFAULT_PRECISION_BITS if precision_bits is None else _check_precision(precision_bits)
        if isinstance(re, ComplexValue):
            raise TypeError("use as_value() to re-wrap an existing ComplexValue")
        if isinstance(re, complex):
            if im != 0:
                raise TypeError("cannot combine a complex re argument with a nonzero im")
            re, im = re.real, re.imag
        return cls(BACKEND.make(re, im, bits), bits)

    @classmethod
    def zero(cls, precision_bits: int | None = None) -> "ComplexValue":
        return cls.make(0, 0, precision_bits)

    @classmethod
    def one(cls, precision_bits: int | None = None) -> "ComplexValue":
        return cls.make(1, 0, precision_bits)

    @property
    def precision_bits(self) -> int:
        return self._bits

    @property
    def raw(self) -> Any:
        """Backend payload; internal, exposed for the serialization layer."""
        return self._raw

    def to_complex(self) -> complex:
        """Lossy conversion to a machine complex, for display and floats."""
        re, im = BACKEND.to_floats(self._raw)
        return complex(re, im)

    def conj(self) -> "ComplexValue":
        return ComplexValue(BACKEND.conj(self._raw, self._bits), self._bits)

    def abs2(self):
        """Squared modulus as a backend real (supports <, <=, float())."""
        return BACKEND.abs2(self._raw, self._bits)

    def is_zero(self) -> bool:
        return BACKEND.is_zero(self._raw)

    def is_finite(self) -> bool:
        return BACKEND.is_finite(self._raw)

    def _coerce(self, other: Any) -> "ComplexValue | None":
        if isinstance(other, ComplexValue):
            return other
        if isinstance(other, (int, float, str)):
            return ComplexValue.make(other, 0, self._bits)
        if isinstance(other, complex):
            return ComplexValue.make(other, 0, self._bits)
        return None

    def __add__(self, other: Any) -> "ComplexValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        bits = min(self._bits, o._bits)
        return ComplexValue(BACKEND.add(self._raw, o._raw, bits), bits)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "ComplexValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        bits = min(self._bits, o._bits)
        return ComplexValue(BACKEND.sub(self._raw, o._raw, bits), bits)

    def __rsub__(self, other: Any) -> "ComplexValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        bits = min(self._bits, o._bits)
        return ComplexValue(BACKEND.sub(o._raw, self._raw, bits), bits)

    def __mul__(self, other: Any) -> "ComplexValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        bits = min(self._bits, o._bits)
        return ComplexValue(BACKEND.mul(self._raw, o._raw, bits), bits)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "ComplexValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise PoleError("division by exact zero")
        bits = min(self._bits, o._bits)
        return ComplexValue(BACKEND.div(self._raw, o._raw, bits), bits)

    def __rtruediv__(self, other: Any) -> "ComplexValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            raise PoleError("division by exact zero")
        bits = min(self._bits, o._bits)
        return ComplexValue(BACKEND.div(o._raw, self._raw, bits), bits)

    def __neg__(self) -> "ComplexValue":
        return ComplexValue(BACKEND.neg(self._raw, self._bits), self._bits)

    def __pow__(self, n: Any) -> "ComplexValue":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.is_zero():
            raise PoleError("zero raised to a negative power")
        return ComplexValue(BACKEND.pow_int(self._raw, n, self._bits), self._bits)

    def exp(self) -> "ComplexValue":
        return ComplexValue(BACKEND.exp(self._raw, self._bits), self._bits)

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BACKEND.eq(self._raw, o._raw)

    def __ne__(self, other: Any) -> bool:
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return NotImplemented
        return not eq

    def to_json_dict(self) -> dict:
        re_s, im_s = BACKEND.to_decimal(self._raw, self._bits)
        return {"re": re_s, "im": im_s, "precision_bits": self._bits}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ComplexValue":
        bits = _check_precision(int(data["precision_bits"]))
        raw = BACKEND.from_decimal(str(data["re"]), str(data["im"]), bits)
        return cls(raw, bits)

    def __repr__(self) -> str:
        z = self.to_complex()
        return "<{:.12g}{}{:.12g}j @{}b>".format(
            z.real, "+" if z.imag >= 0 else "-", abs(z.imag), self._bits
        )


def pi_value(precision_bits: int | None = None) -> ComplexValue:
    """Pi as a real-valued ComplexValue at the requested precision."""
    bits = DEFAULT_PRECISION_BITS if precision_bits is None else _check_precision(precision_bits)
    return ComplexValue(BACKEND.pi(bits), bits)


def as_value(x: Any, precision_bits: int | None = None) -> ComplexValue:
    """Coerce x (ComplexValue, number, or decimal string) to a ComplexValue.

    An existing ComplexValue is returned unchanged: its own precision wins.
    """
    if isinstance(x, ComplexValue):
        return x
    return ComplexValue.make(x, 0, precision_bits)


def as_values(xs: Iterable[Any], precision_bits: int | None = None) -> tuple[ComplexValue, ...]:
    return tuple(as_value(x, precision_bits) for x in xs)


def min_precision(values: Iterable[Any], default: int | None = None) -> int:
    """Smallest precision among the tracked values, or the default if none."""
    bits = [v.precision_bits for v in values if isinstance(v, ComplexValue)]
    if not bits:
        return DEFAULT_PRECISION_BITS if default is None else default
    return min(bits)


def float_abs(value: ComplexValue) -> float:
    a2 = float(value.abs2())
    return math.sqrt(a2) if a2 < math.inf else math.inf


def rel_error_float(value: ComplexValue, reference: ComplexValue) -> float:
    """|value - reference| / |reference| as a float (absolute error if the
    reference is exactly zero).  For human-readable reporting only; exact
    tolerance decisions go through within()."""
    diff = float_abs(value - reference)
    ref = float_abs(reference)
    return diff / ref if ref > 0 else diff


def magnitude_below(value: ComplexValue, log2_threshold: int) -> bool:
    """True if |value| < 2**log2_threshold, decided in backend arithmetic."""
    thr = BACKEND.pow2(2 * log2_threshold, value.precision_bits)
    return value.abs2() < thr


def is_near(a: ComplexValue, b: ComplexValue, log2_threshold: int) -> bool:
    """True if |a - b| < 2**log2_threshold."""
    return magnitude_below(a - b, log2_threshold)


def within(value: ComplexValue, reference: ComplexValue, tolerance_log2: int, mode: str = "rel") -> bool:
    """Exact-arithmetic tolerance check.

    rel mode: |value - reference| <= 2**t * |reference| (absolute check if
    the reference is exactly zero).  abs mode: |value - reference| <= 2**t.
    """
    if mode not in ("rel", "abs"):
        raise DomainError("mode must be 'rel' or 'abs', got {!r}".format(mode))
    bits = min(value.precision_bits, reference.precision_bits)
    d2 = (value - reference).abs2()
    t2 = BACKEND.pow2(2 * tolerance_log2, bits)
    if mode == "abs":
        return d2 <= t2
    r2 = reference.abs2()
    if BACKEND.is_zero(reference.raw):
        return d2 <= t2
    return d2 <= t2 * r2


@dataclass(frozen=True)
class EvalReport:
    """Outcome of comparing a computed value against a reference."""

    label: str
    value: ComplexValue
    reference: ComplexValue
    abs_error: float
    rel_error: float
    tolerance_log2: int
    passed: bool
    precision_bits: int
    details: dict = field(default_factory=dict, repr=False)

    def __str__(self) -> str:
        return "[{}] {}: rel_err={:.3e} (tol 2^{}) value={!r}".format(
            "PASS" if self.passed else "FAIL",
            self.label,
            self.rel_error,
            self.tolerance_log2,
            self.value,
        )


def make_report(
    label: str,
    value: ComplexValue,
    reference: ComplexValue,
    tolerance_log2: int,
    mode: str = "rel",
    details: dict | None = None,
) -> EvalReport:
    return EvalReport(
        label=label,
        value=value,
        reference=reference,
        abs_error=float_abs(value - reference),
        rel_error=rel_error_float(value, reference),
        tolerance_log2=tolerance_log2,
        passed=within(value, reference, tolerance_log2, mode=mode),
        precision_bits=min(value.precision_bits, reference.precision_bits),
        details=details or {},
    )


class ComplexMatrix:
    """A dense matrix of ComplexValues.  Rows must all have equal length."""

    __slots__ = ("_rows", "_bits")

    def __init__(self, rows: Iterable[Iterable[Any]], precision_bits: int | None = None):
        coerced: list[tuple[ComplexValue, ...]] = []
        for row in rows:
            coerced.append(tuple(as_value(x, precision_bits) for x in row))
        if coerced:
            width = len(coerced[0])
            for r, row in enumerate(coerced):
                if len(row) != width:
                    raise DimensionError(
                        "ragged matrix: row 0 has {} entries, row {} has {}".format(
                            width, r, len(row)
                        )
                    )
        self._rows = tuple(coerced)
        flat = [x for row in self._rows for x in row]
        self._bits = min_precision(flat, default=precision_bits)

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def precision_bits(self) -> int:
        return self._bits

    def entry(self, i: int, j: int) -> ComplexValue:
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[ComplexValue, ...], ...]:
        return self._rows

    def det(self) -> ComplexValue:
        return det(self)


def det(matrix: "ComplexMatrix | Sequence[Sequence[Any]]") -> ComplexValue:
    """Determinant by LU elimination with partial pivoting on |entry|^2.

    A column whose remaining entries are all exactly zero short-circuits
    to an exact zero (no rounding noise is invented for singular input).
    """
    m = matrix if isinstance(matrix, ComplexMatrix) else ComplexMatrix(matrix)
    n = m.nrows
    if n != m.ncols:
        raise DimensionError("determinant requires a square matrix, got {}x{}".format(n, m.ncols))
    bits = m.precision_bits
    if n == 0:
        return ComplexValue.one(bits)
    work = [list(row) for row in m.rows()]
    negate = False
    for k in range(n):
        best = k
        best_a2 = work[k][k].abs2()
        for i in range(k + 1, n):
            a2 = work[i][k].abs2()
            if a2 > best_a2:
                best, best_a2 = i, a2
        if work[best][k].is_zero():
            return ComplexValue.zero(bits)
        if best != k:
            work[best], work[k] = work[k], work[best]
            negate = not negate
        pivot = work[k][k]
        for i in range(k + 1, n):
            if work[i][k].is_zero():
                continue
            factor = work[i][k] / pivot
            row_i = work[i]
            row_k = work[k]
            for j in range(k + 1, n):
                row_i[j] = row_i[j] - factor * row_k[j]
    acc = ComplexValue.one(bits)
    for k in range(n):
        acc = acc * work[k][k]
    return -acc if negate else acc


def vandermonde(xs: Sequence[Any], precision_bits: int | None = None) -> ComplexValue:
    """prod_{j<k} (x_j - x_k) in the order the points are listed.

    Empty and singleton inputs give 1.
    """
    vals = as_values(xs, precision_bits)
    bits = min_precision(vals, default=precision_bits)
    acc = ComplexValue.one(bits)
    for j in range(len(vals)):
        for k in range(j + 1, len(vals)):
            acc = acc * (vals[j] - vals[k])
    return acc


def cauchy_product(us: Sequence[Any], vs: Sequence[Any], precision_bits: int | None = None) -> ComplexValue:
    """prod_i prod_j (u_i - v_j) over two equally sized point lists."""
    if len(us) != len(vs):
        raise DimensionError(
            "cauchy_product needs equally many u and v points, got {} and {}".format(len(us), len(vs))
        )
    u_vals = as_values(us, precision_bits)
    v_vals = as_values(vs, precision_bits)
    bits = min_precision(list(u_vals) + list(v_vals), default=precision_bits)
    acc = ComplexValue.one(bits)
    for u in u_vals:
        for v in v_vals:
            acc = acc * (u - v)
    return acc


def require_separated(points: Sequence[ComplexValue], log2_threshold: int, what: str = "points") -> None:
    """Raise PoleError naming the offending pair if any two points are
    within 2**log2_threshold of each other."""
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            if is_near(points[a], points[b], log2_threshold):
                raise PoleError(
                    "{} points {} and {} coincide within 2^{}".format(what, a, b, log2_threshold)
                )


def require_disjoint(us: Sequence[ComplexValue], vs: Sequence[ComplexValue], log2_threshold: int, what_u: str = "u", what_v: str = "v") -> None:
    """Raise PoleError naming the offending cross pair closer than the threshold."""
    for a, u in enumerate(us):
        for b, v in enumerate(vs):
            if is_near(u, v, log2_threshold):
                raise PoleError(
                    "{}[{}] and {}[{}] coincide within 2^{}".format(what_u, a, what_v, b, log2_threshold)
                )


def cauchy_det_check(
    us: Sequence[Any],
    vs: Sequence[Any],
    precision_bits: int | None = None,
    tolerance_log2: int | None = None,
) -> EvalReport:
    """Compare det(1/(u_i - v_j)) against its closed product form.

    The closed form is Delta(u_J,...,u_1) * Delta(v_1,...,v_J) divided by
    the full difference product prod_{i,j} (u_i - v_j).
    """
    if len(us) != len(vs) or not us:
        raise DimensionError("need equally many (and at least one) u and v points")
    u_vals = as_values(us, precision_bits)
    v_vals = as_values(vs, precision_bits)
    bits = min_precision(list(u_vals) + list(v_vals), default=precision_bits)
    sep = pole_threshold_log2(bits)
    require_separated(u_vals, sep, "u")
    require_separated(v_vals, sep, "v")
    require_disjoint(u_vals, v_vals, sep)

    matrix = ComplexMatrix(
        [[1 / (u - v) for v in v_vals] for u in u_vals], precision_bits=bits
    )
    lhs = det(matrix)
    rhs = (
        vandermonde(tuple(reversed(u_vals)))
        * vandermonde(v_vals)
        / cauchy_product(u_vals, v_vals)
    )
    tol = rel_tolerance_log2(bits) if tolerance_log2 is None else tolerance_log2
    return make_report("cauchy-determinant", lhs, rhs, tol)


# ---------------------------------------------------------------------------
# Sparse polynomial columns and alternant ratios
# ---------------------------------------------------------------------------

Term = tuple[Any, int]


def dense_to_terms(coeffs: Sequence[Any]) -> list[Term]:
    """Dense ascending coefficient list -> sparse [(coeff, exponent), ...]."""
    return [(c, e) for e, c in enumerate(coeffs) if not (isinstance(c, (int, float)) and c == 0)]


def scaled_derivative_terms(terms: Sequence[Term], order: int) -> list[Term]:
    """Terms of f^(order)/order! given the terms of f.

    The scaled derivative of c*v^e is c*binomial(e, order)*v^(e-order);
    exponents below the order drop out.  Binomials are exact integers.
    """
    if order < 0:
        raise DomainError("derivative order must be nonnegative")
    if order == 0:
        return list(terms)
    out: list[Term] = []
    for c, e in terms:
        if e >= order:
            b = math.comb(e, order)
            out.append((c * b if isinstance(c, ComplexValue) else b * c, e - order))
    return out


def eval_terms(terms: Sequence[Term], x: Any, precision_bits: int | None = None) -> ComplexValue:
    """Evaluate a sparse polynomial sum(c * x^e) at the point x."""
    xv = as_value(x, precision_bits)
    bits = xv.precision_bits if precision_bits is None else precision_bits
    acc = ComplexValue.zero(bits)
    for c, e in terms:
        cv = c if isinstance(c, ComplexValue) else ComplexValue.make(c, 0, bits)
        acc = acc + cv * xv**e
    return acc


def alternant_ratio(
    columns: Sequence[Sequence[Term]],
    groups: Sequence[tuple[Any, int]],
    precision_bits: int | None = None,
) -> ComplexValue:
    """det(col_j evaluated at the points) / Vandermonde, with confluency.

    columns are sparse polynomials; groups lists (point, multiplicity)
    pairs whose multiplicities sum to the number of columns.  A group of
    multiplicity m contributes rows with the scaled derivatives of order
    0..m-1 at its point.  The Vandermonde denominator is evaluated as the
    determinant of the same confluent rows applied to the monomial basis
    v^(m-1), ..., v, 1, so row scalings and signs cancel exactly and the
    ratio is the confluent limit of the generic quotient.
    """
    m_total = sum(mult for _, mult in groups)
    if m_total != len(columns):
        raise DimensionError(
            "group multiplicities sum to {} but there are {} columns".format(m_total, len(columns))
        )
    points = as_values([p for p, _ in groups], precision_bits)
    bits = min_precision(points, default=precision_bits)
    if any(mult < 1 for _, mult in groups):
        raise DomainError("group multiplicities must be positive")

    if all(mult == 1 for _, mult in groups):
        num_rows = [[eval_terms(col, p, bits) for col in columns] for p in points]
        denom = vandermonde(points, bits)
        if denom.is_zero():
            raise PoleError("alternant points coincide exactly; pass them as one group")
        return det(ComplexMatrix(num_rows, bits)) / denom

    monomials: list[list[Term]] = [[(1, m_total - 1 - j)] for j in range(m_total)]
    num_rows = []
    den_rows = []
    for (point, mult), p in zip(groups, points):
        for r in range(mult):
            num_rows.append([eval_terms(scaled_derivative_terms(col, r), p, bits) for col in columns])
            den_rows.append([eval_terms(scaled_derivative_terms(col, r), p, bits) for col in monomials])
    denom = det(ComplexMatrix(den_rows, bits))
    if denom.is_zero():
        raise PoleError("distinct alternant groups coincide exactly")
    return det(ComplexMatrix(num_rows, bits)) / denom


# ---------------------------------------------------------------------------
# Determinant condensation identity
# ---------------------------------------------------------------------------

_DEFAULT_LADDER = tuple(10.0**-k for k in range(2, 9))


def condensation_check(
    fs: Sequence[Sequence[Any]],
    q: int,
    a: Any,
    tail_points: Sequence[Any] = (),
    order: str = "stated",
    ladder: Sequence[float] | None = None,
    sigma: Any = None,
    precision_bits: int | None = None,
    tolerance_log2: int = -33,
) -> EvalReport:
    """Numerically verify the determinant condensation identity.

    fs are polynomials given as dense ascending coefficient lists.  The
    first q evaluation points collide to the point a along the ladder
    u_i = a + eps*sigma^i while the tail points stay fixed; the quotient
    det(f_j(x_i)) / Delta(colliding block) is compared against the exact
    determinant with derivative rows f_j^(r)(a)/r!.

    order='stated' divides by Delta(u_q,...,u_1) and uses ascending
    derivative rows (order 0 at the top); order='reversed' divides by
    Delta(u_1,...,u_q) and uses descending derivative rows.  The report
    value is the Richardson extrapolation of the last two ladder rungs;
    details carry the per-rung relative errors and observed rates.
    """
    J = len(fs)
    if J < 1:
        raise DimensionError("need at least one function")
    if not 1 <= q <= J:
        raise DomainError("q must satisfy 1 <= q <= {}, got {}".format(J, q))
    if len(tail_points) != J - q:
        raise DimensionError(
            "need exactly J - q = {} tail points, got {}".format(J - q, len(tail_points))
        )
    if order not in ("stated", "reversed"):
        raise DomainError("order must be 'stated' or 'reversed', got {!r}".format(order))

    coeff_values: list[ComplexValue] = []
    term_lists: list[list[Term]] = []
    for coeffs in fs:
        vals = as_values(coeffs, precision_bits)
        coeff_values.extend(vals)
        term_lists.append(dense_to_terms(vals))
    a_val = as_value(a, precision_bits)
    tail = as_values(tail_points, precision_bits)
    bits = min_precision(coeff_values + [a_val] + list(tail), default=precision_bits)
    sig = as_value(sigma, bits) if sigma is not None else ComplexValue.make("0.8", "0.45", bits)
    eps_ladder = tuple(_DEFAULT_LADDER if ladder is None else ladder)
    if len(eps_ladder) < 2:
        raise DomainError("the ladder needs at least two rungs for extrapolation")

    # exact right hand side: derivative block plus fixed tail rows
    rhs_rows = []
    for i in range(1, q + 1):
        r = i - 1 if order == "stated" else q - i
        rhs_rows.append([eval_terms(scaled_derivative_terms(tl, r), a_val, bits) for tl in term_lists])
    for t in tail:
        rhs_rows.append([eval_terms(tl, t, bits) for tl in term_lists])
    rhs = det(ComplexMatrix(rhs_rows, bits))

    ladder_values: list[ComplexValue] = []
    rel_errors: list[float] = []
    for eps in eps_ladder:
        eps_val = ComplexValue.make(repr(float(eps)), 0, bits)
        block = [a_val + eps_val * sig**i for i in range(1, q + 1)]
        pts = list(block) + list(tail)
        matrix = ComplexMatrix([[eval_terms(tl, p, bits) for tl in term_lists] for p in pts], bits)
        denom_order = tuple(reversed(block)) if order == "stated" else tuple(block)
        denom = vandermonde(denom_order, bits)
        if denom.is_zero():
            raise PoleError("ladder points collided exactly; sigma powers must stay distinct")
        value = det(matrix) / denom
        ladder_values.append(value)
        rel_errors.append(rel_error_float(value, rhs))

    # first-order Richardson extrapolation from the last two rungs
    e1, e2 = eps_ladder[-2], eps_ladder[-1]
    v1, v2 = ladder_values[-2], ladder_values[-1]
    w = ComplexValue.make(repr(float(e1 / (e1 - e2))), 0, bits)
    extrapolated = v2 + (v2 - v1) * (w - 1)

    rates = [
        rel_errors[i] / rel_errors[i + 1]
        for i in range(len(rel_errors) - 1)
        if rel_errors[i + 1] > 0
    ]
    details = {
        "ladder_eps": [float(e) for e in eps_ladder],
        "ladder_rel_errors": rel_errors,
        "observed_rates": rates,
        "order": order,
    }
    return make_report("condensation-{}".format(order), extrapolated, rhs, tolerance_log2, details=details)
