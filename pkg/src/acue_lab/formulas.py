"""Closed-form moments and ratios of characteristic polynomials.

Every public function here evaluates a closed formula for an average over
one of the two ensembles in :mod:`acue_lab.ensembles`:

* ``acue_moment`` / ``cue_moment``: determinant-over-Vandermonde formulas
  for E[det(g)^(-K) * prod_k det(1 + v_k g)] built from the column
  families ``phi_column`` and ``psi_column``.
* ``acue_ratio`` / ``cue_ratio``: determinant-ratio formulas for
  E[prod_j det(1 + v_j g) / det(1 + u_j g)] with Cauchy-kernel entries.
* ``swap2_acue`` / ``swap2_cue``: explicit two-over-two rational forms.
* ``moment_from_ratio_limit``: numerical confluence check sending the
  denominator shifts of the ratio formula to 0 and infinity so that the
  ratio degenerates to the moment.

All arithmetic goes through :class:`acue_lab.numeric.ComplexValue`, so
results carry their working precision and serialize losslessly.
"""

from __future__ import annotations

import dataclasses
import enum
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import ConditioningError, DimensionError, DomainError, PoleError
from .numeric import (
    ComplexMatrix,
    ComplexValue,
    EvalReport,
    Term,
    alternant_ratio,
    as_value,
    as_values,
    make_report,
    min_precision,
    pole_threshold_log2,
    rel_error_float,
    rel_tolerance_log2,
    require_disjoint,
    require_separated,
    vandermonde,
)

__all__ = [
    "MomentSpec",
    "Role",
    "ShiftSet",
    "acue_moment",
    "acue_ratio",
    "bos_compose",
    "cue_moment",
    "cue_ratio",
    "f_kernel",
    "h_func",
    "moment_from_ratio_limit",
    "one_ratio_acue",
    "p_poly",
    "phi_column",
    "psi_column",
    "swap2_acue",
    "swap2_cue",
]


class Role(enum.Enum):
    """Which side of a ratio a group of shifts parameterizes."""

    NUMERATOR = "numerator"
    DENOMINATOR = "denominator"


@dataclass(frozen=True)
class ShiftSet:
    """An ordered tuple of shift points tagged with their ratio role.

    Numerator shifts are the ``v`` arguments of det(1 + v g) factors;
    denominator shifts are the ``u`` arguments of the det(1 + u g)
    divisors, which carry extra pole constraints per ensemble.
    """

    values: tuple[ComplexValue, ...]
    role: Role

    @classmethod
    def numerator(cls, values: Sequence[Any], precision_bits: int | None = None) -> "ShiftSet":
        return cls(tuple(as_values(values, precision_bits)), Role.NUMERATOR)

    @classmethod
    def denominator(cls, values: Sequence[Any], precision_bits: int | None = None) -> "ShiftSet":
        return cls(tuple(as_values(values, precision_bits)), Role.DENOMINATOR)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, idx: int) -> ComplexValue:
        return self.values[idx]

    @property
    def precision_bits(self) -> int:
        return min_precision(self.values)


def _coerce_points(xs: Any, precision_bits: int | None = None) -> tuple[ComplexValue, ...]:
    if isinstance(xs, ShiftSet):
        return xs.values
    return tuple(as_values(xs, precision_bits))


@dataclass(frozen=True)
class MomentSpec:
    """Parameters of a moment E[det(g)^(-K) * prod_{k<=K+L} det(1 + v_k g)].

    ``n`` is the matrix size, ``k`` the inverse-determinant power, ``l``
    the excess number of factors, and ``shifts`` the K+L points v_k.
    """

    n: int
    k: int
    l: int
    shifts: tuple[ComplexValue, ...]

    def __init__(self, n: int, k: int, l: int, shifts: Any, precision_bits: int | None = None):
        if n < 1:
            raise DomainError("matrix size n must be >= 1, got {}".format(n))
        if k < 1 or l < 1:
            raise DomainError("moment orders k and l must be >= 1, got k={} l={}".format(k, l))
        vals = _coerce_points(shifts, precision_bits)
        if len(vals) != k + l:
            raise DimensionError(
                "need k+l = {} shifts, got {}".format(k + l, len(vals))
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "shifts", vals)

    @property
    def precision_bits(self) -> int:
        return min_precision(self.shifts)


def _h_exponent(n: int, ell: int) -> int | None:
    """Exponent e with H_{n,ell}(v) = v**e, or None when that branch is 0.

    The residue of ell mod 2n decides the branch, so any integer ell is
    accepted.
    """
    if n < 1:
        raise DomainError("n must be >= 1, got {}".format(n))
    r = ell % (2 * n)
    if r <= n - 1:
        return None
    return r - n


def h_func(n: int, ell: int, v: Any) -> ComplexValue:
    """Step-truncated power: 0 when ell mod 2n < n, else v**(ell mod 2n - n)."""
    val = as_value(v)
    e = _h_exponent(n, ell)
    if e is None:
        return ComplexValue.zero(val.precision_bits)
    return val**e


def p_poly(n: int, ell: int, v: Any) -> ComplexValue:
    """Laurent polynomial 1/v**(ell+1) - v**(n-1) * h_func(n, ell, 1/v).

    Appears as the confluent limit of the one-ratio kernel's Taylor
    coefficients in the denominator variable.
    """
    if ell < 0:
        raise DomainError("p_poly needs ell >= 0, got {}".format(ell))
    val = as_value(v)
    if val.is_zero():
        raise PoleError("p_poly has a pole of order {} at v = 0".format(ell + 1))
    inv = ComplexValue.one(val.precision_bits) / val
    return inv ** (ell + 1) - val ** (n - 1) * h_func(n, ell, inv)


def _check_column_index(k: int, l: int, i: int) -> None:
    if k < 1 or l < 1:
        raise DomainError("column families need k >= 1 and l >= 1, got k={} l={}".format(k, l))
    if i < 1 or i > k + l:
        raise DomainError("column index i must satisfy 1 <= i <= k+l = {}, got {}".format(k + l, i))


def phi_column(n: int, k: int, l: int, i: int, v: Any) -> ComplexValue:
    """Entry function phi_i(v) of the moment determinant, 1-based in i.

    For i <= k this is v**(n+l+k-i) - v**l * H_{n,k-i}(v); for i > k it
    is v**(k+l-i) - v**(l+n-1) * H_{n,i-k-1}(1/v).  Evaluation is
    pointwise: when the i > k branch actually needs a positive power of
    1/v, v = 0 raises rather than cancelling exponents symbolically.
    """
    _check_column_index(k, l, i)
    val = as_value(v)
    if i <= k:
        head = val ** (n + l + k - i)
        e = _h_exponent(n, k - i)
        if e is None:
            return head
        return head - val ** (l + e)
    ell = i - k - 1
    head = val ** (k + l - i)
    e = _h_exponent(n, ell)
    if e is None:
        return head
    tail = val ** (l + n - 1)
    if e == 0:
        return head - tail
    if val.is_zero():
        raise PoleError(
            "phi_column(i={}) needs (1/v)**{} and v is 0".format(i, e)
        )
    inv = ComplexValue.one(val.precision_bits) / val
    return head - tail * inv**e


def psi_column(n: int, k: int, l: int, i: int, v: Any) -> ComplexValue:
    """Entry function psi_i(v) of the unconstrained-ensemble determinant."""
    _check_column_index(k, l, i)
    val = as_value(v)
    if i <= k:
        return val ** (n + l + k - i)
    return val ** (k + l - i)


def _phi_terms(n: int, k: int, l: int, i: int) -> list[Term]:
    """phi_i as a list of (coefficient, exponent) monomials.

    Only valid when the i > k branch does not invert v, i.e. when the
    combined exponent l+n-1-e stays nonnegative; that always holds since
    e <= n-1.
    """
    _check_column_index(k, l, i)
    if i <= k:
        terms: list[Term] = [(1, n + l + k - i)]
        e = _h_exponent(n, k - i)
        if e is not None:
            terms.append((-1, l + e))
        return terms
    ell = i - k - 1
    terms = [(1, k + l - i)]
    e = _h_exponent(n, ell)
    if e is not None:
        terms.append((-1, l + n - 1 - e))
    return terms


def _psi_terms(n: int, k: int, l: int, i: int) -> list[Term]:
    _check_column_index(k, l, i)
    if i <= k:
        return [(1, n + l + k - i)]
    return [(1, k + l - i)]


def _group_exact(points: Sequence[ComplexValue]) -> list[tuple[ComplexValue, int]]:
    groups: list[tuple[ComplexValue, int]] = []
    for p in points:
        for idx, (rep, mult) in enumerate(groups):
            if rep == p:
                groups[idx] = (rep, mult + 1)
                break
        else:
            groups.append((p, 1))
    return groups


def _cluster_near(points: Sequence[ComplexValue], log2_threshold: int) -> list[tuple[ComplexValue, int]]:
    from .symfunc import cluster_points

    return cluster_points(points, log2_threshold)


def _has_near_pair(groups: Sequence[tuple[ComplexValue, int]], log2_threshold: int) -> bool:
    reps = [g[0] for g in groups]
    try:
        require_separated(reps, log2_threshold, "shift")
    except PoleError:
        return True
    return False


def _moment_value(
    spec: MomentSpec,
    column_eval,
    column_terms,
    confluent: bool | None,
) -> ComplexValue:
    bits = spec.precision_bits
    thr = pole_threshold_log2(bits)
    j = spec.k + spec.l

    for idx, v in enumerate(spec.shifts):
        if not v.is_zero():
            continue
        for i in range(spec.k + 1, j + 1):
            e = _h_exponent(spec.n, i - spec.k - 1)
            if e is not None and e > 0:
                raise PoleError(
                    "shift {} is 0 but column {} needs (1/v)**{}".format(idx, i, e)
                )

    exact_groups = _group_exact(spec.shifts)
    has_exact_dup = len(exact_groups) < j
    near_dup = _has_near_pair(exact_groups, thr)

    if confluent is False and (has_exact_dup or near_dup):
        raise ConditioningError(
            "repeated or nearly repeated shifts with confluent evaluation disabled"
        )

    if confluent is True:
        groups = _cluster_near(spec.shifts, thr)
        cols = [column_terms(spec.n, spec.k, spec.l, i) for i in range(1, j + 1)]
        return alternant_ratio(cols, groups, bits)

    if has_exact_dup or near_dup:
        if near_dup:
            raise ConditioningError(
                "shifts closer than 2^{} but not equal; pass confluent=True "
                "to group them or separate the points".format(thr)
            )
        cols = [column_terms(spec.n, spec.k, spec.l, i) for i in range(1, j + 1)]
        return alternant_ratio(cols, exact_groups, bits)

    rows = [
        [column_eval(spec.n, spec.k, spec.l, i, v) for v in spec.shifts]
        for i in range(1, j + 1)
    ]
    num = ComplexMatrix(rows, bits).det()
    den = vandermonde(spec.shifts, bits)
    if den.is_zero():
        raise ConditioningError("shift Vandermonde vanished unexpectedly")
    return num / den


def acue_moment(spec: MomentSpec, confluent: bool | None = None) -> ComplexValue:
    """Closed form for E[det(g)^(-k) * prod det(1 + v g)] over the root ensemble.

    ``confluent=None`` evaluates pointwise for distinct shifts and
    switches to the derivative-row (confluent) determinant exactly when
    shifts repeat; nearly equal but unequal shifts raise
    ConditioningError unless ``confluent=True`` forces clustering.
    """
    return _moment_value(spec, phi_column, _phi_terms, confluent)


def cue_moment(spec: MomentSpec, confluent: bool | None = None) -> ComplexValue:
    """Same moment over the unconstrained unitary ensemble.

    Equals the Schur polynomial s_{(n^k)}(shifts); agrees with
    acue_moment whenever k <= n and l <= n.
    """
    return _moment_value(spec, psi_column, _psi_terms, confluent)


def _acue_kernel(n: int, u: ComplexValue, v: ComplexValue) -> ComplexValue:
    """(1 - u**n v**n) / (1 - u**(2n)) with no pole guards of its own."""
    one = ComplexValue.one(min(u.precision_bits, v.precision_bits))
    un = u**n
    return (one - un * v**n) / (one - un * un)


def _require_not_root_of_unity(
    us: Sequence[ComplexValue], n: int, log2_threshold: int, what: str
) -> None:
    one = ComplexValue.one(min_precision(us))
    for idx, u in enumerate(us):
        gap = u ** (2 * n) - one
        if _below(gap, log2_threshold):
            raise PoleError(
                "{}[{}]**(2n) is within 2^{} of 1; the kernel denominator "
                "1 - u**(2n) vanishes there".format(what, idx, log2_threshold)
            )


def _below(x: ComplexValue, log2_threshold: int) -> bool:
    from .numeric import magnitude_below

    return magnitude_below(x, log2_threshold)


def one_ratio_acue(n: int, v: Any, u: Any) -> ComplexValue:
    """E[det(1 + v g) / det(1 + u g)] = (1 - u**n v**n) / (1 - u**(2n)).

    Exact at every matrix size n.  u may not sit within the pole
    threshold of a 2n-th root of unity.  u = 0 gives 1; v = u gives 1.
    """
    if n < 1:
        raise DomainError("n must be >= 1, got {}".format(n))
    vv = as_value(v)
    uu = as_value(u)
    bits = min(vv.precision_bits, uu.precision_bits)
    _require_not_root_of_unity([uu], n, pole_threshold_log2(bits), "u")
    return _acue_kernel(n, uu, vv)


def _cauchy_factor(u: ComplexValue, v: ComplexValue) -> ComplexValue:
    one = ComplexValue.one(min(u.precision_bits, v.precision_bits))
    return one / (u - v)


def _ratio_dets(
    n: int,
    v_vals: tuple[ComplexValue, ...],
    u_vals: tuple[ComplexValue, ...],
    entry_kernel,
) -> ComplexValue:
    bits = min(min_precision(v_vals), min_precision(u_vals))
    jj = len(v_vals)
    num_rows = []
    den_rows = []
    for u in u_vals:
        num_row = []
        den_row = []
        for v in v_vals:
            cf = _cauchy_factor(u, v)
            num_row.append(cf * entry_kernel(u, v))
            den_row.append(cf)
        num_rows.append(num_row)
        den_rows.append(den_row)
    num = ComplexMatrix(num_rows, bits).det()
    den = ComplexMatrix(den_rows, bits).det()
    if den.is_zero():
        raise ConditioningError("Cauchy determinant vanished; shifts are too close")
    return num / den


def _validate_ratio_shifts(
    n: int,
    vs: Any,
    us: Any,
    precision_bits: int | None,
) -> tuple[tuple[ComplexValue, ...], tuple[ComplexValue, ...], int]:
    v_vals = _coerce_points(vs, precision_bits)
    u_vals = _coerce_points(us, precision_bits)
    if n < 1:
        raise DomainError("n must be >= 1, got {}".format(n))
    if not v_vals or len(v_vals) != len(u_vals):
        raise DimensionError(
            "need equally many nonempty numerator and denominator shifts, "
            "got {} and {}".format(len(v_vals), len(u_vals))
        )
    bits = min(min_precision(v_vals), min_precision(u_vals))
    thr = pole_threshold_log2(bits)
    require_separated(u_vals, thr, "u")
    require_separated(v_vals, thr, "v")
    require_disjoint(u_vals, v_vals, thr)
    return v_vals, u_vals, bits


def acue_ratio(
    n: int, vs: Any, us: Any, precision_bits: int | None = None
) -> ComplexValue:
    """E[prod_j det(1 + v_j g) / det(1 + u_j g)] over the root ensemble.

    Ratio of two J x J determinants: entries (1/(u_i - v_j)) times the
    kernel (1 - u_i**n v_j**n)/(1 - u_i**(2n)) over plain Cauchy entries.
    Exact at every n; denominator shifts must avoid 2n-th roots of unity.
    """
    v_vals, u_vals, bits = _validate_ratio_shifts(n, vs, us, precision_bits)
    _require_not_root_of_unity(u_vals, n, pole_threshold_log2(bits), "u")
    return _ratio_dets(n, v_vals, u_vals, lambda u, v: _acue_kernel(n, u, v))


def bos_compose(
    n: int, vs: Any, us: Any, precision_bits: int | None = None
) -> ComplexValue:
    """Same ratio assembled entrywise from one_ratio_acue.

    Produces bit-identical results to acue_ratio: the entry arithmetic
    runs through the same kernel helper in the same order.
    """
    v_vals, u_vals, bits = _validate_ratio_shifts(n, vs, us, precision_bits)
    return _ratio_dets(n, v_vals, u_vals, lambda u, v: one_ratio_acue(n, v, u))


def _unit_circle_side(u: ComplexValue, log2_threshold: int) -> bool:
    """True when |u| < 1.  Raises when u is within the threshold of the circle.

    The test runs on |u|**2 - 1, which near the circle is about twice
    |u| - 1, so the threshold exponent shifts by one.
    """
    one = ComplexValue.one(u.precision_bits)
    gap = u * u.conj() - one
    if _below(gap, log2_threshold + 1):
        raise PoleError(
            "|u| is within 2^{} of 1; the circle kernel is discontinuous there".format(
                log2_threshold
            )
        )
    return gap.to_complex().real < 0.0


def cue_ratio(
    n: int, vs: Any, us: Any, precision_bits: int | None = None
) -> ComplexValue:
    """Haar-unitary ratio average, valid off the unit circle in each u.

    The kernel is 1 inside the circle and (v/u)**n outside, so the
    answer is piecewise in the u's; points on the circle are rejected.
    """
    v_vals, u_vals, bits = _validate_ratio_shifts(n, vs, us, precision_bits)
    thr = pole_threshold_log2(bits)
    for u in u_vals:
        _unit_circle_side(u, thr)

    def kernel(u: ComplexValue, v: ComplexValue) -> ComplexValue:
        if _unit_circle_side(u, thr):
            return ComplexValue.one(min(u.precision_bits, v.precision_bits))
        return v**n / u**n

    return _ratio_dets(n, v_vals, u_vals, kernel)


def f_kernel(n: int, u: Any, v: Any) -> ComplexValue:
    """Single entry of the ratio determinant: (1/(u-v)) * one-ratio kernel.

    Satisfies f(n, u, v) = -f(n, 1/u, 1/v) * v**(n-1) / u**(n+1) away
    from poles.
    """
    if n < 1:
        raise DomainError("n must be >= 1, got {}".format(n))
    uu = as_value(u)
    vv = as_value(v)
    bits = min(uu.precision_bits, vv.precision_bits)
    thr = pole_threshold_log2(bits)
    if _below(uu - vv, thr):
        raise PoleError("u and v coincide within 2^{}".format(thr))
    _require_not_root_of_unity([uu], n, thr, "u")
    return _cauchy_factor(uu, vv) * _acue_kernel(n, uu, vv)


def _swap2_cue_terms(
    n: int,
    alpha: ComplexValue,
    beta: ComplexValue,
    gamma: ComplexValue,
    delta: ComplexValue,
    thr: int,
) -> tuple[ComplexValue, ComplexValue, ComplexValue, ComplexValue]:
    """Both summands of the 2/2 circle-average, before ensemble factors.

    Returns (term1, term2, ab, inv_ab) so the root-ensemble variant can
    reuse them.
    """
    one = ComplexValue.one(
        min(alpha.precision_bits, beta.precision_bits, gamma.precision_bits, delta.precision_bits)
    )
    if alpha.is_zero() or beta.is_zero():
        raise PoleError("alpha and beta must be nonzero: term two divides by them")
    ab = alpha * beta
    den_ab = one - ab
    if _below(den_ab, thr):
        raise PoleError("denominator factor 1 - alpha*beta vanishes")
    den_dg = one - delta * gamma
    if _below(den_dg, thr):
        raise PoleError("denominator factor 1 - delta*gamma vanishes")
    inv_ab = one / ab
    den_inv = one - inv_ab
    if _below(den_inv, thr):
        raise PoleError("denominator factor 1 - 1/(alpha*beta) vanishes")
    den_gd = one - gamma * delta
    if _below(den_gd, thr):
        raise PoleError("denominator factor 1 - gamma*delta vanishes")
    term1 = (one - beta * gamma) * (one - alpha * delta) / (den_dg * den_ab)
    term2 = (
        ab**n
        * (one - gamma / alpha)
        * (one - delta / beta)
        / (den_inv * den_gd)
    )
    return term1, term2, ab, inv_ab


def swap2_cue(n: int, alpha: Any, beta: Any, gamma: Any, delta: Any) -> ComplexValue:
    """Two-over-two Haar-unitary ratio with numerator shifts alpha, beta
    swapped across the unit circle and denominator shifts gamma, delta
    strictly inside it.

    At gamma = delta = 0 this reduces to sum_{m=0}^{n} (alpha*beta)**m.
    """
    if n < 1:
        raise DomainError("n must be >= 1, got {}".format(n))
    a, b, g, d = as_values([alpha, beta, gamma, delta])
    bits = min_precision([a, b, g, d])
    thr = pole_threshold_log2(bits)
    for name, x in (("gamma", g), ("delta", d)):
        inside = _unit_circle_side(x, thr)
        if not inside:
            raise DomainError(
                "{} must lie strictly inside the unit circle".format(name)
            )
    term1, term2, _, _ = _swap2_cue_terms(n, a, b, g, d, thr)
    return term1 + term2


def swap2_acue(n: int, alpha: Any, beta: Any, gamma: Any, delta: Any) -> ComplexValue:
    """Root-ensemble version of swap2_cue.

    Each circle-average summand picks up one-ratio kernel corrections in
    gamma and delta; gamma and delta must avoid the 2n-th roots of unity.
    """
    if n < 1:
        raise DomainError("n must be >= 1, got {}".format(n))
    a, b, g, d = as_values([alpha, beta, gamma, delta])
    bits = min_precision([a, b, g, d])
    thr = pole_threshold_log2(bits)
    one = ComplexValue.one(bits)
    _require_not_root_of_unity([g, d], n, thr, "denominator shift")
    term1, term2, ab, inv_ab = _swap2_cue_terms(n, a, b, g, d, thr)
    gn = g**n
    dn = d**n
    g2n = gn * gn
    d2n = dn * dn
    an = a**n
    bn = b**n
    inv_an = one / an
    inv_bn = one / bn
    corr1 = ((one - an * gn) / (one - g2n)) * ((one - bn * dn) / (one - d2n))
    corr2 = ((one - inv_bn * gn) / (one - g2n)) * ((one - inv_an * dn) / (one - d2n))
    return term1 * corr1 + term2 * corr2


def moment_from_ratio_limit(
    spec: MomentSpec,
    ladder: Sequence[float] | None = None,
    sigma: Any | None = None,
) -> EvalReport:
    """Degenerate the ratio formula into the moment and report the error.

    Denominator shifts are placed on two geometric arcs, one collapsing
    to 0 (l points) and one escaping to infinity (k points, contributing
    the prod u**n prefactor).  The report's value is the Richardson
    extrapolation of the last two ladder rungs, its reference the direct
    acue_moment, and it passes when the rung errors decrease (or sit at
    the precision floor).
    """
    bits = spec.precision_bits
    eps_ladder = tuple(ladder) if ladder is not None else (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
    if len(eps_ladder) < 2:
        raise DomainError("ladder needs at least two rungs")
    sig = as_value(sigma if sigma is not None else complex(0.83, 0.41), bits)
    reference = acue_moment(spec)

    def ladder_values(s: ComplexValue) -> list[ComplexValue]:
        vals = []
        for eps in eps_ladder:
            e = as_value(eps, bits)
            small = [e * s**m for m in range(1, spec.l + 1)]
            big = [s**m / e for m in range(1, spec.k + 1)]
            pref = ComplexValue.one(bits)
            for u in big:
                pref = pref * u**spec.n
            ratio = acue_ratio(spec.n, spec.shifts, tuple(big) + tuple(small))
            vals.append(pref * ratio)
        return vals

    try:
        values = ladder_values(sig)
    except PoleError:
        wiggle = as_value(complex(0.9998766, 0.0157073), bits)
        values = ladder_values(sig * wiggle)

    errors = [rel_error_float(v, reference) for v in values]
    floor = 2.0 ** rel_tolerance_log2(bits)
    decreasing = all(
        errors[i + 1] < errors[i] or errors[i + 1] <= floor for i in range(len(errors) - 1)
    )

    e1, e2 = errors[-2], errors[-1]
    v1, v2 = values[-2], values[-1]
    if e1 > e2 > 0.0:
        w = e1 / (e1 - e2)
        extrapolated = v2 + (v2 - v1) * as_value(w - 1.0, bits)
    else:
        extrapolated = v2

    report = make_report(
        label="moment-from-ratio-limit(n={}, k={}, l={})".format(spec.n, spec.k, spec.l),
        value=extrapolated,
        reference=reference,
        tolerance_log2=rel_tolerance_log2(bits) // 2,
        details={
            "ladder_eps": list(eps_ladder),
            "ladder_rel_errors": errors,
            "decreasing": decreasing,
        },
    )
    # Pass/fail is about convergence of the ladder, not the extrapolated
    # endpoint alone.
    return dataclasses.replace(report, passed=decreasing)
