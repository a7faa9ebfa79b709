"""Large-size scaling limits of the ratio averages.

Under the exponential scaling u = e^(-mu/N), v = e^(-nu/N), the ratio
formulas of :mod:`acue_lab.formulas` converge (entrywise, hence as
determinant ratios) to size-free kernels in the scaled shifts mu and nu:

* ``e_limit_kernel``: the Haar-unitary limit, piecewise in sign(Re mu);
* ``ae_limit_kernel``: the root-ensemble limit
  (1 - e^(-mu-nu)) / (1 - e^(-2mu)), which the finite-size one-ratio
  kernel reproduces exactly at every size under that scaling;
* ``ratio_limit_det``: the J x J determinant ratio built from either
  kernel over plain Cauchy entries 1/(nu_j - mu_i);
* ``averaged_acue_limit``: the rotation average of the root-ensemble
  determinant, computed as a unit-circle contour quadrature.

The averaged form exists because the root ensemble is not rotation
invariant in the scaled variables: rotating the ensemble by an angle
pi*r shifts every mu and nu by -i*pi*r, and averaging r over [0, 1)
produces the contour integral evaluated here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .ensembles import roots_of_unity
from .errors import ConditioningError, ContourError, DimensionError, DomainError, PoleError
from .numeric import (
    ComplexMatrix,
    ComplexValue,
    as_value,
    as_values,
    magnitude_below,
    min_precision,
    pole_threshold_log2,
    require_disjoint,
    require_separated,
)

__all__ = [
    "DEFAULT_QUADRATURE_POINTS",
    "ScaledShifts",
    "ae_limit_kernel",
    "averaged_acue_limit",
    "e_limit_kernel",
    "ratio_limit_det",
]

DEFAULT_QUADRATURE_POINTS = 512


@dataclass(frozen=True)
class ScaledShifts:
    """Paired scaled shifts: mus for denominators, nus for numerators.

    Both tuples must have the same length J >= 1.  Kernel-specific
    constraints (Re mu away from 0, or e^(-2mu) away from 1) are checked
    by the operations, not here, because they differ per kernel.
    """

    mus: tuple[ComplexValue, ...]
    nus: tuple[ComplexValue, ...]

    def __init__(self, mus: Sequence[Any], nus: Sequence[Any], precision_bits: int | None = None):
        mu_vals = tuple(as_values(mus, precision_bits))
        nu_vals = tuple(as_values(nus, precision_bits))
        if not mu_vals or len(mu_vals) != len(nu_vals):
            raise DimensionError(
                "need equally many nonempty mus and nus, got {} and {}".format(
                    len(mu_vals), len(nu_vals)
                )
            )
        object.__setattr__(self, "mus", mu_vals)
        object.__setattr__(self, "nus", nu_vals)

    @property
    def j(self) -> int:
        return len(self.mus)

    @property
    def precision_bits(self) -> int:
        return min(min_precision(self.mus), min_precision(self.nus))

    def offset(self, delta: Any) -> "ScaledShifts":
        """All shifts translated by delta (used for rotation averages)."""
        d = as_value(delta, self.precision_bits)
        return ScaledShifts([m + d for m in self.mus], [n + d for n in self.nus])


def _real_part(x: ComplexValue) -> ComplexValue:
    half = as_value(0.5, x.precision_bits)
    return (x + x.conj()) * half


def e_limit_kernel(mu: Any, nu: Any) -> ComplexValue:
    """Piecewise Haar-unitary limit kernel: 1 for Re mu > 0, e^(mu-nu) for Re mu < 0.

    mu on (or within threshold of) the imaginary axis is rejected: the
    kernel jumps across it.
    """
    m = as_value(mu)
    n = as_value(nu)
    bits = min(m.precision_bits, n.precision_bits)
    thr = pole_threshold_log2(bits)
    re_mu = _real_part(m)
    if magnitude_below(re_mu, thr):
        raise DomainError(
            "Re(mu) is within 2^{} of 0; the limit kernel is discontinuous there".format(thr)
        )
    if re_mu.to_complex().real > 0.0:
        return ComplexValue.one(bits)
    return (m - n).exp()


def ae_limit_kernel(mu: Any, nu: Any) -> ComplexValue:
    """Root-ensemble limit kernel (1 - e^(-mu-nu)) / (1 - e^(-2mu)).

    Defined wherever e^(-2mu) != 1, i.e. mu off the lattice of integer
    multiples of i*pi; proximity is checked at the pole threshold.
    """
    m = as_value(mu)
    n = as_value(nu)
    bits = min(m.precision_bits, n.precision_bits)
    one = ComplexValue.one(bits)
    den = one - (-(m + m)).exp()
    if magnitude_below(den, pole_threshold_log2(bits)):
        raise PoleError(
            "e^(-2 mu) is within 2^{} of 1; kernel denominator vanishes".format(
                pole_threshold_log2(bits)
            )
        )
    return (one - (-(m + n)).exp()) / den


_KERNELS = {
    "cue": e_limit_kernel,
    "acue": ae_limit_kernel,
}


def _validated(shifts: ScaledShifts) -> int:
    bits = shifts.precision_bits
    thr = pole_threshold_log2(bits)
    require_separated(shifts.mus, thr, "mu")
    require_separated(shifts.nus, thr, "nu")
    require_disjoint(shifts.mus, shifts.nus, thr, "mu", "nu")
    return bits


def ratio_limit_det(shifts: ScaledShifts, kernel: str = "cue") -> ComplexValue:
    """J x J limit of the ratio average at the scaled shifts.

    Numerator entries are kernel(mu_i, nu_j)/(nu_j - mu_i) with the
    kernel chosen by name ('cue' or 'acue'); the denominator is the
    plain Cauchy determinant.  For the cue kernel with every Re mu > 0
    the ratio is identically 1.
    """
    key = str(kernel).lower()
    if key not in _KERNELS:
        raise DomainError("kernel must be 'cue' or 'acue', got {!r}".format(kernel))
    kfunc = _KERNELS[key]
    bits = _validated(shifts)
    one = ComplexValue.one(bits)
    num_rows = []
    den_rows = []
    for mu in shifts.mus:
        num_row = []
        den_row = []
        for nu in shifts.nus:
            cf = one / (nu - mu)
            num_row.append(cf * kfunc(mu, nu))
            den_row.append(cf)
        num_rows.append(num_row)
        den_rows.append(den_row)
    den = ComplexMatrix(den_rows, bits).det()
    if den.is_zero():
        raise ConditioningError("Cauchy determinant vanished; shifts are too close")
    return ComplexMatrix(num_rows, bits).det() / den


def averaged_acue_limit(
    shifts: ScaledShifts, quadrature_points: int = DEFAULT_QUADRATURE_POINTS
) -> ComplexValue:
    """Rotation average of the root-ensemble limit determinant.

    Equals the average over z on the unit circle of the determinant with
    entries (1/(nu_j - mu_i)) * (1 - z e^(-mu_i-nu_j))/(1 - z e^(-2mu_i)),
    normalized by the Cauchy determinant.  The average uses equispaced
    trapezoidal quadrature, which converges geometrically because the
    integrand is analytic in a neighborhood of the circle whenever every
    |e^(-2mu_i)| stays away from 1; that separation is enforced up front.
    """
    if quadrature_points < 1:
        raise DomainError(
            "quadrature_points must be >= 1, got {}".format(quadrature_points)
        )
    bits = _validated(shifts)
    thr = pole_threshold_log2(bits)
    one = ComplexValue.one(bits)

    decay = [(-(mu + mu)).exp() for mu in shifts.mus]
    for i, w in enumerate(decay):
        gap = w * w.conj() - one
        if magnitude_below(gap, thr + 1):
            raise ContourError(
                "integrand pole for mu[{}] lies within 2^{} of the contour".format(i, thr)
            )

    cross = [[(-(mu + nu)).exp() for nu in shifts.nus] for mu in shifts.mus]
    cauchy = [[one / (nu - mu) for nu in shifts.nus] for mu in shifts.mus]
    den = ComplexMatrix(cauchy, bits).det()
    if den.is_zero():
        raise ConditioningError("Cauchy determinant vanished; shifts are too close")

    grid = roots_of_unity(quadrature_points, bits)
    acc = ComplexValue.zero(bits)
    for z in grid:
        rows = []
        for i in range(shifts.j):
            zden = one - z * decay[i]
            row = [
                cauchy[i][jj] * (one - z * cross[i][jj]) / zden
                for jj in range(shifts.j)
            ]
            rows.append(row)
        acc = acc + ComplexMatrix(rows, bits).det()
    avg = acc / as_value(quadrature_points, bits)
    return avg / den
