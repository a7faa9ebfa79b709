"""Verification suites: every closed formula against its oracle.

Each suite function draws seeded random inputs, evaluates a family of
closed formulas alongside an independent reference (usually exact
enumeration over the finite root ensemble), and returns a SuiteResult
with the worst observed error.  The CLI ``verify`` subcommand runs these;
the acceptance tests run them at full strength.

Error convention: ``err = |value - reference| / max(1, |reference|)``.
This matches plain relative error for O(1)-or-larger references and
degrades to absolute error near zero, which is what "closed form equals
0" cases need.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from random import Random
from typing import Callable, Sequence

from .ensembles import (
    PointConfiguration,
    acue_expect,
    char_poly,
    enumerate_acue,
    roots_of_unity,
    sample_cue,
)
from .errors import AcueLabError
from .formulas import (
    MomentSpec,
    acue_moment,
    acue_ratio,
    bos_compose,
    cue_moment,
    f_kernel,
    moment_from_ratio_limit,
    one_ratio_acue,
    p_poly,
    phi_column,
    psi_column,
    swap2_acue,
    swap2_cue,
)
from .numeric import (
    ComplexMatrix,
    ComplexValue,
    DEFAULT_PRECISION_BITS,
    as_value,
    as_values,
    cauchy_det_check,
    condensation_check,
    float_abs,
    pi_value,
)
from .symfunc import Partition, elementary, hook_expectation, pieri_check, schur_eval
from .zetalimits import (
    ScaledShifts,
    ae_limit_kernel,
    averaged_acue_limit,
    ratio_limit_det,
)

__all__ = [
    "SuiteResult",
    "VerifyParams",
    "agreement_scan",
    "available_suites",
    "moment_observable",
    "ratio_observable",
    "run_suite",
    "run_suites",
]


@dataclass(frozen=True)
class VerifyParams:
    """Knobs shared by all suites.

    n_max / trials of None mean "use the suite's full default"; the CLI
    passes smaller values for quick runs.
    """

    n_max: int | None = None
    trials: int | None = None
    precision_bits: int = DEFAULT_PRECISION_BITS
    seed: int = 20260819
    cap: int | None = None

    def pick_n(self, default: int) -> int:
        return default if self.n_max is None else max(1, min(self.n_max, default))

    def pick_trials(self, default: int) -> int:
        return default if self.trials is None else max(1, self.trials)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_err: float
    checks: int
    elapsed_seconds: float
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "max_rel_err": self.max_err,
            "checks": self.checks,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "failures": self.failures,
            "notes": self.notes,
        }


class _Recorder:
    """Accumulates per-check errors and failure messages for one suite."""

    def __init__(self, name: str):
        self.name = name
        self.max_err = 0.0
        self.checks = 0
        self.failures: list[str] = []
        self.notes: dict = {}
        self._start = time.monotonic()

    def check(self, label: str, err: float, tol: float) -> None:
        self.checks += 1
        if err > self.max_err:
            self.max_err = err
        if not (err < tol):
            self.failures.append("{}: err={:.3e} tol={:.3e}".format(label, err, tol))

    def require(self, label: str, condition: bool) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(label)

    def result(self) -> SuiteResult:
        return SuiteResult(
            name=self.name,
            passed=not self.failures,
            max_err=self.max_err,
            checks=self.checks,
            elapsed_seconds=time.monotonic() - self._start,
            failures=self.failures[:20],
            notes=self.notes,
        )


def hybrid_err(value: ComplexValue, reference: ComplexValue) -> float:
    """|value - reference| / max(1, |reference|)."""
    return float_abs(value - reference) / max(1.0, float_abs(reference))


# ---------------------------------------------------------------------------
# Observables for the enumeration oracle


def det_one_plus(config: PointConfiguration, shift: ComplexValue) -> ComplexValue:
    """det(1 + shift * g); char_poly computes det(1 - z g), so negate."""
    return char_poly(config, -shift)


def det_of(config: PointConfiguration) -> ComplexValue:
    acc = ComplexValue.one(config.precision_bits)
    for w in config.roots:
        acc = acc * w
    return acc


def moment_observable(shifts: Sequence[ComplexValue], k: int) -> Callable:
    def obs(config: PointConfiguration) -> ComplexValue:
        acc = ComplexValue.one(config.precision_bits)
        for s in shifts:
            acc = acc * det_one_plus(config, s)
        return acc / det_of(config) ** k

    return obs


def ratio_observable(
    vs: Sequence[ComplexValue], us: Sequence[ComplexValue]
) -> Callable:
    def obs(config: PointConfiguration) -> ComplexValue:
        acc = ComplexValue.one(config.precision_bits)
        for s in vs:
            acc = acc * det_one_plus(config, s)
        for s in us:
            acc = acc / det_one_plus(config, s)
        return acc

    return obs


# ---------------------------------------------------------------------------
# Random admissible inputs


def _random_complex(rng: Random, radius: float = 1.3) -> complex:
    return complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))


def random_shifts(
    rng: Random,
    count: int,
    bits: int,
    min_sep: float = 0.08,
    avoid_zero: float = 0.1,
    radius: float = 1.3,
) -> list[ComplexValue]:
    """Well-separated random points, bounded away from 0."""
    points: list[complex] = []
    while len(points) < count:
        z = _random_complex(rng, radius)
        if abs(z) < avoid_zero:
            continue
        if any(abs(z - w) < min_sep for w in points):
            continue
        points.append(z)
    return [as_value(z, bits) for z in points]


def random_acue_denominators(
    rng: Random, n: int, count: int, bits: int, min_sep: float = 0.08
) -> list[ComplexValue]:
    """Shifts with |u^(2n) - 1| > 1e-2, pairwise separated."""
    points: list[complex] = []
    while len(points) < count:
        z = _random_complex(rng)
        if abs(z) < 0.1 or abs(z ** (2 * n) - 1) <= 1e-2:
            continue
        if any(abs(z - w) < min_sep for w in points):
            continue
        points.append(z)
    return [as_value(z, bits) for z in points]


def _disjoint_from(
    rng: Random,
    taken: Sequence[ComplexValue],
    maker: Callable[[], list[ComplexValue]],
    min_sep: float = 0.08,
) -> list[ComplexValue]:
    taken_c = [t.to_complex() for t in taken]
    while True:
        cand = maker()
        if all(
            abs(c.to_complex() - t) >= min_sep for c in cand for t in taken_c
        ):
            return cand


# ---------------------------------------------------------------------------
# Suites


def suite_normalization(params: VerifyParams) -> SuiteResult:
    """Enumerated weights sum to 1 for every size up to 6."""
    rec = _Recorder("normalization")
    bits = params.precision_bits
    one = ComplexValue.one(bits)
    for n in range(1, params.pick_n(6) + 1):
        total = acue_expect(n, lambda config: 1, precision_bits=bits, cap=params.cap)
        rec.check("weights-sum(n={})".format(n), hybrid_err(total, one), 2.0**-200)
    return rec.result()


def suite_hook_expectations(params: VerifyParams) -> SuiteResult:
    """Closed-form hook-shape expectations vs the enumeration oracle."""
    rec = _Recorder("hook-expectations")
    bits = params.precision_bits
    for n in range(1, params.pick_n(4) + 1):
        for b in range(0, n):
            for a in range(1, 4 * n - b + 1):
                closed = hook_expectation(n, a, b, precision_bits=bits)
                lam = Partition.hook(a, b)
                oracle = acue_expect(
                    n,
                    lambda config, _lam=lam: schur_eval(_lam, config.roots),
                    precision_bits=bits,
                    cap=params.cap,
                )
                rec.check(
                    "hook(n={},a={},b={})".format(n, a, b),
                    hybrid_err(closed, oracle),
                    2.0**-120,
                )
                want = 0
                if (a + b) % (2 * n) == 0:
                    want = (-1) ** b
                got = closed.to_complex()
                rec.require(
                    "hook-exact(n={},a={},b={})".format(n, a, b),
                    got == complex(want, 0),
                )
    return rec.result()


def suite_one_ratio(params: VerifyParams) -> SuiteResult:
    """One-over-one ratio closed form vs the oracle, random shifts."""
    rec = _Recorder("one-ratio")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 3)
    per_n = params.pick_trials(100)
    for n in range(1, params.pick_n(4) + 1):
        for t in range(per_n):
            u = random_acue_denominators(rng, n, 1, bits)[0]
            v = _disjoint_from(rng, [u], lambda: random_shifts(rng, 1, bits))[0]
            closed = one_ratio_acue(n, v, u)
            oracle = acue_expect(
                n, ratio_observable([v], [u]), precision_bits=bits, cap=params.cap
            )
            rec.check(
                "one-ratio(n={},trial={})".format(n, t),
                hybrid_err(closed, oracle),
                2.0**-120,
            )
    return rec.result()


def suite_ratio_composition(params: VerifyParams) -> SuiteResult:
    """J-fold ratio determinant: bitwise path equality and oracle match."""
    rec = _Recorder("ratio-composition")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 4)
    per_cell = params.pick_trials(50)
    for n in range(1, params.pick_n(4) + 1):
        for jj in (1, 2, 3):
            for t in range(per_cell):
                us = random_acue_denominators(rng, n, jj, bits)
                vs = _disjoint_from(
                    rng, us, lambda _j=jj: random_shifts(rng, _j, bits)
                )
                a = acue_ratio(n, vs, us)
                b = bos_compose(n, vs, us)
                rec.require(
                    "bitwise(n={},j={},trial={})".format(n, jj, t), a == b
                )
                oracle = acue_expect(
                    n, ratio_observable(vs, us), precision_bits=bits, cap=params.cap
                )
                rec.check(
                    "ratio-oracle(n={},j={},trial={})".format(n, jj, t),
                    hybrid_err(a, oracle),
                    2.0**-100,
                )
    return rec.result()


def suite_moments(params: VerifyParams) -> SuiteResult:
    """Moment determinant vs oracle across the full (k, l) window."""
    rec = _Recorder("moments")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 5)
    per_cell = params.pick_trials(25)
    for n in range(1, params.pick_n(4) + 1):
        for k in range(1, n + 3):
            for l in range(1, n + 3):
                for t in range(per_cell):
                    shifts = random_shifts(rng, k + l, bits)
                    spec = MomentSpec(n, k, l, shifts)
                    closed = acue_moment(spec)
                    oracle = acue_expect(
                        n,
                        moment_observable(shifts, k),
                        precision_bits=bits,
                        cap=params.cap,
                    )
                    rec.check(
                        "moment(n={},k={},l={},trial={})".format(n, k, l, t),
                        hybrid_err(closed, oracle),
                        2.0**-100,
                    )
    # golden vectors at fixed small sizes
    v1, v2 = as_values([0.37 + 0.22j, -0.81 + 0.45j], bits)
    golden = acue_moment(MomentSpec(1, 1, 1, [v1, v2]))
    rec.check("golden-sum", hybrid_err(golden, v1 + v2), 2.0**-200)
    sh = as_values([2, 3, 5, 7], bits)
    g2 = acue_moment(MomentSpec(1, 2, 2, sh))
    e2 = elementary(2, sh, bits)
    e4 = elementary(4, sh, bits)
    want = ComplexValue.one(bits) + e2 + e4
    rec.check("golden-1+e2+e4", hybrid_err(g2, want), 2.0**-200)
    rec.notes["golden_value"] = g2.to_complex().real
    return rec.result()


def agreement_scan(
    n: int,
    kmax: int,
    lmax: int,
    trials: int,
    seed: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> list[dict]:
    """Max |acue_moment - cue_moment| over random shifts, per (k, l) cell."""
    rng = Random(seed)
    rows = []
    for k in range(1, kmax + 1):
        for l in range(1, lmax + 1):
            worst = 0.0
            for _ in range(trials):
                shifts = random_shifts(rng, k + l, precision_bits)
                spec = MomentSpec(n, k, l, shifts)
                a = acue_moment(spec)
                c = cue_moment(spec)
                diff = float_abs(a - c) / max(1.0, float_abs(c))
                worst = max(worst, diff)
            rows.append(
                {
                    "k": k,
                    "l": l,
                    "max_rel_diff": worst,
                    "agree": worst < 1e-10,
                    "in_agreement_regime": k <= n and l <= n,
                }
            )
    return rows


def suite_agreement_boundary(params: VerifyParams) -> SuiteResult:
    """Moments of the two ensembles agree exactly when k, l <= n and split beyond."""
    rec = _Recorder("agreement-boundary")
    bits = params.precision_bits
    per_cell = params.pick_trials(5)
    for n in range(1, params.pick_n(3) + 1):
        rows = agreement_scan(n, n + 1, n + 1, per_cell, params.seed * 31 + 6, bits)
        for row in rows:
            if row["in_agreement_regime"]:
                rec.check(
                    "agree(n={},k={},l={})".format(n, row["k"], row["l"]),
                    row["max_rel_diff"],
                    2.0**-100,
                )
        breach = [
            row
            for row in rows
            if max(row["k"], row["l"]) == n + 1 and row["max_rel_diff"] > 1e-3
        ]
        rec.require("boundary-breach(n={})".format(n), bool(breach))
        zero_set_correct = all(
            row["agree"] == row["in_agreement_regime"] for row in rows
        )
        rec.require("zero-set(n={})".format(n), zero_set_correct)
    return rec.result()


_COLUMN_DISPLAY_CASES = [
    # (n, k, l, expected term lists per 1-based column index)
    (
        2,
        5,
        4,
        [
            [(1, 10)],
            [(1, 9), (-1, 5)],
            [(1, 8), (-1, 4)],
            [(1, 7)],
            [(1, 6)],
            [(1, 3)],
            [(1, 2)],
            [(1, 1), (-1, 5)],
            [(1, 0), (-1, 4)],
        ],
        [
            [(1, 10)],
            [(1, 9)],
            [(1, 8)],
            [(1, 7)],
            [(1, 6)],
            [(1, 3)],
            [(1, 2)],
            [(1, 1)],
            [(1, 0)],
        ],
    ),
    (
        1,
        2,
        2,
        [
            [(1, 4), (-1, 2)],
            [(1, 3)],
            [(1, 1)],
            [(1, 0), (-1, 2)],
        ],
        [
            [(1, 4)],
            [(1, 3)],
            [(1, 1)],
            [(1, 0)],
        ],
    ),
]


def suite_column_displays(params: VerifyParams) -> SuiteResult:
    """phi/psi column families reproduce the printed golden column vectors."""
    rec = _Recorder("column-displays")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 7)
    for n, k, l, phi_terms, psi_terms in _COLUMN_DISPLAY_CASES:
        sample_points = [as_value(_random_complex(rng, 1.5), bits) for _ in range(10)]
        for i in range(1, k + l + 1):
            for p, v in enumerate(sample_points):
                want_phi = ComplexValue.zero(bits)
                for c, e in phi_terms[i - 1]:
                    want_phi = want_phi + as_value(c, bits) * v**e
                got_phi = phi_column(n, k, l, i, v)
                rec.check(
                    "phi(n={},k={},l={},i={},pt={})".format(n, k, l, i, p),
                    hybrid_err(got_phi, want_phi),
                    2.0**-200,
                )
                want_psi = ComplexValue.zero(bits)
                for c, e in psi_terms[i - 1]:
                    want_psi = want_psi + as_value(c, bits) * v**e
                got_psi = psi_column(n, k, l, i, v)
                rec.check(
                    "psi(n={},k={},l={},i={},pt={})".format(n, k, l, i, p),
                    hybrid_err(got_psi, want_psi),
                    2.0**-200,
                )
    return rec.result()


def _taylor_coefficients(
    n: int, v: ComplexValue, count: int, bits: int, points: int = 256
) -> list[ComplexValue]:
    """Taylor coefficients of u -> f_kernel(n, u, v) at u = 0.

    Contour quadrature on |u| = 1/4 (inside the nearest pole at
    min(|v|, 1)); spectrally accurate.
    """
    radius = as_value(0.25, bits)
    grid = roots_of_unity(points, bits)
    samples = [f_kernel(n, radius * w, v) for w in grid]
    coeffs = []
    for ell in range(count):
        acc = ComplexValue.zero(bits)
        for m, w in enumerate(grid):
            # w^{-ell} = conjugate power trick: w is on the unit circle
            acc = acc + samples[m] * (w.conj() ** ell)
        coeffs.append(acc / as_value(points, bits) / radius**ell)
    return coeffs


def suite_determinant_machinery(params: VerifyParams) -> SuiteResult:
    """Cauchy identity, kernel functional equation, Taylor limits, ladders."""
    rec = _Recorder("determinant-machinery")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 8)

    cauchy_trials = params.pick_trials(500)
    for t in range(cauchy_trials):
        jj = rng.randint(1, 6)
        us = random_shifts(rng, jj, bits, min_sep=0.15, radius=2.0)
        vs = _disjoint_from(
            rng,
            us,
            lambda _j=jj: random_shifts(rng, _j, bits, min_sep=0.15, radius=2.0),
            min_sep=0.15,
        )
        report = cauchy_det_check(us, vs, precision_bits=bits)
        rec.check("cauchy(trial={},j={})".format(t, jj), report.rel_error, 2.0**-100)

    one = ComplexValue.one(bits)
    for n in range(1, params.pick_n(4) + 1):
        for t in range(params.pick_trials(100)):
            u = random_acue_denominators(rng, n, 1, bits)[0]
            v = _disjoint_from(rng, [u], lambda: random_shifts(rng, 1, bits))[0]
            # the inverted arguments must stay admissible too
            try:
                lhs = f_kernel(n, u, v)
                rhs = -(f_kernel(n, one / u, one / v)) * v ** (n - 1) / u ** (n + 1)
            except AcueLabError:
                continue
            rec.check(
                "functional-eq(n={},trial={})".format(n, t),
                hybrid_err(lhs, rhs),
                2.0 ** -(bits // 2),
            )

    for n in range(1, params.pick_n(4) + 1):
        v = as_value(0.72 - 0.31j, bits)
        coeffs = _taylor_coefficients(n, v, 4 * n + 1, bits)
        for ell in range(4 * n + 1):
            want = -p_poly(n, ell, v)
            rec.check(
                "taylor(n={},ell={})".format(n, ell),
                hybrid_err(coeffs[ell], want),
                1e-20,
            )

    ladder_specs = [
        MomentSpec(1, 1, 1, random_shifts(rng, 2, bits)),
        MomentSpec(2, 3, 1, random_shifts(rng, 4, bits)),
        MomentSpec(2, 2, 2, random_shifts(rng, 4, bits)),
    ]
    for spec in ladder_specs:
        report = moment_from_ratio_limit(spec)
        rec.require(
            "ladder(n={},k={},l={})".format(spec.n, spec.k, spec.l),
            report.passed,
        )
        rec.check(
            "ladder-endpoint(n={},k={},l={})".format(spec.n, spec.k, spec.l),
            report.rel_error,
            1e-8,
        )
    # the k > n ladder spec must disagree with the unconstrained-ensemble moment
    spec_kn = ladder_specs[1]
    a = acue_moment(spec_kn)
    c = cue_moment(spec_kn)
    rec.require(
        "ladder-k-gt-n-differs", float_abs(a - c) > 1e-3 * max(1.0, float_abs(c))
    )
    # the k = l = n spec must agree with it
    spec_eq = ladder_specs[2]
    rec.check(
        "ladder-agreement-regime",
        hybrid_err(acue_moment(spec_eq), cue_moment(spec_eq)),
        2.0**-100,
    )

    # condensation: stated and reversed orders on polynomial columns
    # given as dense ascending coefficient lists (x^3, x^2 + 2x, 1 + x^4)
    fs = [
        [0, 0, 0, 1],
        [0, 2, 1],
        [1, 0, 0, 0, 1],
    ]
    tail = [as_value(1.7 + 0.4j, bits)]
    for order in ("stated", "reversed"):
        report = condensation_check(
            fs, 2, as_value(0.6 - 0.2j, bits), tail, order=order, precision_bits=bits
        )
        rec.require("condensation-{}".format(order), report.passed)
    return rec.result()


def suite_swap_displays(params: VerifyParams) -> SuiteResult:
    """Two-over-two swap forms: reduction at 0 and the substitution identity."""
    rec = _Recorder("swap-displays")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 9)
    one = ComplexValue.one(bits)

    for n in range(1, 6):
        for t in range(20):
            a = as_value(_random_complex(rng, 1.2), bits)
            b = as_value(_random_complex(rng, 1.2), bits)
            ab = (a * b).to_complex()
            if abs(ab - 1) < 0.05 or abs(a.to_complex()) < 0.1 or abs(b.to_complex()) < 0.1:
                continue
            got = swap2_cue(n, a, b, ComplexValue.zero(bits), ComplexValue.zero(bits))
            want = ComplexValue.zero(bits)
            for m in range(n + 1):
                want = want + (a * b) ** m
            rec.check(
                "swap2-geom(n={},trial={})".format(n, t),
                hybrid_err(got, want),
                2.0**-200,
            )

    per_n = params.pick_trials(100)
    for n in range(1, params.pick_n(3) + 1):
        done = 0
        while done < per_n:
            a = as_value(_random_complex(rng, 1.2), bits)
            b = as_value(_random_complex(rng, 1.2), bits)
            g, d = random_acue_denominators(rng, n, 2, bits)
            ac, bc, gc, dc = (x.to_complex() for x in (a, b, g, d))
            if min(abs(ac), abs(bc), abs(gc), abs(dc)) < 0.15:
                continue
            if abs(ac * bc - 1) < 0.05 or abs(gc * dc - 1) < 0.05:
                continue
            if abs(gc - dc) < 0.08:
                continue
            vs = [-a, -(one / b)]
            us = [-g, -(one / d)]
            vc = [x.to_complex() for x in vs]
            uc = [x.to_complex() for x in us]
            if abs(vc[0] - vc[1]) < 0.08 or abs(uc[0] - uc[1]) < 0.08:
                continue
            if min(abs(p - q) for p in vc for q in uc) < 0.08:
                continue
            if any(abs(x ** (2 * n) - 1) < 1e-2 for x in uc):
                continue
            try:
                lhs = swap2_acue(n, a, b, g, d)
                rhs = (b**n / d**n) * acue_ratio(n, vs, us)
                oracle = (b**n / d**n) * acue_expect(
                    n, ratio_observable(vs, us), precision_bits=bits, cap=params.cap
                )
            except AcueLabError:
                continue
            rec.check(
                "swap2-substitution(n={},trial={})".format(n, done),
                hybrid_err(lhs, rhs),
                2.0**-100,
            )
            rec.check(
                "swap2-oracle(n={},trial={})".format(n, done),
                hybrid_err(lhs, oracle),
                2.0**-100,
            )
            done += 1
    return rec.result()


def suite_scaled_limits(params: VerifyParams) -> SuiteResult:
    """Scaling limits: kernel convergence, contour average, finite-size check."""
    rec = _Recorder("scaled-limits")
    bits = params.precision_bits
    one = ComplexValue.one(bits)
    mu = as_value(0.8 + 0.6j, bits)
    nu = as_value(0.4 - 0.9j, bits)
    target = ae_limit_kernel(mu, nu)
    kernel_errs = []
    for n in (10, 100, 1000):
        ninv = one / as_value(n, bits)
        u = (-(mu) * ninv).exp()
        v = (-(nu) * ninv).exp()
        err = hybrid_err(one_ratio_acue(n, v, u), target)
        kernel_errs.append(err)
        rec.check("kernel-limit(n={})".format(n), err, 2.0**-200)
    rec.notes["kernel_errors"] = kernel_errs

    shifts = ScaledShifts(
        [as_value(0.5 + 0.2j, bits), as_value(0.9 - 0.4j, bits)],
        [as_value(1.1 - 0.7j, bits), as_value(0.3 + 0.8j, bits)],
    )
    det_target = ratio_limit_det(shifts, "acue")
    det_errs = []
    for n in (10, 100, 1000):
        ninv = one / as_value(n, bits)
        us = [(-(m) * ninv).exp() for m in shifts.mus]
        vs = [(-(x) * ninv).exp() for x in shifts.nus]
        det_errs.append(hybrid_err(acue_ratio(n, vs, us), det_target))
    rec.notes["det_errors"] = det_errs
    rec.require(
        "det-limit-decreasing", det_errs[0] > det_errs[1] > det_errs[2]
    )
    rec.check("det-limit-final(n=1000)", det_errs[2], 1e-3)

    avg = averaged_acue_limit(shifts, 512)
    pi = pi_value(bits)
    ipi = pi * as_value(1j, bits)
    cauchy_rows = [
        [one / (nu_ - mu_) for nu_ in shifts.nus] for mu_ in shifts.mus
    ]
    den = ComplexMatrix(cauchy_rows, bits).det()
    acc = ComplexValue.zero(bits)
    points = 512
    for m in range(points):
        r = as_value(m, bits) / as_value(points, bits)
        sh = shifts.offset(-(ipi * r))
        rows = [
            [
                cauchy_rows[i][j] * ae_limit_kernel(sh.mus[i], sh.nus[j])
                for j in range(shifts.j)
            ]
            for i in range(shifts.j)
        ]
        acc = acc + ComplexMatrix(rows, bits).det()
    r_average = (acc / as_value(points, bits)) / den
    rec.check("contour-vs-r-average", hybrid_err(avg, r_average), 1e-20)

    refined = averaged_acue_limit(shifts, 1024)
    rec.check("quadrature-refinement", hybrid_err(avg, refined), 1e-20)

    n_fin = 200
    ninv = one / as_value(n_fin, bits)
    grid = 64
    accn = ComplexValue.zero(bits)
    for m in range(grid):
        r = as_value(m, bits) / as_value(grid, bits)
        phase = (ipi * r * ninv).exp()
        us = [(-(mu_) * ninv).exp() * phase for mu_ in shifts.mus]
        vs = [(-(nu_) * ninv).exp() * phase for nu_ in shifts.nus]
        accn = accn + acue_ratio(n_fin, vs, us)
    finite_avg = accn / as_value(grid, bits)
    rec.check("finite-size-rotation-average", hybrid_err(finite_avg, avg), 1e-3)

    # Haar-unitary limit with every Re(mu) > 0 is identically 1
    cue_shifts = ScaledShifts(
        [as_value(0.4 + 0.9j, bits), as_value(0.7 - 0.3j, bits), as_value(1.1 + 0.1j, bits)],
        [as_value(0.9 + 0.5j, bits), as_value(1.4 - 0.8j, bits), as_value(0.2 - 1.1j, bits)],
    )
    rec.check(
        "cue-right-halfplane",
        hybrid_err(ratio_limit_det(cue_shifts, "cue"), one),
        2.0**-200,
    )
    return rec.result()


def suite_ensemble_invariants(params: VerifyParams) -> SuiteResult:
    """Rotation covariance of the enumeration and the reflection identity."""
    rec = _Recorder("ensemble-invariants")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 10)
    one = ComplexValue.one(bits)

    for n in range(1, params.pick_n(4) + 1):
        configs = enumerate_acue(n, bits, cap=params.cap)
        weight_by_indices = {c.indices: c.weight for c in configs}
        for c in configs:
            rotated = tuple(sorted((idx + 1) % (2 * n) for idx in c.indices))
            rec.require(
                "rotation(n={},indices={})".format(n, c.indices),
                weight_by_indices[rotated] == c.weight,
            )

    per_n = params.pick_trials(100)
    for n in range(1, params.pick_n(5) + 1):
        configs = enumerate_acue(n, bits, cap=params.cap)
        for t in range(per_n):
            config = rng.choice(configs)
            v = as_value(_random_complex(rng), bits)
            if abs(v.to_complex()) < 0.1:
                continue
            lhs = det_one_plus(config, v) / det_of(config)
            rhs = v**n
            inv_v = one / v
            for w in config.roots:
                rhs = rhs * (one + inv_v * w.conj())
            rec.check(
                "reflection(n={},trial={})".format(n, t),
                hybrid_err(lhs, rhs),
                2.0 ** -(bits // 2),
            )
    return rec.result()


def suite_symmetric_functions(params: VerifyParams) -> SuiteResult:
    """Rectangle Schur = unconstrained moment; multiplication rule; symmetry."""
    rec = _Recorder("symmetric-functions")
    bits = params.precision_bits
    rng = Random(params.seed * 31 + 11)

    per_cell = params.pick_trials(50)
    for n in range(1, params.pick_n(4) + 1):
        for k in range(1, 5):
            for l in range(1, 5):
                for t in range(per_cell):
                    shifts = random_shifts(rng, k + l, bits)
                    lhs = schur_eval(Partition.rectangle(n, k), shifts)
                    rhs = cue_moment(MomentSpec(n, k, l, shifts))
                    rec.check(
                        "rectangle(n={},k={},l={},trial={})".format(n, k, l, t),
                        hybrid_err(lhs, rhs),
                        2.0 ** -(bits // 2),
                    )

    sets_per_cell = max(1, min(20, params.pick_trials(20)))
    for m in range(1, params.pick_n(4) + 1):
        for j in range(0, m + 1):
            for k in range(0, 2 * m + 1):
                for t in range(sets_per_cell):
                    xs = random_shifts(rng, m, bits)
                    report = pieri_check(j, k, xs)
                    rec.require(
                        "pieri(j={},k={},m={},trial={})".format(j, k, m, t),
                        report.passed,
                    )

    for t in range(params.pick_trials(20)):
        m = rng.randint(2, 5)
        xs = random_shifts(rng, m, bits)
        lam = Partition(tuple(sorted((rng.randint(1, 4) for _ in range(rng.randint(1, m))), reverse=True)))
        base = schur_eval(lam, xs)
        perm = list(xs)
        rng.shuffle(perm)
        permuted = schur_eval(lam, perm)
        rec.check(
            "symmetry(trial={})".format(t),
            hybrid_err(base, permuted),
            2.0 ** -(bits // 2),
        )
    return rec.result()


def suite_cue_sampler(params: VerifyParams) -> SuiteResult:
    """Monte Carlo |det(1 + G)|^2 for size 3 against the exact value 4."""
    import numpy as np

    rec = _Recorder("cue-sampler")
    count = params.pick_trials(100000)
    eigs = sample_cue(3, count, params.seed)
    dets = np.prod(1.0 + eigs, axis=1)
    values = np.abs(dets) ** 2
    mean = float(np.mean(values))
    stderr = float(np.std(values, ddof=1) / math.sqrt(count))
    rec.notes["estimate"] = mean
    rec.notes["std_error"] = stderr
    rec.notes["samples"] = count
    rec.require(
        "within-3-sigma (|{:.4f} - 4| vs 3*{:.4f})".format(mean, stderr),
        abs(mean - 4.0) <= 3.0 * stderr,
    )
    rec.max_err = abs(mean - 4.0)
    return rec.result()


_SUITES: dict[str, Callable[[VerifyParams], SuiteResult]] = {
    "normalization": suite_normalization,
    "ensemble-invariants": suite_ensemble_invariants,
    "symmetric-functions": suite_symmetric_functions,
    "hook-expectations": suite_hook_expectations,
    "one-ratio": suite_one_ratio,
    "ratio-composition": suite_ratio_composition,
    "moments": suite_moments,
    "agreement-boundary": suite_agreement_boundary,
    "column-displays": suite_column_displays,
    "determinant-machinery": suite_determinant_machinery,
    "swap-displays": suite_swap_displays,
    "scaled-limits": suite_scaled_limits,
    "cue-sampler": suite_cue_sampler,
}


def available_suites() -> list[str]:
    return list(_SUITES)


def run_suite(name: str, params: VerifyParams | None = None) -> SuiteResult:
    if name not in _SUITES:
        raise KeyError("unknown suite {!r}; available: {}".format(name, ", ".join(_SUITES)))
    return _SUITES[name](params or VerifyParams())


def run_suites(names: Sequence[str] | None = None, params: VerifyParams | None = None) -> list[SuiteResult]:
    chosen = list(names) if names else available_suites()
    return [run_suite(name, params) for name in chosen]
