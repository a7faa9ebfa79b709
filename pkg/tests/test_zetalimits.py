"""Scaled limit kernels, the limit determinant, and the contour average."""

import pytest

from acue_lab.errors import (
    ConditioningError,
    ContourError,
    DimensionError,
    DomainError,
    PoleError,
)
from acue_lab.formulas import one_ratio_acue
from acue_lab.numeric import ComplexValue, as_value, float_abs, pi_value
from acue_lab.zetalimits import (
    ScaledShifts,
    ae_limit_kernel,
    averaged_acue_limit,
    e_limit_kernel,
    ratio_limit_det,
)

from conftest import BITS


def _ev(re, im=0.0):
    return as_value(complex(re, im), BITS)


def test_e_limit_kernel_branches():
    one = ComplexValue.one(BITS)
    assert e_limit_kernel(_ev(0.7, 2.0), _ev(-3.0, 1.0)) == one
    assert float_abs(e_limit_kernel(_ev(-1.0), _ev(-1.0)) - one) < 2.0**-200
    want = (_ev(-3.0)).exp()
    assert float_abs(e_limit_kernel(_ev(-1.0), _ev(2.0)) - want) < 2.0**-200
    with pytest.raises(DomainError):
        e_limit_kernel(_ev(0.0, 1.3), _ev(0.5))


def test_ae_limit_kernel_values_and_poles():
    one = ComplexValue.one(BITS)
    mu = _ev(0.8, -0.3)
    assert float_abs(ae_limit_kernel(mu, mu) - one) < 2.0**-200
    # large positive real mu approaches the constant branch
    big = _ev(60.0)
    assert float_abs(ae_limit_kernel(big, _ev(50.0)) - one) < 1e-40
    with pytest.raises(PoleError):
        ae_limit_kernel(_ev(0.0), _ev(0.5))
    # e^{-2 mu} = 1 also at mu = i*pi
    i_pi = pi_value(BITS) * as_value(1j, BITS)
    with pytest.raises(PoleError):
        ae_limit_kernel(i_pi, _ev(0.5))


def test_ae_kernel_is_finite_size_limit():
    mu = _ev(0.6, 0.4)
    nu = _ev(0.2, -0.5)
    want = ae_limit_kernel(mu, nu)
    errs = []
    for n in (10, 100):
        u = (-mu / n).exp()
        v = (-nu / n).exp()
        got = one_ratio_acue(n, v, u)
        errs.append(float_abs(got - want))
    # the one-point kernel identity is exact at every finite size
    assert all(e < 1e-70 for e in errs)


def test_scaled_shifts_validation_and_offset():
    mus = [_ev(0.5), _ev(0.8)]
    nus = [_ev(0.3), _ev(0.9)]
    shifts = ScaledShifts(mus, nus, precision_bits=BITS)
    assert shifts.j == 2
    moved = shifts.offset(_ev(0.0, 0.25))
    assert float_abs(moved.mus[0] - _ev(0.5, 0.25)) < 2.0**-200
    assert float_abs(moved.nus[1] - _ev(0.9, 0.25)) < 2.0**-200
    with pytest.raises(DimensionError):
        ScaledShifts(mus, nus[:1], precision_bits=BITS)
    with pytest.raises(DimensionError):
        ScaledShifts([], [], precision_bits=BITS)


def test_ratio_limit_det_small_cases():
    one = ComplexValue.one(BITS)
    single = ScaledShifts([_ev(0.9, 0.2)], [_ev(0.4, -0.1)], precision_bits=BITS)
    assert ratio_limit_det(single, kernel="cue") == one
    acue_val = ratio_limit_det(single, kernel="acue")
    want = ae_limit_kernel(single.mus[0], single.nus[0])
    assert float_abs(acue_val - want) < 2.0**-200

    both_right = ScaledShifts(
        [_ev(0.7, 0.1), _ev(1.2, -0.4)], [_ev(0.3), _ev(0.5, 0.6)], precision_bits=BITS
    )
    assert float_abs(ratio_limit_det(both_right, kernel="cue") - one) < 2.0**-200

    with pytest.raises(DomainError):
        ratio_limit_det(single, kernel="gue")
    dup = ScaledShifts([_ev(0.5), _ev(0.5)], [_ev(0.3), _ev(0.8)], precision_bits=BITS)
    with pytest.raises(PoleError):
        ratio_limit_det(dup, kernel="acue")


def test_averaged_limit_constant_for_right_halfplane():
    one = ComplexValue.one(BITS)
    single = ScaledShifts([_ev(0.8, 0.3)], [_ev(0.5, -0.2)], precision_bits=BITS)
    avg = averaged_acue_limit(single, quadrature_points=256)
    assert float_abs(avg - one) < 1e-70


def test_averaged_limit_quadrature_refinement():
    shifts = ScaledShifts(
        [_ev(0.6, 0.2), _ev(-0.9, 0.5)], [_ev(0.4, -0.3), _ev(0.2, 0.7)],
        precision_bits=BITS,
    )
    coarse = averaged_acue_limit(shifts, quadrature_points=512)
    fine = averaged_acue_limit(shifts, quadrature_points=1024)
    assert float_abs(coarse - fine) < 1e-20


def test_averaged_limit_errors():
    near_contour = ScaledShifts([_ev(0.0, 0.4)], [_ev(0.5)], precision_bits=BITS)
    with pytest.raises(ContourError):
        averaged_acue_limit(near_contour, quadrature_points=128)
    ok = ScaledShifts([_ev(0.7)], [_ev(0.4)], precision_bits=BITS)
    with pytest.raises(DomainError):
        averaged_acue_limit(ok, quadrature_points=0)
