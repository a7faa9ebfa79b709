"""Arbitrary-precision values, determinants, and the report machinery."""

from random import Random

import pytest

from acue_lab.errors import DimensionError, DomainError, PoleError
from acue_lab.numeric import (
    ComplexMatrix,
    ComplexValue,
    as_value,
    as_values,
    cauchy_det_check,
    cauchy_product,
    condensation_check,
    det,
    float_abs,
    is_near,
    magnitude_below,
    make_report,
    min_precision,
    pole_threshold_log2,
    rel_tolerance_log2,
    require_disjoint,
    require_separated,
    vandermonde,
    within,
)

from conftest import BITS, subseed
from oracles import cofactor_det, random_values


def test_value_construction_and_equality():
    a = ComplexValue.make("1.5", "-2.25", BITS)
    b = as_value(1.5 - 2.25j, BITS)
    assert a == b
    assert a.precision_bits == BITS
    assert a.to_complex() == 1.5 - 2.25j
    assert as_value(a) is not None
    assert ComplexValue.zero(BITS).is_zero()
    assert not ComplexValue.one(BITS).is_zero()


def test_value_arithmetic_basics():
    a = as_value(2 + 1j, BITS)
    b = as_value(-0.5 + 3j, BITS)
    assert (a + b).to_complex() == 1.5 + 4j
    assert (a - b).to_complex() == 2.5 - 2j
    assert (a * b) == as_value((2 + 1j) * (-0.5 + 3j), BITS)
    assert (a / a) == ComplexValue.one(BITS)
    assert (-a).to_complex() == -2 - 1j
    assert a.conj().to_complex() == 2 - 1j
    assert (a**3) == a * a * a
    assert float(a.abs2()) == 5.0


def test_division_and_power_poles():
    zero = ComplexValue.zero(BITS)
    one = ComplexValue.one(BITS)
    with pytest.raises(PoleError):
        one / zero
    with pytest.raises(PoleError):
        zero**-1
    assert (zero**0) == one


def test_precision_propagates_as_minimum():
    lo = ComplexValue.make(1, 0, 128)
    hi = ComplexValue.make(1, 0, 256)
    assert (lo + hi).precision_bits == 128
    assert min_precision([lo, hi]) == 128


def test_json_round_trip_bitwise():
    rng = Random(subseed(1))
    for _ in range(25):
        v = as_value(
            complex(rng.uniform(-1e3, 1e3), rng.uniform(-1e-3, 1e-3)), BITS
        )
        v = v * as_value(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), BITS)
        d = v.to_json_dict()
        assert set(d) == {"re", "im", "precision_bits"}
        back = ComplexValue.from_json_dict(d)
        assert back == v
        assert back.precision_bits == v.precision_bits


def test_tolerance_helpers():
    assert rel_tolerance_log2(256) == -128
    assert pole_threshold_log2(256) == -64
    small = as_value(1e-40, BITS)
    assert magnitude_below(small, -100)
    assert not magnitude_below(small, -140)
    a = as_value(1.0, BITS)
    # build the perturbation in working precision; the double 1.0 + 1e-35
    # would round back to exactly 1.0
    b = a + as_value(1e-35, BITS)
    assert is_near(a, b, -100)
    assert not is_near(a, b, -130)
    assert within(a, b, -100)
    assert not within(a, b, -130)


def test_make_report_pass_fail():
    a = as_value(1.0, BITS)
    b = a + as_value(1e-35, BITS)
    good = make_report("close", a, b, -100)
    assert good.passed and good.precision_bits == BITS
    bad = make_report("far", a, b, -130)
    assert not bad.passed
    assert "far" in str(bad)


def test_det_matches_cofactor_oracle():
    rng = Random(subseed(2))
    for size in range(1, 7):
        for _ in range(6):
            rows = [
                [as_value(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), BITS) for _ in range(size)]
                for _ in range(size)
            ]
            got = ComplexMatrix(rows, BITS).det()
            want = cofactor_det(rows)
            err = float_abs(got - want) / max(1.0, float_abs(want))
            assert err < 2.0**-200


def test_det_exact_zero_on_repeated_rows():
    rng = Random(subseed(3))
    row = [as_value(complex(rng.random(), rng.random()), BITS) for _ in range(4)]
    other = [as_value(complex(rng.random(), rng.random()), BITS) for _ in range(4)]
    third = [as_value(complex(rng.random(), rng.random()), BITS) for _ in range(4)]
    fourth = [as_value(complex(rng.random(), rng.random()), BITS) for _ in range(4)]
    d = det([row, other, row, fourth])
    assert d.is_zero()
    d2 = det([row, other, third, fourth])
    assert not d2.is_zero()


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        ComplexMatrix([[1, 2], [3, 4], [5, 6]], BITS).det()


def test_vandermonde_matches_product():
    rng = Random(subseed(4))
    xs = random_values(rng, 5, BITS)
    got = vandermonde(xs)
    want = ComplexValue.one(BITS)
    for i in range(5):
        for j in range(i + 1, 5):
            want = want * (xs[i] - xs[j])
    assert float_abs(got - want) / max(1.0, float_abs(want)) < 2.0**-200


def test_cauchy_product_and_check():
    rng = Random(subseed(5))
    for trial in range(20):
        j = rng.randint(1, 5)
        us = random_values(rng, j, BITS)
        vs = []
        while len(vs) < j:
            cand = random_values(rng, 1, BITS)[0]
            if all(float_abs(cand - u) > 0.05 for u in us) and all(
                float_abs(cand - v) > 0.05 for v in vs
            ):
                vs.append(cand)
        report = cauchy_det_check(us, vs)
        assert report.passed, "trial {}: {}".format(trial, report)
        assert cauchy_product(us, vs).is_finite()


def test_require_separated_and_disjoint():
    a = as_value(0.5 + 0.2j, BITS)
    b = as_value(0.5 + 0.2j, BITS)
    c = as_value(-0.3, BITS)
    require_separated([a, c], -64)
    with pytest.raises(PoleError):
        require_separated([a, b], -64, what="shifts")
    require_disjoint([a], [c], -64)
    with pytest.raises(PoleError):
        require_disjoint([a], [b], -64)


def test_condensation_check_both_orders():
    # columns x^2, 1 + x^3, 2x; two points collide at a, one tail point
    fs = [[0, 0, 1], [1, 0, 0, 1], [0, 2]]
    a = as_value(0.4 - 0.7j, BITS)
    tail = [as_value(-1.1 + 0.3j, BITS)]
    for order in ("stated", "reversed"):
        report = condensation_check(fs, 2, a, tail, order=order, precision_bits=BITS)
        assert report.passed, report
    with pytest.raises(DomainError):
        condensation_check(fs, 4, a, tail, precision_bits=BITS)
    with pytest.raises(DimensionError):
        condensation_check(fs, 2, a, [], precision_bits=BITS)
