"""Both arithmetic backends implement the same contract."""

import pytest

from acue_lab._backends import BACKEND, load_backend
from acue_lab.numeric import ComplexValue


def test_active_backend_is_known():
    assert BACKEND.name in ("gmpy2", "mpmath")
    assert isinstance(BACKEND.pure_python, bool)


@pytest.mark.parametrize("name", ["gmpy2", "mpmath"])
def test_backend_basic_ops(name):
    be = load_backend(name)
    bits = 128
    a = be.make("1.25", "-0.5", bits)
    b = be.make("0.75", "2", bits)
    s = be.add(a, b, bits)
    re_s, im_s = be.to_floats(s)
    assert re_s == 2.0 and im_s == 1.5
    p = be.mul(a, b, bits)
    re_p, im_p = be.to_floats(p)
    # (1.25 - 0.5i)(0.75 + 2i) = 0.9375 + 1 + (2.5 - 0.375)i
    assert abs(re_p - 1.9375) < 1e-15 and abs(im_p - 2.125) < 1e-15
    q = be.div(p, b, bits)
    re_q, im_q = be.to_floats(q)
    assert abs(re_q - 1.25) < 1e-30 and abs(im_q + 0.5) < 1e-30


@pytest.mark.parametrize("name", ["gmpy2", "mpmath"])
def test_decimal_round_trip_is_exact(name):
    be = load_backend(name)
    bits = 192
    a = be.make("0.1", "-3.14159265358979323846264338327950288419716939937510582097", bits)
    re_s, im_s = be.to_decimal(a, bits)
    back = be.from_decimal(re_s, im_s, bits)
    assert be.eq(a, back)


def test_backends_agree_on_arithmetic():
    g = load_backend("gmpy2")
    m = load_backend("mpmath")
    bits = 128
    for re, im in [("0.1", "0.2"), ("-1.5", "3.25"), ("1e-10", "-2e5")]:
        ga = g.make(re, im, bits)
        ma = m.make(re, im, bits)
        ge = g.exp(ga, bits)
        me = m.exp(ma, bits)
        gre, gim = g.to_floats(ge)
        mre, mim = m.to_floats(me)
        assert abs(gre - mre) <= 1e-12 * max(1.0, abs(gre))
        assert abs(gim - mim) <= 1e-12 * max(1.0, abs(gim))


def test_string_construction_has_no_double_intermediate():
    # 0.1 is not representable in binary; the string parse at 256 bits and
    # the double 0.1 must therefore differ
    from_string = ComplexValue.make("0.1", 0, 256)
    from_double = ComplexValue.make(0.1, 0, 256)
    assert from_string != from_double
