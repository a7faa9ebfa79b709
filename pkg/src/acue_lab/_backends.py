"""Arbitrary-precision complex arithmetic backends.

Two interchangeable backends supply the raw scalar operations behind
``numeric.ComplexValue``:

* ``gmpy2``  - compiled GMP/MPFR/MPC bindings, fast, preferred;
* ``mpmath`` - pure Python, always available, selected as fallback.

The backend is chosen once at import time.  Set ``ACUE_LAB_BACKEND`` to
``gmpy2`` or ``mpmath`` to force a choice; forcing an unavailable backend
raises ImportError rather than silently substituting the other one.

Backend payloads are immutable scalar objects (``gmpy2.mpc`` or
``mpmath.mpc``).  Real-valued results (``abs2``, ``abs_value``, ``pow2``)
are backend reals (``gmpy2.mpfr`` / ``mpmath.mpf``); both support the
native comparison operators and ``float()``, and callers rely on that.
Every operation takes the target precision in bits explicitly; rounding
happens exactly once per operation at that precision.
"""

from __future__ import annotations

import math
import os

__all__ = ["BACKEND", "available_backends", "decimal_digits", "load_backend"]


def decimal_digits(precision_bits: int) -> int:
    """Number of significant decimal digits that uniquely identifies any
    binary float of the given precision (round-trip safe)."""
    return int(math.ceil(precision_bits * math.log10(2))) + 2


class _Gmpy2Backend:
    """Compiled backend on top of gmpy2 (GMP/MPFR/MPC)."""

    name = "gmpy2"
    pure_python = False

    def __init__(self) -> None:
        import gmpy2

        self._g = gmpy2
        self._contexts: dict[int, object] = {}

    def _ctx(self, bits: int):
        ctx = self._contexts.get(bits)
        if ctx is None:
            ctx = self._g.context(precision=bits, allow_complex=True)
            self._contexts[bits] = ctx
        return ctx

    def make(self, re, im, bits: int):
        g = self._g
        return g.mpc(g.mpfr(re, bits), g.mpfr(im, bits), bits)

    def add(self, a, b, bits: int):
        return self._ctx(bits).add(a, b)

    def sub(self, a, b, bits: int):
        return self._ctx(bits).sub(a, b)

    def mul(self, a, b, bits: int):
        return self._ctx(bits).mul(a, b)

    def div(self, a, b, bits: int):
        return self._ctx(bits).div(a, b)

    def neg(self, a, bits: int):
        return self._ctx(bits).minus(a)

    def conj(self, a, bits: int):
        g = self._g
        return g.mpc(a.real, self._ctx(bits).minus(a.imag), bits)

    def pow_int(self, a, n: int, bits: int):
        return self._ctx(bits).pow(a, n)

    def exp(self, a, bits: int):
        return self._ctx(bits).exp(a)

    def sqrt(self, a, bits: int):
        return self._ctx(bits).sqrt(a)

    def pi(self, bits: int):
        return self._g.mpc(self._ctx(bits).const_pi(), 0, bits)

    def real(self, a):
        return a.real

    def imag(self, a):
        return a.imag

    def abs2(self, a, bits: int):
        return self._ctx(bits).norm(a)

    def abs_value(self, a, bits: int):
        return self._ctx(bits).abs(a)

    def pow2(self, e: int, bits: int):
        # 2**e is exactly representable at any precision
        return self._ctx(bits).pow(self._g.mpfr(2), e)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_finite(self, a) -> bool:
        return self._g.is_finite(a)

    def eq(self, a, b) -> bool:
        return a == b

    def to_floats(self, a) -> tuple[float, float]:
        return float(a.real), float(a.imag)

    def _real_to_decimal(self, x, bits: int) -> str:
        g = self._g
        if not g.is_finite(x):
            return "nan" if g.is_nan(x) else ("-inf" if x < 0 else "inf")
        if x == 0:
            return "0"
        mant, exp10, _ = x.digits(10, decimal_digits(bits))
        sign = ""
        if mant.startswith("-"):
            sign, mant = "-", mant[1:]
        return "{}{}.{}e{}".format(sign, mant[0], mant[1:], exp10 - 1)

    def to_decimal(self, a, bits: int) -> tuple[str, str]:
        return self._real_to_decimal(a.real, bits), self._real_to_decimal(a.imag, bits)

    def from_decimal(self, re_str: str, im_str: str, bits: int):
        g = self._g
        return g.mpc(g.mpfr(re_str, bits), g.mpfr(im_str, bits), bits)


class _MpmathBackend:
    """Pure-Python backend on top of mpmath."""

    name = "mpmath"
    pure_python = True

    def __init__(self) -> None:
        import mpmath

        self._mp = mpmath

    def make(self, re, im, bits: int):
        mp = self._mp
        with mp.workprec(bits):
            return mp.mpc(mp.mpf(re), mp.mpf(im))

    def add(self, a, b, bits: int):
        with self._mp.workprec(bits):
            return a + b

    def sub(self, a, b, bits: int):
        with self._mp.workprec(bits):
            return a - b

    def mul(self, a, b, bits: int):
        with self._mp.workprec(bits):
            return a * b

    def div(self, a, b, bits: int):
        with self._mp.workprec(bits):
            return a / b

    def neg(self, a, bits: int):
        with self._mp.workprec(bits):
            return -a

    def conj(self, a, bits: int):
        mp = self._mp
        with mp.workprec(bits):
            return mp.mpc(a.real, -a.imag)

    def pow_int(self, a, n: int, bits: int):
        with self._mp.workprec(bits):
            return a ** n

    def exp(self, a, bits: int):
        with self._mp.workprec(bits):
            return self._mp.exp(a)

    def sqrt(self, a, bits: int):
        with self._mp.workprec(bits):
            return self._mp.sqrt(a)

    def pi(self, bits: int):
        mp = self._mp
        with mp.workprec(bits):
            return mp.mpc(+mp.pi, 0)

    def real(self, a):
        return a.real

    def imag(self, a):
        return a.imag

    def abs2(self, a, bits: int):
        with self._mp.workprec(bits):
            return a.real * a.real + a.imag * a.imag

    def abs_value(self, a, bits: int):
        with self._mp.workprec(bits):
            return self._mp.fabs(a)

    def pow2(self, e: int, bits: int):
        mp = self._mp
        with mp.workprec(bits):
            return mp.ldexp(mp.mpf(1), e)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_finite(self, a) -> bool:
        mp = self._mp
        if hasattr(a, "imag"):
            return mp.isfinite(a.real) and mp.isfinite(a.imag)
        return mp.isfinite(a)

    def eq(self, a, b) -> bool:
        return a == b

    def to_floats(self, a) -> tuple[float, float]:
        return float(a.real), float(a.imag)

    def _real_to_decimal(self, x, bits: int) -> str:
        mp = self._mp
        if mp.isnan(x):
            return "nan"
        if mp.isinf(x):
            return "-inf" if x < 0 else "inf"
        if x == 0:
            return "0"
        return mp.libmp.to_str(x._mpf_, decimal_digits(bits), strip_zeros=False)

    def to_decimal(self, a, bits: int) -> tuple[str, str]:
        return self._real_to_decimal(a.real, bits), self._real_to_decimal(a.imag, bits)

    def from_decimal(self, re_str: str, im_str: str, bits: int):
        mp = self._mp
        with mp.workprec(bits):
            return mp.mpc(mp.mpf(re_str), mp.mpf(im_str))


def load_backend(name: str):
    """Instantiate a backend by name (``gmpy2`` or ``mpmath``)."""
    if name == "gmpy2":
        return _Gmpy2Backend()
    if name == "mpmath":
        return _MpmathBackend()
    raise ValueError("unknown backend {!r}; expected 'gmpy2' or 'mpmath'".format(name))


def available_backends() -> list[str]:
    """Names of backends importable in this environment."""
    out = []
    for name in ("gmpy2", "mpmath"):
        try:
            load_backend(name)
        except ImportError:
            continue
        out.append(name)
    return out


def _select():
    forced = os.environ.get("ACUE_LAB_BACKEND", "").strip().lower()
    if forced:
        return load_backend(forced)
    try:
        return load_backend("gmpy2")
    except ImportError:
        return load_backend("mpmath")


BACKEND = _select()
