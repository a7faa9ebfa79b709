"""Exact enumeration of ACUE point configurations and a CUE sampler.

ACUE(N) places N points on the 2N-th roots of unity with probability
proportional to the squared Vandermonde modulus.  Coinciding points
annihilate the Vandermonde, so the support is exactly the C(2N, N)
subsets of roots; grouping the (2N)^N labelled tuples by underlying set
absorbs the 1/N! and each subset carries weight |Delta|^2 / (2N)^N.

acue_expect sums weight * observable(config) over the whole support and
is the master oracle: every closed formula in the formulas and symfunc
modules is validated against it.

CUE expectations are never computed by numeric integration here; the
closed Schur/ratio formulas are the CUE ground truth, and sample_cue is
only an independent Monte Carlo smoke test.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Sequence

from .errors import CapacityError, DomainError, PoleError
from .numeric import (
    DEFAULT_PRECISION_BITS,
    ComplexValue,
    as_value,
    pi_value,
)

DEFAULT_ENUMERATION_CAP = 10

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "Ensemble",
    "EnsembleSpec",
    "PointConfiguration",
    "acue_expect",
    "char_poly",
    "enumerate_acue",
    "roots_of_unity",
    "sample_cue",
]


class Ensemble(str, enum.Enum):
    ACUE = "acue"
    CUE = "cue"


@dataclass(frozen=True)
class EnsembleSpec:
    """Which ensemble, at which size and precision."""

    kind: Ensemble
    n: int
    precision_bits: int = DEFAULT_PRECISION_BITS

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Ensemble(self.kind))
        if self.n < 1:
            raise DomainError("ensemble size n must be >= 1, got {}".format(self.n))


@lru_cache(maxsize=None)
def roots_of_unity(m: int, precision_bits: int) -> tuple[ComplexValue, ...]:
    """The m-th roots of unity e(j/m) = exp(2*pi*i*j/m), j = 0..m-1.

    Computed once per (m, precision) and cached, so every downstream
    consumer sees bitwise-identical root values.
    """
    if m < 1:
        raise DomainError("root count m must be >= 1")
    pi = pi_value(precision_bits)
    i_unit = ComplexValue.make(0, 1, precision_bits)
    return tuple((pi * (2 * j) / m * i_unit).exp() for j in range(m))


@dataclass(frozen=True, eq=False)
class PointConfiguration:
    """One support point of ACUE(N): a subset of the 2N-th roots of unity.

    indices select the roots (strictly increasing, in {0,...,2N-1});
    weight is the real probability mass |Delta(roots)|^2 / (2N)^N.
    """

    n: int
    indices: tuple[int, ...]
    weight: ComplexValue

    @property
    def precision_bits(self) -> int:
        return self.weight.precision_bits

    @property
    def roots(self) -> tuple[ComplexValue, ...]:
        table = roots_of_unity(2 * self.n, self.weight.precision_bits)
        return tuple(table[i] for i in self.indices)


@lru_cache(maxsize=None)
def _pair_distance_table(n: int, precision_bits: int) -> tuple[ComplexValue, ...]:
    """|w_d - 1|^2 for circular index distances d = 1..n on 2n-th roots.

    Entry d serves every pair of indices at circular distance d; building
    the squared modulus as (w-1)*conj(w-1) keeps the value exactly real.
    """
    table = roots_of_unity(2 * n, precision_bits)
    one = ComplexValue.one(precision_bits)
    out = [ComplexValue.zero(precision_bits)]
    for d in range(1, n + 1):
        diff = table[d] - one
        out.append(diff * diff.conj())
    return tuple(out)


_ENUMERATION_CACHE: dict[tuple[int, int], tuple[PointConfiguration, ...]] = {}


def enumerate_acue(
    n: int,
    precision_bits: int | None = None,
    cap: int | None = None,
) -> tuple[PointConfiguration, ...]:
    """All C(2n, n) ACUE(n) configurations with their exact weights.

    Weights are assembled from a shared pair-distance table in a
    canonical sorted order, so rotating every configuration by a fixed
    root of unity reproduces weights bitwise.
    """
    if n < 1:
        raise DomainError("ensemble size n must be >= 1, got {}".format(n))
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if n > limit:
        raise CapacityError(
            "n={} exceeds the enumeration cap {} (C({},{}) configurations); "
            "raise the cap argument / --enumeration-cap to proceed".format(n, limit, 2 * n, n)
        )
    bits = DEFAULT_PRECISION_BITS if precision_bits is None else precision_bits
    key = (n, bits)
    cached = _ENUMERATION_CACHE.get(key)
    if cached is not None:
        return cached

    dist2 = _pair_distance_table(n, bits)
    norm = ComplexValue.make((2 * n) ** n, 0, bits)
    configs = []
    for combo in itertools.combinations(range(2 * n), n):
        deltas = sorted(
            min(combo[b] - combo[a], 2 * n - (combo[b] - combo[a]))
            for a in range(n)
            for b in range(a + 1, n)
        )
        w = ComplexValue.one(bits)
        for d in deltas:
            w = w * dist2[d]
        configs.append(PointConfiguration(n=n, indices=combo, weight=w / norm))
    result = tuple(configs)
    _ENUMERATION_CACHE[key] = result
    return result


def acue_expect(
    n: int,
    observable: Callable[[PointConfiguration], Any],
    precision_bits: int | None = None,
    cap: int | None = None,
) -> ComplexValue:
    """E_ACUE(n)[observable] by exact summation over the support.

    The observable receives each PointConfiguration (use its .roots, or
    char_poly) and must return a finite ComplexValue or plain number.
    This is the brute-force reference for every closed formula in the
    package.
    """
    bits = DEFAULT_PRECISION_BITS if precision_bits is None else precision_bits
    acc = ComplexValue.zero(bits)
    for config in enumerate_acue(n, bits, cap=cap):
        value = as_value(observable(config), bits)
        if not value.is_finite():
            raise PoleError(
                "observable is non-finite on configuration with indices {}".format(config.indices)
            )
        acc = acc + config.weight * value
    return acc


def char_poly(config: PointConfiguration, z: Any) -> ComplexValue:
    """det(1 - z g) = prod_j (1 - z * w_j) over the configuration's roots."""
    zv = as_value(z, config.precision_bits)
    acc = ComplexValue.one(min(zv.precision_bits, config.precision_bits))
    for w in config.roots:
        acc = acc * (1 - zv * w)
    return acc


def sample_cue(n: int, count: int, rng_seed: int):
    """Eigenvalue sets of `count` Haar-unitary matrices of size n.

    Haar measure is realized by QR of a complex Ginibre matrix with the
    standard phase correction (columns rescaled by R_jj/|R_jj|), and the
    output is a (count, n) complex128 array, deterministic in rng_seed.
    Double precision suffices: this sampler is a stochastic smoke test,
    never a formula reference.
    """
    import numpy as np

    if n < 1 or count < 1:
        raise DomainError("sample_cue needs n >= 1 and count >= 1")
    rng = np.random.default_rng(rng_seed)
    out = np.empty((count, n), dtype=np.complex128)
    # chunked to bound the memory of the batched QR
    chunk = max(1, min(count, (1 << 19) // (n * n)))
    done = 0
    while done < count:
        m = min(chunk, count - done)
        a = rng.standard_normal((m, n, n)) + 1j * rng.standard_normal((m, n, n))
        q, r = np.linalg.qr(a / np.sqrt(2.0))
        diag = np.diagonal(r, axis1=1, axis2=2)
        q = q * (diag / np.abs(diag))[:, None, :]
        out[done : done + m] = np.linalg.eigvals(q)
        done += m
    return out
