"""Partitions and symmetric-polynomial evaluation.

Schur polynomials are evaluated through the bialternant quotient
det(x_i^(lambda_j + m - j)) / det(x_i^(m - j)).  When evaluation points
(numerically) coincide, both determinants degenerate; the evaluation
then switches to confluent rows built from exact scaled derivatives of
the monomial columns, which is the analytic limit of the quotient.

Also here: elementary and homogeneous symmetric polynomials, the
four-case Pieri product check for e_j * h_k, and the exact closed form
for the ACUE expectation of a hook-shaped Schur polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DomainError
from .numeric import (
    DEFAULT_PRECISION_BITS,
    ComplexValue,
    EvalReport,
    alternant_ratio,
    as_value,
    as_values,
    is_near,
    make_report,
    min_precision,
    pole_threshold_log2,
    rel_tolerance_log2,
)

__all__ = [
    "Partition",
    "cluster_points",
    "elementary",
    "homogeneous",
    "hook_expectation",
    "pieri_check",
    "schur_eval",
]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integer parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError("partition parts must be positive, got {}".format(p))
            if i > 0 and parts[i - 1] < p:
                raise DomainError("partition parts must be weakly decreasing, got {}".format(parts))

    @classmethod
    def hook(cls, a: int, b: int) -> "Partition":
        """The hook (a, 1^b): one row of length a over b rows of length 1."""
        if a < 1 or b < 0:
            raise DomainError("hook needs a >= 1 and b >= 0, got a={}, b={}".format(a, b))
        return cls((a,) + (1,) * b)

    @classmethod
    def rectangle(cls, side: int, count: int) -> "Partition":
        """The rectangle (side, side, ..., side) with `count` parts."""
        if side < 1 or count < 0:
            raise DomainError("rectangle needs side >= 1 and count >= 0")
        return cls((side,) * count)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, j: int) -> int:
        """The j-th part, 1-based, zero-padded beyond the length."""
        if j < 1:
            raise DomainError("part index is 1-based")
        return self.parts[j - 1] if j <= len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _as_partition(lam: "Partition | Sequence[int]") -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def cluster_points(
    points: Sequence[ComplexValue],
    log2_threshold: int,
) -> list[tuple[ComplexValue, int]]:
    """Greedy coincidence clustering: (representative, multiplicity) pairs.

    Points within 2**log2_threshold of an earlier representative join its
    group; the representative is the first point seen.  A threshold of
    None is not supported here; pass the caller's confluence threshold.
    """
    groups: list[list[Any]] = []
    for p in points:
        for g in groups:
            if is_near(p, g[0], log2_threshold):
                g[1] += 1
                break
        else:
            groups.append([p, 1])
    return [(g[0], g[1]) for g in groups]


def schur_eval(
    lam: "Partition | Sequence[int]",
    xs: Sequence[Any],
    precision_bits: int | None = None,
) -> ComplexValue:
    """Schur polynomial s_lambda evaluated at the points xs.

    Points closer than the confluence threshold 2^(-precision/4) are
    merged and evaluated through confluent (derivative) rows, which is
    exact for coincident points and avoids the catastrophic cancellation
    of the raw bialternant there.
    """
    p = _as_partition(lam)
    vals = as_values(xs, precision_bits)
    bits = min_precision(vals, default=precision_bits)
    m = len(vals)
    if p.length > m:
        raise DomainError(
            "partition {} has {} parts but only {} evaluation points".format(p, p.length, m)
        )
    if m == 0:
        return ComplexValue.one(bits)
    columns = [[(1, p.part(j) + m - j)] for j in range(1, m + 1)]
    groups = cluster_points(vals, pole_threshold_log2(bits))
    return alternant_ratio(columns, groups, bits)


def elementary(j: int, xs: Sequence[Any], precision_bits: int | None = None) -> ComplexValue:
    """Elementary symmetric polynomial e_j of the points xs."""
    if j < 0:
        raise DomainError("elementary index must be nonnegative, got {}".format(j))
    vals = as_values(xs, precision_bits)
    bits = min_precision(vals, default=precision_bits)
    if j > len(vals):
        return ComplexValue.zero(bits)
    table = [ComplexValue.one(bits)] + [ComplexValue.zero(bits)] * j
    for count, x in enumerate(vals, start=1):
        for t in range(min(count, j), 0, -1):
            table[t] = table[t] + table[t - 1] * x
    return table[j]


def homogeneous(k: int, xs: Sequence[Any], precision_bits: int | None = None) -> ComplexValue:
    """Complete homogeneous symmetric polynomial h_k of the points xs.

    Computed by the Newton recurrence m*h_m = sum_{i=1}^m p_i h_{m-i} on
    power sums, which stays polynomial-cost for large k.
    """
    if k < 0:
        raise DomainError("homogeneous index must be nonnegative, got {}".format(k))
    vals = as_values(xs, precision_bits)
    bits = min_precision(vals, default=precision_bits)
    if k == 0:
        return ComplexValue.one(bits)
    if not vals:
        return ComplexValue.zero(bits)
    powers = [ComplexValue.one(bits) for _ in vals]
    psums = []
    for _ in range(k):
        powers = [pw * x for pw, x in zip(powers, vals)]
        acc = ComplexValue.zero(bits)
        for pw in powers:
            acc = acc + pw
        psums.append(acc)
    hs = [ComplexValue.one(bits)]
    for m in range(1, k + 1):
        acc = ComplexValue.zero(bits)
        for i in range(1, m + 1):
            acc = acc + psums[i - 1] * hs[m - i]
        hs.append(acc / m)
    return hs[k]


def pieri_check(
    j: int,
    k: int,
    xs: Sequence[Any],
    precision_bits: int | None = None,
    tolerance_log2: int | None = None,
) -> EvalReport:
    """Check the Pieri-type identity for e_j * h_k in the points xs.

    The right-hand side is the applicable case of:
      e_0 h_0 = 1;  e_j h_0 = s_(1^j);  e_0 h_k = s_(k);
      e_j h_k = s_(k+1,1^(j-1)) + s_(k,1^j)   for 1 <= j <= m-1, k >= 1;
      e_m h_k = s_(k+1,1^(m-1))               for k >= 1.
    """
    vals = as_values(xs, precision_bits)
    m = len(vals)
    if m < 1:
        raise DomainError("pieri_check needs at least one evaluation point")
    if not 0 <= j <= m:
        raise DomainError("need 0 <= j <= {}, got j={}".format(m, j))
    if k < 0:
        raise DomainError("need k >= 0, got k={}".format(k))
    bits = min_precision(vals, default=precision_bits)
    lhs = elementary(j, vals, bits) * homogeneous(k, vals, bits)
    if k == 0:
        rhs = schur_eval(Partition.hook(1, j - 1), vals, bits) if j >= 1 else ComplexValue.one(bits)
    elif j == 0:
        rhs = schur_eval(Partition((k,)), vals, bits)
    elif j == m:
        rhs = schur_eval(Partition.hook(k + 1, m - 1), vals, bits)
    else:
        rhs = schur_eval(Partition.hook(k + 1, j - 1), vals, bits) + schur_eval(
            Partition.hook(k, j), vals, bits
        )
    tol = rel_tolerance_log2(bits) if tolerance_log2 is None else tolerance_log2
    return make_report("pieri-e{}h{}".format(j, k), lhs, rhs, tol)


def hook_expectation(
    n: int,
    a: int,
    b: int,
    precision_bits: int | None = None,
) -> ComplexValue:
    """E_ACUE(n)[s_(a,1^b)]: exactly (-1)^b when a+b = 0 mod 2n, else 0.

    The value is returned as an exact ComplexValue (no rounding occurs:
    the possible values are -1, 0, and 1).
    """
    if a < 1 or b < 0:
        raise DomainError("hook needs a >= 1 and b >= 0, got a={}, b={}".format(a, b))
    if n < 1:
        raise DomainError("ensemble size n must be >= 1")
    if b + 1 > n:
        raise DomainError(
            "hook length b+1 = {} exceeds the ensemble size n = {}".format(b + 1, n)
        )
    bits = DEFAULT_PRECISION_BITS if precision_bits is None else precision_bits
    if (a + b) % (2 * n) == 0:
        return ComplexValue.make(1 if b % 2 == 0 else -1, 0, bits)
    return ComplexValue.zero(bits)
