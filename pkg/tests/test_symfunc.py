"""Schur evaluation against the tableau definition, and helper identities."""

from random import Random

import pytest

from acue_lab.ensembles import acue_expect
from acue_lab.errors import DimensionError, DomainError
from acue_lab.numeric import ComplexValue, as_value, float_abs
from acue_lab.symfunc import (
    Partition,
    cluster_points,
    elementary,
    homogeneous,
    hook_expectation,
    pieri_check,
    schur_eval,
)

from conftest import BITS, subseed
from oracles import brute_elementary, brute_homogeneous, random_values, ssyt_schur


def _rel(a: ComplexValue, b: ComplexValue) -> float:
    return float_abs(a - b) / max(1.0, float_abs(b))


def test_partition_validation_and_shapes():
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((2, 0))
    lam = Partition((4, 2, 1))
    assert lam.length == 3
    assert lam.size == 7
    assert lam.part(1) == 4 and lam.part(3) == 1 and lam.part(5) == 0
    hook = Partition.hook(3, 2)
    assert hook.parts == (3, 1, 1)
    rect = Partition.rectangle(2, 3)
    assert rect.parts == (2, 2, 2)


def test_schur_matches_tableau_sum():
    rng = Random(subseed(20))
    shapes = [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (3, 2, 1), (2, 2, 1, 1)]
    for shape in shapes:
        for nvars in range(len(shape), 5):
            xs = random_values(rng, nvars, BITS)
            got = schur_eval(Partition(shape), xs)
            want = ssyt_schur(shape, xs)
            assert _rel(got, want) < 1e-70, (shape, nvars)


def test_schur_rejects_shape_longer_than_variables():
    rng = Random(subseed(21))
    xs = random_values(rng, 2, BITS)
    with pytest.raises(DomainError):
        schur_eval(Partition((1, 1, 1)), xs)


def test_schur_confluent_matches_tableau_sum():
    rng = Random(subseed(22))
    for shape in [(2,), (2, 1), (3, 1)]:
        base = random_values(rng, 2, BITS)
        xs = [base[0], base[0], base[1]]
        got = schur_eval(Partition(shape), xs)
        want = ssyt_schur(shape, xs)
        assert _rel(got, want) < 1e-65, shape


def test_schur_permutation_symmetry():
    rng = Random(subseed(23))
    xs = random_values(rng, 4, BITS)
    lam = Partition((3, 2))
    base = schur_eval(lam, xs)
    perm = [xs[2], xs[0], xs[3], xs[1]]
    assert _rel(schur_eval(lam, perm), base) < 1e-70


def test_elementary_and_homogeneous_match_brute_force():
    rng = Random(subseed(24))
    xs = random_values(rng, 5, BITS)
    for j in range(0, 7):
        assert _rel(elementary(j, xs), brute_elementary(j, xs)) < 1e-70
    for k in range(0, 5):
        assert _rel(homogeneous(k, xs), brute_homogeneous(k, xs)) < 1e-70


def test_elementary_beyond_count_is_zero():
    rng = Random(subseed(25))
    xs = random_values(rng, 3, BITS)
    assert float_abs(elementary(5, xs)) == 0.0


def test_pieri_check_small_grid():
    rng = Random(subseed(26))
    for m in range(1, 4):
        xs = random_values(rng, m, BITS)
        for j in range(0, m + 1):
            for k in range(0, 2 * m + 1, 2):
                report = pieri_check(j, k, xs)
                assert report.passed, (j, k, m, str(report))


def test_hook_expectation_against_enumeration():
    for n in (1, 2):
        for a in range(1, 2 * n + 1):
            for b in range(0, n):
                closed = hook_expectation(n, a, b)

                def obs(config, _a=a, _b=b):
                    return schur_eval(Partition.hook(_a, _b), config.roots)

                oracle = acue_expect(n, obs, BITS)
                assert _rel(closed, oracle) < 2.0**-120, (n, a, b)
                if (a + b) % (2 * n) == 0:
                    want = ComplexValue.make((-1) ** b, 0, BITS)
                    assert closed == want, (n, a, b)
                else:
                    assert closed.is_zero(), (n, a, b)


def test_cluster_points_groups_near_duplicates():
    a = as_value(0.5 + 0.2j, BITS)
    b = a + as_value(1e-60, BITS)
    c = as_value(-0.3 + 0.1j, BITS)
    groups = cluster_points([a, b, c], -128)
    assert sorted(mult for _, mult in groups) == [1, 2]
    reps = [rep for rep, _ in groups]
    assert any(rep == a for rep in reps) and any(rep == c for rep in reps)
    far = cluster_points([a, c], -128)
    assert sorted(mult for _, mult in far) == [1, 1]
