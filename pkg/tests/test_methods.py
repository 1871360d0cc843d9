from fractions import Fraction
from math import comb

import pytest

from powersums.methods import (
    MethodTag,
    bernoulli_table,
    brute_force_power_sum,
    falling_power_sum_poly,
    power_sum,
    power_sum_euler_maclaurin,
    power_sum_lhopital,
    power_sum_matrix,
    power_sum_stirling,
    recover_p2_via_plain_derivative,
    stirling_table,
    sum_k_times_k_minus_1,
)
from powersums.poly import N, Polynomial

from conftest import falling

P1 = Polynomial([0, Fraction(1, 2), Fraction(1, 2)])
P2 = Polynomial([0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)])
P3 = Polynomial([0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)])
ALL = list(MethodTag)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def stirling_by_enumeration(k, j):
    return sum(1 for p in set_partitions(list(range(k))) if len(p) == j)


def akiyama_tanigawa(n):
    # independent route to B_0..B_n with B_1 = +1/2
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def test_brute_force_examples():
    assert brute_force_power_sum(1, 100) == 5050
    assert brute_force_power_sum(2, 3) == 14
    assert brute_force_power_sum(0, 4) == 5
    assert brute_force_power_sum(30, 100) == sum(m**30 for m in range(1, 101))


@pytest.mark.parametrize("method", [power_sum_lhopital, power_sum_matrix,
                                    power_sum_stirling, power_sum_euler_maclaurin])
def test_small_degrees(method):
    assert method(0) == N + 1
    assert method(1) == P1
    assert method(2) == P2
    assert method(3) == P3


def test_matrix_method_d4_at_3():
    assert power_sum_matrix(4).eval(3) == 98
    assert power_sum_euler_maclaurin(4).eval(3) == 98


def test_stirling_examples():
    s = stirling_table(6)
    assert s[3][2] == 3 == stirling_by_enumeration(3, 2)
    assert s[4][2] == 7 == stirling_by_enumeration(4, 2)
    assert all(s[k][k] == 1 for k in range(7))
    assert s[0][0] == 1 and all(s[k][0] == 0 for k in range(1, 7))


@pytest.mark.parametrize("k", range(0, 7))
def test_stirling_against_enumeration(k):
    row = stirling_table(k)[k]
    assert row == [stirling_by_enumeration(k, j) for j in range(k + 1)]


@pytest.mark.parametrize("k", range(0, 16))
def test_stirling_change_of_basis(k):
    row = stirling_table(k)[k]
    for m in range(k + 3):
        assert m**k == sum(s * falling(m, j) for j, s in enumerate(row))


def test_falling_power_sum_examples():
    assert falling_power_sum_poly(1).eval(2) == 6 == 1 + 2 + 3
    assert falling_power_sum_poly(0) == N + 1
    assert falling_power_sum_poly(2).eval(2) == 20 == 2 * 1 + 3 * 2 + 4 * 3


@pytest.mark.parametrize("k", range(0, 16))
def test_falling_power_sum_brute_force(k):
    q = falling_power_sum_poly(k)
    assert q.degree == k + 1
    running = 0
    for n in range(51):
        running += falling(n + k, k)
        assert q.eval(n) == running


def test_printed_subscript_would_fail():
    # (n+k+1)_k / (k+1) has degree k and misses the brute-force value
    from powersums.poly import falling_factorial
    k = 2
    wrong = falling_factorial(k).scale_shift(1, k + 1) / (k + 1)
    assert wrong.eval(2) != 20


def test_bernoulli_examples():
    b = bernoulli_table(30)
    assert b[0] == 1 and b[1] == Fraction(1, 2)
    assert b[2] == Fraction(1, 6) and b[4] == Fraction(-1, 30) and b[6] == Fraction(1, 42)
    assert all(b[j] == 0 for j in range(3, 30, 2))
    assert b == akiyama_tanigawa(30)


def test_bernoulli_classical_recurrence():
    b = bernoulli_table(20)
    b[1] = -b[1]
    for m in range(1, 20):
        assert sum(comb(m + 1, j) * b[j] for j in range(m + 1)) == 0


def test_recover_p2():
    s = sum_k_times_k_minus_1()
    assert s.eval(3) == 8
    assert s.eval(1) == 0
    for n in range(20):
        assert s.eval(n) == sum(k * (k - 1) for k in range(1, n + 1))
    assert recover_p2_via_plain_derivative() == P2 == power_sum_lhopital(2)


def test_dispatch():
    assert len({power_sum(2, m) for m in ALL}) == 1
    assert all(power_sum(0, m) == N + 1 for m in ALL)
    assert all(power_sum(3, m).eval(10) == 3025 == (10 * 11 // 2) ** 2 for m in ALL)
    assert power_sum(2, "euler_maclaurin") == P2
    with pytest.raises(ValueError):
        power_sum(2, "simpson")
    with pytest.raises(ValueError):
        power_sum(-1, MethodTag.MATRIX)


@pytest.mark.parametrize("d", range(0, 31))
def test_cross_method_and_shape(d):
    polys = [power_sum(d, m) for m in ALL]
    assert all(p == polys[0] for p in polys)
    p = polys[0]
    if d >= 1:
        assert p.degree == d + 1
        assert p.leading_coefficient() == Fraction(1, d + 1)
        assert p[0] == 0
    # p(n) - p(n-1) = n^d
    assert p - p.scale_shift(1, -1) == Polynomial.monomial(d)
