from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from powersums.sequences import PHI, Surd5, fib_binet, fib_doubling, fib_square_sum, geometric_sum

from conftest import small_rationals


def fib_iter(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("a0, r, n, expected", [
    (1, 2, 3, 15),
    (1, 1, 4, 5),
    (1, Fraction(1, 2), 2, Fraction(7, 4)),
    (3, 1, 0, 3),
])
def test_geometric_examples(a0, r, n, expected):
    assert geometric_sum(a0, r, n) == expected


@given(small_rationals, st.one_of(st.just(Fraction(1)), small_rationals), st.integers(0, 64))
def test_geometric_matches_accumulation(a0, r, n):
    direct, term = Fraction(0), a0
    for _ in range(n + 1):
        direct += term
        term *= r
    assert geometric_sum(a0, r, n) == direct


def test_fib_examples():
    assert fib_doubling(0) == 0 and fib_doubling(1) == 1
    assert fib_doubling(11) == 89 and fib_doubling(12) == 144
    assert fib_doubling(30) == 832040
    assert fib_binet(10) == 55 and fib_binet(1) == 1 and fib_binet(12) == 144
    assert fib_binet(0) == 0


def test_fib_agreement_to_300():
    for n in range(301):
        ref = fib_iter(n)
        assert fib_doubling(n) == ref
        assert fib_binet(n) == ref
    assert fib_iter(300).bit_length() > 64


def test_square_sum():
    # the 89 x 144 rectangle is F_11 * F_12, so it tiles with squares F_1..F_11
    assert fib_square_sum(11) == (12816, 12816) == (89 * 144, 89 * 144)
    assert fib_square_sum(12) == (33552, 33552) == (144 * 233, 144 * 233)
    assert fib_square_sum(1) == (1, 1)
    assert fib_square_sum(10) == (4895, 4895)
    for n in range(1, 51):
        s, p = fib_square_sum(n)
        assert s == p


surds = st.builds(Surd5, small_rationals, small_rationals)


@given(surds, surds)
def test_conjugation_is_homomorphism(u, v):
    assert (u * v).conj() == u.conj() * v.conj()
    assert (u + v).conj() == u.conj() + v.conj()


def test_phi_is_golden():
    # phi^2 = phi + 1
    assert PHI * PHI == PHI + Surd5(Fraction(1), Fraction(0))


def test_negative_inputs_rejected():
    for f in (fib_doubling, fib_binet):
        with pytest.raises(ValueError):
            f(-1)
    with pytest.raises(ValueError):
        fib_square_sum(0)
