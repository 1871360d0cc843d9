from fractions import Fraction

from hypothesis import given

from powersums.poly import N, Polynomial, falling_factorial

from conftest import falling, polynomials, small_rationals


def P(*c):
    return Polynomial(c)


def test_arith_examples():
    assert (N + 1) * (N - 1) == P(-1, 0, 1)
    half = P(0, Fraction(1, 2), Fraction(1, 2))
    assert half + Polynomial() == half
    assert (N + 1) * (N + 2) == P(2, 3, 1)


def test_eval_examples():
    assert P(0, Fraction(1, 2), Fraction(1, 2)).eval(100) == 5050
    assert Polynomial().eval(17) == 0
    assert P(0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)).eval(3) == 14


def test_scale_shift_examples():
    assert P(0, 0, 1).scale_shift(1, 1) == P(1, 2, 1)
    assert N.scale_shift(0, 5) == P(5)
    assert P(0, 1, 1).scale_shift(1, -1) == P(0, -1, 1)


def test_canonical_zero():
    z = P(0, 0, 0)
    assert z.coeffs == () and z.is_zero() and z.degree == -1
    assert (N - N).coeffs == ()


@given(polynomials, polynomials, polynomials)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial()


@given(polynomials, polynomials)
def test_degree_law_and_canonical(p, q):
    for out in (p + q, p - q, p * q):
        assert not out.coeffs or out.coeffs[-1] != 0
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polynomials, polynomials, small_rationals)
def test_eval_homomorphism(p, q, x):
    assert (p * q).eval(x) == p.eval(x) * q.eval(x)
    assert (p + q).eval(x) == p.eval(x) + q.eval(x)


@given(polynomials, small_rationals, small_rationals, small_rationals)
def test_scale_shift_is_composition(p, a, b, x):
    assert p.scale_shift(a, b).eval(x) == p.eval(a * x + b)


def test_falling_factorial_matches_product():
    for k in range(8):
        ff = falling_factorial(k)
        assert ff.degree == k
        for y in range(-3, 10):
            assert ff.eval(y) == falling(y, k)


def test_scalar_division():
    assert P(2, 4) / 2 == P(1, 2)
