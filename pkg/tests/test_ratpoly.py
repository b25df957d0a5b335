from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from crnms.ratpoly import RatPoly, interval_sign_variations, mobius_transform, poly_gcd, squarefree_decomposition

x = sympy.Symbol("x")
coeff_lists = st.lists(st.integers(-6, 6), min_size=0, max_size=6)


def to_sympy(p: RatPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))


@given(coeff_lists, coeff_lists)
def test_arithmetic_matches_sympy(a, b):
    p, q = RatPoly(a), RatPoly(b)
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p + q) - to_sympy(p) - to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p.derivative()) - sympy.diff(to_sympy(p), x)) == 0


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_division_identity(a, b):
    p, q = RatPoly(a), RatPoly(b)
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@given(coeff_lists.filter(lambda c: any(c)), coeff_lists.filter(lambda c: any(c)))
def test_gcd_matches_sympy(a, b):
    p, q = RatPoly(a), RatPoly(b)
    g = poly_gcd(p, q)
    expected = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), x)
    assert g.degree == expected.degree()


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_squarefree_product_reconstructs(roots):
    p = RatPoly.from_roots(roots, lead=2)
    product = RatPoly.constant(1)
    for f, k in squarefree_decomposition(p):
        product = product * f**k
    assert product.degree == p.degree
    assert (p.scale(1 / p.lead) - product.scale(1 / product.lead)).is_zero()


def test_reduce_example_polynomial():
    p = RatPoly([4, 0, -7, 3])
    assert p(1) == 0 and p(2) == 0 and p(Fraction(-2, 3)) == 0
    assert p.sign_variations() == 2


@given(coeff_lists, st.integers(-3, 3), st.integers(1, 4))
def test_compose_linear(a, c0, c1):
    p = RatPoly(a)
    composed = p.compose_linear(c0, c1)
    for t in (0, 1, Fraction(1, 3)):
        assert composed(t) == p(c0 + c1 * t)


def test_mobius_maps_interval_roots_to_positive_roots():
    p = RatPoly.from_roots([1, 3, 7])
    q = mobius_transform(p, 0, 4)
    assert q.sign_variations() == 2


@given(coeff_lists.filter(lambda c: any(c)), st.fractions(-4, 4, max_denominator=5), st.fractions(-4, 4, max_denominator=5))
def test_integer_interval_variations_match_transform(a, lo, hi):
    p = RatPoly(a)
    assert interval_sign_variations(p, lo, hi) == mobius_transform(p, lo, hi).sign_variations()
