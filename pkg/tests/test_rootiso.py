from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crnms.ratpoly import RatPoly
from crnms.rootiso import Domain, ZeroPolynomialError, count_roots, isolate_positive_roots, refine_root
from oracles import real_roots_oracle

rationals = st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=7).filter(lambda c: any(c)))
def test_isolation_matches_sympy(coeffs):
    p = RatPoly(coeffs)
    got = isolate_positive_roots(p)
    want = real_roots_oracle(coeffs, lo=0)
    assert [r.multiplicity for r in got] == [m for _, m in want]
    for r, (root, _) in zip(got, want):
        assert r.lower < root < r.upper
    assert sum(r.multiplicity for r in got) <= p.sign_variations()


@given(st.lists(rationals, min_size=1, max_size=5), rationals, rationals)
def test_isolation_in_bounded_domain(roots, a, b):
    lo, hi = sorted((a, b))
    p = RatPoly.from_roots(roots)
    got = isolate_positive_roots(p, Domain(lo, hi))
    want = sorted({r for r in roots if lo < r < hi})
    assert len(got) == len(want)
    for iv, r in zip(got, want):
        assert lo <= iv.lower < r < iv.upper <= hi
        assert iv.multiplicity == roots.count(r)
        assert p(iv.lower) != 0 and p(iv.upper) != 0
    for u, v in zip(got, got[1:]):
        assert u.upper < v.lower


def test_cubic_example_signs():
    got = isolate_positive_roots(RatPoly([4, 0, -7, 3]))
    assert [r.multiplicity for r in got] == [1, 1]
    assert [r.derivative_sign for r in got] == [-1, 1]
    assert got[0].lower < 1 < got[0].upper and got[1].lower < 2 < got[1].upper


def test_quadratic_on_bounded_domain():
    got = isolate_positive_roots(RatPoly([2, -3, 1]), Domain(0, 3))
    assert len(got) == 2 and all(r.simple for r in got)


def test_no_real_roots():
    assert isolate_positive_roots(RatPoly([1, 0, 1])) == []


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomialError):
        isolate_positive_roots(RatPoly([]))


def test_irrational_roots_refine():
    p = RatPoly([-2, 0, 1])
    (root,) = isolate_positive_roots(p)
    fine = refine_root(p, root, Fraction(1, 10**6))
    assert fine.upper - fine.lower < Fraction(1, 10**6)
    assert fine.lower**2 < 2 < fine.upper**2
    assert count_roots(p, Domain(-5, 5)) == 2
