"""Exact isolation of real roots of a rational polynomial inside an open interval.

The method: split into square-free factors (Yun), isolate each factor's roots
by bisection with the Descartes bound on a Möbius-transformed polynomial, then
refine until the intervals are pairwise disjoint and no endpoint is a root.
Every reported interval contains exactly one root of the input, strictly
inside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ratpoly import Number, RatPoly, cauchy_bound, interval_sign_variations, squarefree_decomposition


class ZeroPolynomialError(ValueError):
    """Root isolation was asked for the zero polynomial (every point is a root)."""


@dataclass(frozen=True)
class Domain:
    """Open interval ``(lower, upper)``; ``upper=None`` stands for infinity."""

    lower: Fraction
    upper: Optional[Fraction] = None

    def __init__(self, lower: Number = 0, upper: Optional[Number] = None):
        object.__setattr__(self, "lower", Fraction(lower))
        object.__setattr__(self, "upper", None if upper is None else Fraction(upper))

    def is_empty(self) -> bool:
        return self.upper is not None and self.upper <= self.lower

    def contains(self, x: Number) -> bool:
        return x > self.lower and (self.upper is None or x < self.upper)

    def to_json(self) -> list[Optional[str]]:
        return [str(self.lower), None if self.upper is None else str(self.upper)]

    def __str__(self) -> str:
        hi = "inf" if self.upper is None else str(self.upper)
        return f"({self.lower}, {hi})"


POSITIVE = Domain(0, None)


@dataclass(frozen=True)
class RootInterval:
    """One isolated root.

    Attributes:
        lower: Rational lower endpoint, strictly below the root.
        upper: Rational upper endpoint, strictly above the root.
        multiplicity: Multiplicity of the root in the input polynomial.
        derivative_sign: Sign of the input's derivative at the root; 0 when
            the root is multiple.
        exact: The root itself when it was hit exactly (a rational root).
    """

    lower: Fraction
    upper: Fraction
    multiplicity: int
    derivative_sign: int
    exact: Optional[Fraction] = None

    @property
    def simple(self) -> bool:
        return self.multiplicity == 1

    @property
    def midpoint(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lower + self.upper) / 2


def _positive_root_count(f: RatPoly, lo: Fraction, hi: Fraction) -> int:
    """Descartes bound for roots of ``f`` in the open interval ``(lo, hi)``."""
    return interval_sign_variations(f, lo, hi)


@dataclass
class _Root:
    factor: RatPoly
    multiplicity: int
    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction]

    def refine(self) -> None:
        if self.exact is not None:
            w = (self.hi - self.lo) / 4
            self.lo, self.hi = self.exact - w, self.exact + w
            return
        mid = (self.lo + self.hi) / 2
        if self.factor(mid) == 0:
            self.exact = mid
            self.refine()
            return
        if _positive_root_count(self.factor, self.lo, mid) % 2 == 1:
            self.hi = mid
        else:
            self.lo = mid


def _isolate_squarefree(f: RatPoly, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction, Optional[Fraction]]]:
    found: list[tuple[Fraction, Fraction, Optional[Fraction]]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        v = _positive_root_count(f, a, b)
        if v == 0:
            continue
        if v == 1:
            found.append((a, b, None))
            continue
        mid = (a + b) / 2
        if f(mid) == 0:
            w = (b - a) / 4
            found.append((mid - w, mid + w, mid))
        stack.append((a, mid))
        stack.append((mid, b))
    return found


def isolate_positive_roots(poly: RatPoly, domain: Domain = POSITIVE) -> list[RootInterval]:
    """Isolate every real root of ``poly`` in the open ``domain``.

    Args:
        poly: Nonzero polynomial.
        domain: Open interval; defaults to the positive half-line.

    Returns:
        Roots in increasing order, each with an isolating interval inside the
        domain, its multiplicity and the sign of ``poly'`` there.

    Raises:
        ZeroPolynomialError: if ``poly`` is identically zero.
    """
    if poly.is_zero():
        raise ZeroPolynomialError("the zero polynomial has every point as a root")
    if domain.is_empty() or poly.degree <= 0:
        return []
    lo = domain.lower
    hi = domain.upper
    if hi is None:
        hi = max(cauchy_bound(poly), lo + 1)
    roots: list[_Root] = []
    for factor, k in squarefree_decomposition(poly):
        for a, b, exact in _isolate_squarefree(factor, lo, hi):
            roots.append(_Root(factor, k, a, b, exact))
    # Exact roots found at a midpoint start with a guessed radius; shrink until
    # the interval isolates within the factor and stays inside the domain.
    for r in roots:
        if r.exact is not None:
            while not (lo < r.lo and r.hi < hi and _positive_root_count(r.factor, r.lo, r.hi) == 1):
                r.refine()
    # Make intervals disjoint and keep endpoints off every root of poly.
    changed = True
    while changed:
        changed = False
        roots.sort(key=lambda r: r.lo)
        for i, r in enumerate(roots):
            bad = poly(r.lo) == 0 or poly(r.hi) == 0
            if i + 1 < len(roots) and r.hi >= roots[i + 1].lo:
                roots[i + 1].refine()
                bad = True
            if bad:
                r.refine()
                changed = True
    out = []
    for r in roots:
        if r.multiplicity == 1:
            sign = 1 if poly(r.hi) > 0 else -1
        else:
            sign = 0
        out.append(RootInterval(r.lo, r.hi, r.multiplicity, sign, r.exact))
    if domain.lower >= 0:
        total = sum(r.multiplicity for r in out)
        bound = poly.sign_variations()
        assert total <= bound, f"root count {total} exceeds Descartes bound {bound} for {poly}"
    return out


def refine_root(poly: RatPoly, root: RootInterval, width: Number) -> RootInterval:
    """Shrink an isolating interval until it is narrower than ``width``."""
    width = Fraction(width)
    if root.exact is not None:
        half = min(width / 4, (root.upper - root.lower) / 2)
        return RootInterval(root.exact - half, root.exact + half, root.multiplicity, root.derivative_sign, root.exact)
    factor = None
    for f, k in squarefree_decomposition(poly):
        if k == root.multiplicity and _positive_root_count(f, root.lower, root.upper) >= 1:
            factor = f
            break
    assert factor is not None
    r = _Root(factor, root.multiplicity, root.lower, root.upper, None)
    while r.hi - r.lo >= width and r.exact is None:
        r.refine()
    if r.exact is not None:
        half = min(width / 4, (r.hi - r.lo) / 2)
        return RootInterval(r.exact - half, r.exact + half, root.multiplicity, root.derivative_sign, r.exact)
    return RootInterval(r.lo, r.hi, root.multiplicity, root.derivative_sign, None)


def count_roots(poly: RatPoly, domain: Domain = POSITIVE) -> int:
    """Number of distinct roots in ``domain``."""
    return len(isolate_positive_roots(poly, domain))
