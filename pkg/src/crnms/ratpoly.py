"""Exact univariate polynomials over the rationals.

Coefficients are stored in ascending degree with trailing zeros stripped, so
the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RatPoly:
    """Polynomial ``sum(coeffs[i] * x**i)`` with ``Fraction`` coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    # construction -----------------------------------------------------------

    @classmethod
    def constant(cls, c: Number) -> "RatPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "RatPoly":
        return cls([0] * degree + [c])

    @classmethod
    def linear(cls, c0: Number, c1: Number) -> "RatPoly":
        """The polynomial ``c0 + c1 x``."""
        return cls([c0, c1])

    @classmethod
    def from_roots(cls, roots: Sequence[Number], lead: Number = 1) -> "RatPoly":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    # basic queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: "RatPoly | Number") -> "RatPoly":
        o = _coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RatPoly | Number") -> "RatPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Number) -> "RatPoly":
        return _coerce(other) - self

    def __mul__(self, other: "RatPoly | Number") -> "RatPoly":
        o = _coerce(other)
        if not self.coeffs or not o.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative power")
        result = RatPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def scale(self, c: Number) -> "RatPoly":
        return RatPoly(Fraction(c) * a for a in self.coeffs)

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        lead = other.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return RatPoly(quot), RatPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def compose_linear(self, a: Number, b: Number) -> "RatPoly":
        """Return ``p(a + b x)``."""
        out = RatPoly()
        lin = RatPoly.linear(a, b)
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def primitive(self) -> "RatPoly":
        """Scale to coprime integer coefficients with a positive leading term."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        sign = -1 if ints[-1] < 0 else 1
        return RatPoly(Fraction(sign * v, g) for v in ints)

    def sign_variations(self) -> int:
        """Sign changes in the coefficient sequence, zeros skipped."""
        prev = 0
        count = 0
        for c in self.coeffs:
            if c == 0:
                continue
            s = 1 if c > 0 else -1
            if prev and s != prev:
                count += 1
            prev = s
        return count

    def trailing_zero_order(self) -> int:
        """Multiplicity of the root at 0."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def shift_out_zero_root(self) -> "RatPoly":
        return RatPoly(self.coeffs[self.trailing_zero_order():])


def _coerce(v: "RatPoly | Number") -> RatPoly:
    return v if isinstance(v, RatPoly) else RatPoly.constant(v)


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: ``p = lead * prod(f_k ** k)`` with pairwise coprime square-free ``f_k``.

    Returns the nonconstant factors with their multiplicities, in increasing
    multiplicity order.
    """
    if p.degree <= 0:
        return []
    dp = p.derivative()
    a0 = poly_gcd(p, dp)
    b = p // a0
    c = dp // a0
    d = c - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), k))
        b = b // a
        c = d // a
        d = c - b.derivative()
        k += 1
    return out


def mobius_transform(p: RatPoly, lo: Number, hi: Number) -> RatPoly:
    """Return ``(1 + t)**n * p((lo + hi t) / (1 + t))`` with ``n = deg p``.

    Roots of ``p`` in ``(lo, hi)`` correspond one to one with positive roots
    of the result.
    """
    n = p.degree
    if n < 0:
        return RatPoly()
    num = RatPoly.linear(lo, hi)
    den = RatPoly.linear(1, 1)
    out = RatPoly()
    num_pow = [RatPoly.constant(1)]
    den_pow = [RatPoly.constant(1)]
    for _ in range(n):
        num_pow.append(num_pow[-1] * num)
        den_pow.append(den_pow[-1] * den)
    for i, c in enumerate(p.coeffs):
        if c:
            out = out + num_pow[i] * den_pow[n - i] * c
    return out


def _integer_coeffs(p: RatPoly) -> list[int]:
    """Coefficients scaled by a positive integer to lie in the integers."""
    den = lcm(*(c.denominator for c in p.coeffs))
    return [c.numerator * (den // c.denominator) for c in p.coeffs]


def _sign_changes(values: Sequence[int]) -> int:
    prev = 0
    count = 0
    for c in values:
        if c:
            s = 1 if c > 0 else -1
            if prev and s != prev:
                count += 1
            prev = s
    return count


def interval_sign_variations(p: RatPoly, lo: Number, hi: Number) -> int:
    """Sign variations of ``mobius_transform(p, lo, hi)`` in integer arithmetic.

    With ``lo = A/D`` and ``hi = B/D`` the transform equals a positive multiple
    of ``sum(c_i (A + B t)**i (D + D t)**(n - i))``, evaluated by Horner's rule.
    """
    if p.is_zero():
        return 0
    ints = _integer_coeffs(p)
    lo, hi = Fraction(lo), Fraction(hi)
    d = lcm(lo.denominator, hi.denominator)
    a = lo.numerator * (d // lo.denominator)
    b = hi.numerator * (d // hi.denominator)
    n = len(ints) - 1
    h = [ints[n]]
    wpow = [1]
    for i in range(n - 1, -1, -1):
        nxt = [0] * (len(h) + 1)
        for k, c in enumerate(h):
            nxt[k] += c * a
            nxt[k + 1] += c * b
        grown = [0] * (len(wpow) + 1)
        for k, c in enumerate(wpow):
            grown[k] += c * d
            grown[k + 1] += c * d
        wpow = grown
        ci = ints[i]
        if ci:
            for k, c in enumerate(wpow):
                nxt[k] += ci * c
        h = nxt
    return _sign_changes(h)


def cauchy_bound(p: RatPoly) -> Fraction:
    """Every root of ``p`` has absolute value strictly below this bound."""
    if p.degree <= 0:
        return Fraction(1)
    lead = abs(p.lead)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])
