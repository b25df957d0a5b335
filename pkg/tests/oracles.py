"""Reference computations that share no code with the package.

Each oracle re-derives a quantity from its definition with a different tool:
sympy for exact algebra, scipy for linear programming, networkx for graphs,
and brute force for combinatorics.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np
import sympy
from scipy.optimize import linprog


def vec(reactant, product):
    return [b - a for a, b in zip(reactant, product)]


def rank_oracle(matrix) -> int:
    if not matrix or not matrix[0]:
        return 0
    return sympy.Matrix(matrix).rank()


def consistent_oracle(vectors) -> bool:
    """Positive dependency via LP: find lam >= 1 with sum lam_k v_k = 0."""
    a = np.array(vectors, dtype=float).T
    r = a.shape[1]
    res = linprog(np.zeros(r), A_eq=a, b_eq=np.zeros(a.shape[0]), bounds=[(1, None)] * r, method="highs")
    return res.status == 0


def structure_oracle(rows):
    """(p, linkage classes, deficiency, weakly reversible) via networkx."""
    g = nx.DiGraph()
    for a, b in rows:
        g.add_edge(tuple(a), tuple(b))
    p = g.number_of_nodes()
    l = nx.number_weakly_connected_components(g)
    dim = rank_oracle([vec(a, b) for a, b in rows])
    wr = all(
        nx.is_strongly_connected(g.subgraph(c)) for c in nx.weakly_connected_components(g)
    )
    return p, l, p - l - dim, wr


def real_roots_oracle(coeffs_ascending, lo=0, hi=None):
    """Distinct real roots in (lo, hi) with multiplicities, via sympy."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c for c in coeffs_ascending])), x)
    out = []
    factors = sympy.factor_list(poly.as_expr())[1]
    for fac, mult in factors:
        for r in sympy.Poly(fac, x).real_roots():
            if r > lo and (hi is None or r < hi):
                out.append((r, mult))
    return sorted(out, key=lambda t: float(t[0]))


def t_max_oracle(rows) -> int:
    """Longest alternating subnetwork by brute force over reaction subsets."""
    best = 0
    n = len(rows)
    for k in range(2, n + 1):
        for sub in combinations(rows, k):
            reactants = [a[0] for a, _ in sub]
            if len(set(reactants)) != k:
                continue
            ordered = sorted(sub, key=lambda rb: rb[0][0])
            dirs = [1 if b[0] > a[0] else -1 for a, b in ordered]
            if all(d1 != d2 for d1, d2 in zip(dirs, dirs[1:])):
                best = max(best, k - 1)
    return best


def taxonomy_oracle(r1, r2) -> str:
    """Two species, two reactions: the case split written out directly."""
    (y, yp), (yt, ytp) = r1, r2
    v, w = vec(y, yp), vec(yt, ytp)
    # negative multiple test by cross product and dot product
    if v[0] * w[1] - v[1] * w[0] != 0 or v[0] * w[0] + v[1] * w[1] >= 0:
        return "INCONSISTENT"
    b = [v[i] * (yt[i] - y[i]) for i in range(2)]
    if b == [0, 0]:
        return "CASE_1"
    if b[0] == 0 or b[1] == 0:
        i = 0 if b[0] != 0 else 1
        j = 1 - i
        # (a): the coordinate where beta vanishes is unchanged by the reaction
        return "CASE_2A" if v[j] == 0 else "CASE_2B"
    if b[0] * b[1] > 0:
        return "CASE_3A"
    if yt[0] - y[0] == -(yt[1] - y[1]):
        return "CASE_3B"
    return "CASE_3C"


def mass_action_rhs(rows, rates, point):
    """Exact mass-action right-hand side at a sympy point."""
    s = len(point)
    out = [sympy.Integer(0)] * s
    for (a, b), k in zip(rows, rates):
        mono = sympy.Rational(k.numerator, k.denominator) if isinstance(k, Fraction) else sympy.Integer(k)
        for xi, e in zip(point, a):
            mono *= xi**e
        for i in range(s):
            out[i] += mono * (b[i] - a[i])
    return [sympy.expand(v) for v in out]


def root_factors_oracle(coeffs_ascending, lo=0, hi=None):
    """Irreducible factors (in ``x``) with a real root in (lo, hi), one entry per root."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs_ascending])), x)
    out = []
    for fac, _ in sympy.factor_list(poly.as_expr())[1]:
        for r in sympy.Poly(fac, x).real_roots():
            if r > lo and (hi is None or r < hi):
                out.append((sympy.Poly(fac, x), r))
    return out


def vanishes_on_factor(expr, factor) -> bool:
    """Whether a rational function of ``x`` vanishes at every root of ``factor``
    (exact: the numerator is divisible by the irreducible factor)."""
    x = factor.gens[0]
    num, _ = sympy.fraction(sympy.together(expr))
    return sympy.Poly(num, x).rem(factor).is_zero
