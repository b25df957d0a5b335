"""Explicit rate constants and compatibility classes with certified steady states.

Every in-scope multistationary network has a one-dimensional stoichiometric
subspace, so a compatibility class is a line segment and its steady states are
the roots of one univariate polynomial on an open interval. Two independent
reductions are used:

* the *pivot* reduction, which solves the steady-state condition as a
  monomial-ratio equation in one species (two reactions), or writes the
  one-species ODE right-hand side directly;
* the *line* reduction, which substitutes ``x = x0 + t v`` into the full
  mass-action right-hand side.

``certify`` rebuilds both from scratch and demands that they agree.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Iterator, Optional, Sequence

from .classify import (
    Verdict,
    _is_t_alternating,
    arrow_diagram,
    classify,
    continuum_class_exists,
    max_alternating_T,
)
from .linalg import nullspace, rank
from .network import Network, is_consistent, negative_multiple
from .geometry import beta_of_reactions
from .ratpoly import RatPoly
from .rootiso import POSITIVE, Domain, RootInterval, ZeroPolynomialError, isolate_positive_roots

DEFAULT_SEARCH_BUDGET = 10**5
MAX_HALVINGS = 64


class WitnessError(RuntimeError):
    """No witness was found (search exhausted, or the request is impossible)."""


class CertificationError(AssertionError):
    """A witness disagrees with its recomputation or with the classification."""


def search_budget() -> int:
    """Candidate-evaluation cap, overridable with ``CRNMS_SEARCH_BUDGET``."""
    raw = os.environ.get("CRNMS_SEARCH_BUDGET")
    if raw is None:
        return DEFAULT_SEARCH_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CRNMS_SEARCH_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("CRNMS_SEARCH_BUDGET must be positive")
    return value


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# Data types


@dataclass(frozen=True)
class ClassOffsets:
    """A compatibility class as ``x_i = offsets[i] + slopes[i] * x_pivot``.

    The pivot has offset 0 and slope 1.
    """

    pivot: int
    offsets: tuple[Fraction, ...]
    slopes: tuple[Fraction, ...]

    @classmethod
    def through(cls, point: Sequence[Fraction], direction: Sequence[int], pivot: Optional[int] = None) -> "ClassOffsets":
        """The class through ``point`` for reaction direction ``direction``."""
        if pivot is None:
            pivot = next(i for i, v in enumerate(direction) if v)
        vp = direction[pivot]
        slopes = tuple(Fraction(v, vp) for v in direction)
        offsets = tuple(Fraction(x) - g * Fraction(point[pivot]) for x, g in zip(point, slopes))
        return cls(pivot, offsets, slopes)

    @classmethod
    def from_T(cls, T, direction: Sequence[int]) -> "ClassOffsets":
        """Two species: the class ``v1 x2 - v2 x1 = T``."""
        v1, v2 = direction
        T = Fraction(T)
        if v1 != 0:
            return cls(0, (Fraction(0), T / v1), (Fraction(1), Fraction(v2, v1)))
        return cls(1, (-T / v2, Fraction(0)), (Fraction(0), Fraction(1)))

    def T(self, direction: Sequence[int]) -> Fraction:
        """Two species: the conserved quantity ``v1 x2 - v2 x1``."""
        v1, v2 = direction
        x = self.point(Fraction(1))
        return v1 * x[1] - v2 * x[0]

    def point(self, xp: Fraction) -> tuple[Fraction, ...]:
        return tuple(c + g * xp for c, g in zip(self.offsets, self.slopes))

    def domain(self) -> Domain:
        """Pivot values keeping every coordinate positive."""
        lo: Fraction = Fraction(0)
        hi: Optional[Fraction] = None
        for c, g in zip(self.offsets, self.slopes):
            if g > 0:
                lo = max(lo, -c / g)
            elif g < 0:
                bound = -c / g
                hi = bound if hi is None else min(hi, bound)
            elif c <= 0:
                return Domain(0, 0)
        return Domain(lo, hi)


@dataclass(frozen=True)
class ReducedSystem:
    """Steady states of one class as roots of ``poly`` in ``domain``.

    Attributes:
        poly: Reduced polynomial in the pivot coordinate.
        domain: Pivot values inside the positive orthant.
        direction_sign: ``sign(d x_pivot / dt) = direction_sign * sign(poly)``.
        exponents: ``ỹ - y`` (two reactions) or reactant exponents (one species).
        cls: The class, for two reactions.
        ratio: Rate ratio ``K = lam * k / k~`` the monomial ratio must equal.
    """

    poly: RatPoly
    domain: Domain
    direction_sign: int
    exponents: tuple[int, ...]
    cls: Optional[ClassOffsets] = None
    ratio: Optional[Fraction] = None

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return self.cls.slopes if self.cls else (Fraction(1),)


@dataclass(frozen=True)
class SteadyState:
    """One certified steady state.

    Attributes:
        interval: Isolating interval for the reduced coordinate.
        point_intervals: Per-species intervals containing the state.
        multiplicity: Root multiplicity in the reduced polynomial.
        nondegenerate: Simple root.
        stable: Exponentially stable within its class (``None`` if degenerate).
    """

    interval: tuple[Fraction, Fraction]
    point_intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicity: int
    nondegenerate: bool
    stable: Optional[bool]

    def to_json(self) -> dict[str, Any]:
        return {
            "interval": [str(v) for v in self.interval],
            "point_intervals": [[str(a), str(b)] for a, b in self.point_intervals],
            "multiplicity": self.multiplicity,
            "nondegenerate": self.nondegenerate,
            "stable": self.stable,
        }


@dataclass(frozen=True)
class Witness:
    """Rates and class with their certified steady states.

    Attributes:
        network: The network.
        rates: One positive rational per reaction.
        cls: Class for multi-species reductions; ``None`` for one species.
        domain: Open interval of the reduced coordinate.
        poly: Reduced polynomial (zero for a continuum).
        steady_states: Steady states in increasing reduced coordinate.
        continuum: Every point of the class is a steady state.
        method: How the witness was produced.
    """

    network: Network
    rates: tuple[Fraction, ...]
    cls: Optional[ClassOffsets]
    domain: Domain
    poly: RatPoly
    steady_states: tuple[SteadyState, ...]
    continuum: bool = False
    method: str = ""

    @property
    def nondegenerate_count(self) -> int:
        return sum(1 for st in self.steady_states if st.nondegenerate)

    @property
    def stable_count(self) -> int:
        return sum(1 for st in self.steady_states if st.stable)

    def class_json(self) -> dict[str, Any]:
        if self.cls is None:
            return {}
        net = self.network
        pivot = net.species[self.cls.pivot]
        if net.s == 2 and net.r == 2:
            return {"T": str(self.cls.T(net.reactions[0].vector)), "pivot": pivot}
        return {"c": [str(c) for c in self.cls.offsets], "slopes": [str(g) for g in self.cls.slopes], "pivot": pivot}

    def to_json(self) -> dict[str, Any]:
        return {
            "network": str(self.network),
            "rates": {f"r{i}": str(k) for i, k in enumerate(self.rates)},
            "class": self.class_json(),
            "domain": self.domain.to_json(),
            "reduced_polynomial": str(self.poly),
            "continuum": self.continuum,
            "method": self.method,
            "steady_states": [st.to_json() for st in self.steady_states],
        }


# ---------------------------------------------------------------------------
# Reductions


def _check_rates(net: Network, rates: Sequence) -> tuple[Fraction, ...]:
    if len(rates) != net.r:
        raise ValueError(f"expected {net.r} rate constants, got {len(rates)}")
    out = tuple(Fraction(k) for k in rates)
    if any(k <= 0 for k in out):
        raise ValueError("rate constants must be positive")
    return out


def reduce_one_species(net: Network, rates: Sequence) -> RatPoly:
    """Right-hand side of the one-species mass-action ODE as a polynomial."""
    if net.s != 1:
        raise ValueError("expected a one-species network")
    ks = _check_rates(net, rates)
    coeffs: dict[int, Fraction] = {}
    for k, rx in zip(ks, net.reactions):
        m, n = rx.reactant[0], rx.product[0]
        coeffs[m] = coeffs.get(m, Fraction(0)) + k * (n - m)
    top = max(coeffs)
    return RatPoly([coeffs.get(i, 0) for i in range(top + 1)])


def reduce_two_reaction(net: Network, rates: Sequence, cls: ClassOffsets) -> ReducedSystem:
    """Steady states of two reactions in one class.

    With ``v = y' - y = -lam (ỹ' - ỹ)`` the steady-state condition is
    ``x^(ỹ - y) = K`` with ``K = lam * k / k~``. Substituting the class and
    clearing the negative exponents gives ``N(x_p) - K * D(x_p)``.

    Raises:
        ValueError: if the reaction vectors are not negative multiples.
    """
    if net.r != 2:
        raise ValueError("expected two reactions")
    ks = _check_rates(net, rates)
    first, second = net.reactions
    v = first.vector
    lam = negative_multiple(v, second.vector)
    if lam is None:
        raise ValueError("reaction vectors are not negative multiples; there is no positive steady state")
    K = lam * ks[0] / ks[1]
    d = tuple(b - a for a, b in zip(first.reactant.coeffs, second.reactant.coeffs))
    num = RatPoly.constant(1)
    den = RatPoly.constant(1)
    for di, c, g in zip(d, cls.offsets, cls.slopes):
        factor = RatPoly.linear(c, g)
        if di > 0:
            num = num * factor**di
        elif di < 0:
            den = den * factor ** (-di)
    poly = num - den.scale(K)
    return ReducedSystem(poly, cls.domain(), -_sign(v[cls.pivot]), d, cls, K)


@dataclass(frozen=True)
class LineSystem:
    """Full right-hand side restricted to ``x = point + t * direction``.

    ``dx/dt = direction * g(t)``, so ``dt/dt = g(t)``.
    """

    g: RatPoly
    domain: Domain
    point: tuple[Fraction, ...]
    direction: tuple[int, ...]
    shift: Fraction


def line_direction(net: Network) -> tuple[int, ...]:
    """Primitive direction of a one-dimensional stoichiometric subspace, with a
    positive entry first.

    Raises:
        ValueError: if the subspace is not one-dimensional.
    """
    if rank(net.stoich_matrix()) != 1:
        raise ValueError("stoichiometric subspace is not one-dimensional")
    v = net.reactions[0].vector
    g = 0
    for x in v:
        g = gcd(g, x)
    v = tuple(x // g for x in v)
    if next(x for x in v if x) < 0:
        v = tuple(-x for x in v)
    return v


def line_system(net: Network, rates: Sequence, point: Sequence) -> LineSystem:
    """Reduce the full mass-action system to the class through ``point``.

    The parameter is shifted so the domain starts at 0: ``t = lower + u``.
    """
    ks = _check_rates(net, rates)
    v = line_direction(net)
    x0 = tuple(Fraction(x) for x in point)
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for xi, vi in zip(x0, v):
        if vi > 0:
            b = -xi / vi
            lo = b if lo is None else max(lo, b)
        elif vi < 0:
            b = -xi / vi
            hi = b if hi is None else min(hi, b)
        elif xi <= 0:
            return LineSystem(RatPoly(), Domain(0, 0), x0, v, Fraction(0))
    assert lo is not None  # v has a positive entry
    g = RatPoly()
    for k, rx in zip(ks, net.reactions):
        w = rx.vector
        mu = next(Fraction(wi, vi) for wi, vi in zip(w, v) if vi)
        term = RatPoly.constant(k * mu)
        for xi, vi, e in zip(x0, v, rx.reactant.coeffs):
            if e:
                term = term * RatPoly.linear(xi + vi * lo, vi) ** e
        g = g + term
    dom = Domain(0, None if hi is None else hi - lo)
    return LineSystem(g, dom, x0, v, lo)


def _point_intervals(cls: Optional[ClassOffsets], lo: Fraction, hi: Fraction) -> tuple[tuple[Fraction, Fraction], ...]:
    if cls is None:
        return ((lo, hi),)
    out = []
    for c, g in zip(cls.offsets, cls.slopes):
        a, b = c + g * lo, c + g * hi
        out.append((min(a, b), max(a, b)))
    return tuple(out)


def _steady_states(poly: RatPoly, domain: Domain, direction_sign: int, cls: Optional[ClassOffsets]) -> tuple[SteadyState, ...]:
    out = []
    for root in isolate_positive_roots(poly, domain):
        simple = root.multiplicity == 1
        stable = (direction_sign * root.derivative_sign < 0) if simple else None
        out.append(
            SteadyState(
                (root.lower, root.upper),
                _point_intervals(cls, root.lower, root.upper),
                root.multiplicity,
                simple,
                stable,
            )
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# One species


def _roots_vandermonde(exponents: Sequence[int], roots: Sequence[Fraction]) -> list[Fraction]:
    """Coefficient vector (one per exponent) vanishing at every root."""
    rows = [[Fraction(r) ** m for m in exponents] for r in roots]
    basis = nullspace(rows, len(exponents))
    assert len(basis) == 1, "prescribed roots must be distinct and positive"
    return basis[0]


def prescribe_roots_one_species(net: Network, roots: Optional[Sequence] = None) -> Witness:
    """Rates giving a T-alternating network exactly the prescribed positive roots.

    The coefficient vector is the null vector of the generalized Vandermonde
    system. T positive roots of a (T+1)-term polynomial force strictly
    alternating coefficient signs, which is exactly what an alternating arrow
    diagram needs, so rates ``k_i = |c_i| / |n_i - m_i|`` always exist.

    Args:
        net: A T-alternating one-species network.
        roots: T distinct positive rationals; defaults to ``1, ..., T``.

    Raises:
        ValueError: if ``net`` is not T-alternating or the roots are invalid.
    """
    if net.s != 1:
        raise ValueError("expected a one-species network")
    t = net.r - 1
    if t < 1 or not _is_t_alternating(net, t):
        raise ValueError("network is not T-alternating")
    if roots is None:
        roots = list(range(1, t + 1))
    roots = sorted(Fraction(r) for r in roots)
    if len(roots) != t or len(set(roots)) != t or roots[0] <= 0:
        raise ValueError(f"need {t} distinct positive roots")
    order = sorted(range(net.r), key=lambda i: net.reactions[i].reactant[0])
    exps = [net.reactions[i].reactant[0] for i in order]
    c = _roots_vandermonde(exps, roots)
    first = net.reactions[order[0]]
    want = _sign(first.product[0] - first.reactant[0])
    if _sign(c[0]) != want:
        c = [-x for x in c]
    rates = [Fraction(0)] * net.r
    for ci, i in zip(c, order):
        rx = net.reactions[i]
        step = rx.product[0] - rx.reactant[0]
        assert _sign(ci) == _sign(step), "alternating signs violated"
        rates[i] = ci / step
    return _one_species_witness(net, _primitive(rates), "prescribed-roots")


def _primitive(rates: Sequence[Fraction]) -> list[Fraction]:
    """Scale a rate vector to coprime integers; roots are scale-invariant."""
    den = lcm(*(k.denominator for k in rates))
    ints = [int(k * den) for k in rates]
    g = gcd(*ints)
    return [Fraction(k, g) for k in ints]


def _one_species_witness(net: Network, rates: Sequence, method: str) -> Witness:
    poly = reduce_one_species(net, rates)
    rates = tuple(Fraction(k) for k in rates)
    if poly.is_zero():
        return Witness(net, rates, None, POSITIVE, poly, (), True, method)
    return Witness(net, rates, None, POSITIVE, poly, _steady_states(poly, POSITIVE, 1, None), False, method)


def witness_one_species(net: Network, count: Optional[int] = None, roots: Optional[Sequence] = None) -> Witness:
    """Nondegenerate steady states for any one-species network.

    A maximal alternating subnetwork (or a prefix of it, for smaller counts)
    gets prescribed roots; every other reaction gets a rate ``eps`` that is
    halved until the simple roots survive.

    Raises:
        WitnessError: if the request exceeds the network's capacity or the
            perturbation search fails.
    """
    if roots is not None:
        count = len(roots)
    wit = max_alternating_T(net)
    if count is None:
        count = wit.t_max
    if count > wit.t_max:
        raise WitnessError(f"at most {wit.t_max} nondegenerate steady states are possible")
    if count == 0:
        rates = [Fraction(1)] * net.r
        w = _one_species_witness(net, rates, "unit-rates")
        if w.nondegenerate_count == 0:
            return w
        raise WitnessError("unit rates produced nondegenerate steady states; zero was requested")
    chosen = list(wit.reactions[: count + 1])
    sub = Network(net.species, tuple(net.reactions[i] for i in chosen))
    base = prescribe_roots_one_species(sub, roots)
    if net.r == len(chosen):
        return base
    eps = min(base.rates) / 2
    for _ in range(MAX_HALVINGS):
        rates = [eps] * net.r
        for i, k in zip(chosen, base.rates):
            rates[i] = k
        w = _one_species_witness(net, rates, "prescribed-roots+perturbation")
        if w.nondegenerate_count >= count and all(st.nondegenerate for st in w.steady_states):
            return w
        eps /= 2
    raise WitnessError("perturbation of the alternating subnetwork did not keep its roots")


def witness_degenerate_one_species(net: Network) -> Witness:
    """Rates making every coefficient vanish for an all-mixed arrow diagram."""
    diagram = arrow_diagram(net)
    if not diagram.all_both():
        raise WitnessError("the arrow diagram is not mixed at every reactant")
    rates = [Fraction(0)] * net.r
    for a in diagram.reactant_coeffs:
        idx = [i for i, rx in enumerate(net.reactions) if rx.reactant[0] == a]
        up = sum(net.reactions[i].product[0] - a for i in idx if net.reactions[i].product[0] > a)
        down = sum(a - net.reactions[i].product[0] for i in idx if net.reactions[i].product[0] < a)
        for i in idx:
            rates[i] = Fraction(down if net.reactions[i].product[0] > a else up)
    w = _one_species_witness(net, rates, "balanced-coefficients")
    assert w.continuum
    return w


# ---------------------------------------------------------------------------
# Two reactions


def _candidate_values(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 12), rng.randint(1, 12))


def _log_curvature(beta: Sequence[int], v: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    """Sign-carrying part of the second derivative of ``log h`` along the class:
    the second derivative equals ``-q / v_p**2``."""
    return sum((Fraction(b * vi) / (xi * xi) for b, vi, xi in zip(beta, v, x)), Fraction(0))


def _monomial_ratio(d: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    out = Fraction(1)
    for di, xi in zip(d, x):
        out *= xi**di
    return out


def _two_reaction_witness(net: Network, K: Fraction, lam: Fraction, cls: ClassOffsets, method: str) -> Witness:
    # K = lam * k / k~ with k~ = 1.
    rates = (K / lam, Fraction(1))
    red = reduce_two_reaction(net, rates, cls)
    if red.poly.is_zero():
        return Witness(net, rates, cls, red.domain, red.poly, (), not red.domain.is_empty(), method)
    states = _steady_states(red.poly, red.domain, red.direction_sign, cls)
    return Witness(net, rates, cls, red.domain, red.poly, states, False, method)


def _tangent_points(net: Network, rng: random.Random, budget: int) -> Iterator[tuple[Fraction, ...]]:
    """Positive points where the monomial ratio is critical along the class
    line and the critical point is nondegenerate."""
    first, second = net.reactions
    b = beta_of_reactions(first, second)
    v = first.vector
    active = [i for i, x in enumerate(b.entries) if x]
    for n in range(budget):
        j = active[n % len(active)]
        x = [_candidate_values(rng) if n else Fraction(1) for _ in range(net.s)]
        rest = sum((Fraction(b.entries[i]) / x[i] for i in range(net.s) if i != j), Fraction(0))
        if rest == 0:
            continue
        xj = -b.entries[j] / rest
        if xj <= 0:
            continue
        x[j] = xj
        if _log_curvature(b.entries, v, x) != 0:
            yield tuple(x)


def witness_two_reaction(net: Network, desired: str = "two_nondeg", seed: int = 0) -> Witness:
    """Witness for two reactions in any number of species.

    Args:
        net: Two reactions with negative-multiple reaction vectors.
        desired: ``"two_nondeg"`` (at least two nondegenerate steady states),
            ``"double_degenerate"`` (a multiple root), ``"one"`` (exactly one
            nondegenerate state) or ``"none"`` (no steady state in the class).
        seed: Seed of the rational point search.

    Raises:
        WitnessError: if the classification rules the request out or the
            search budget runs out.
    """
    if net.r != 2:
        raise ValueError("expected two reactions")
    first, second = net.reactions
    b = beta_of_reactions(first, second)
    if b is None:
        if desired == "none":
            return _inconsistent_witness(net)
        raise WitnessError("reaction vectors are not negative multiples; no positive steady state exists")
    v = first.vector
    d = tuple(y2 - y1 for y1, y2 in zip(first.reactant.coeffs, second.reactant.coeffs))
    verdict = classify(net)
    budget = search_budget()
    rng = random.Random(seed)
    if desired in ("two_nondeg", "double_degenerate"):
        if verdict.cap_npss.lower < 2 and desired == "two_nondeg":
            raise WitnessError(
                f"classified {verdict.case_label.value} with cap_npss {verdict.cap_npss}; two nondegenerate states are impossible"
            )
        for x in _tangent_points(net, rng, budget):
            cls = ClassOffsets.through(x, v)
            h = _monomial_ratio(d, x)
            if desired == "double_degenerate":
                w = _two_reaction_witness(net, h, b.lam, cls, "tangent-point")
                if any(st.multiplicity >= 2 for st in w.steady_states):
                    return w
                continue
            # log h has a local maximum at x when q > 0; then K just below
            # h(x) cuts the curve twice near x, otherwise just above.
            side = -1 if _log_curvature(b.entries, v, x) > 0 else 1
            eps = h / 2
            for _ in range(MAX_HALVINGS):
                w = _two_reaction_witness(net, h + side * eps, b.lam, cls, "tangent-point-shift")
                if w.nondegenerate_count >= 2 and all(st.nondegenerate for st in w.steady_states):
                    return w
                eps /= 2
        raise WitnessError("search budget exhausted without a tangent point")
    if desired in ("one", "none"):
        want = 1 if desired == "one" else 0
        for n in range(budget):
            x = tuple(_candidate_values(rng) if n else Fraction(1) for _ in range(net.s))
            cls = ClassOffsets.through(x, v)
            h = _monomial_ratio(d, x)
            for K in (h, h * 2, h / 2, h * 16, h / 16):
                w = _two_reaction_witness(net, K, b.lam, cls, "point-search")
                if w.continuum:
                    continue
                if len(w.steady_states) == want and all(st.nondegenerate for st in w.steady_states):
                    return w
        raise WitnessError(f"search budget exhausted looking for {want} steady state(s)")
    raise ValueError(f"unknown desired outcome {desired!r}")


def _inconsistent_witness(net: Network) -> Witness:
    rates = tuple(Fraction(1) for _ in net.reactions)
    return Witness(net, rates, None, Domain(0, 0), RatPoly(), (), False, "inconsistent")


def witness_degenerate(net: Network) -> Witness:
    """A class consisting entirely of steady states.

    One species: balance every coefficient. Two reactions: place the class so
    that every linear factor vanishes at one of two endpoints, which makes the
    monomial ratio constant along the class.

    Raises:
        WitnessError: if no continuum exists.
    """
    if net.s == 1:
        return witness_degenerate_one_species(net)
    if net.r != 2:
        raise WitnessError("continuum witnesses cover one species and two reactions")
    first, second = net.reactions
    b = beta_of_reactions(first, second)
    if b is None or not continuum_class_exists(first, second):
        raise WitnessError("no compatibility class consists of steady states")
    v = first.vector
    d = tuple(y2 - y1 for y1, y2 in zip(first.reactant.coeffs, second.reactant.coeffs))
    # x = (t - 0) * v on positive entries, (t - 1) * v on negative ones, t = 1/2.
    x = tuple(Fraction(abs(vi), 2) if vi else Fraction(1) for vi in v)
    cls = ClassOffsets.through(x, v)
    h = _monomial_ratio(d, x)
    w = _two_reaction_witness(net, h, b.lam, cls, "continuum-class")
    assert w.continuum, "continuum construction failed"
    return w


# ---------------------------------------------------------------------------
# Generic search for networks with a one-dimensional subspace


def witness_search(net: Network, count: int = 2, stable: int = 0, seed: int = 0) -> Witness:
    """Random rational search for ``count`` nondegenerate states (``stable`` of
    them stable) in one class of a network with one-dimensional subspace.

    Rates and class points are drawn from a seeded generator, so results are
    reproducible.

    Raises:
        WitnessError: when the budget runs out.
    """
    line_direction(net)
    rng = random.Random(seed)
    scales = [Fraction(1, 64), Fraction(1, 8), Fraction(1), Fraction(8), Fraction(64)]
    for _ in range(search_budget()):
        rates = [_candidate_values(rng) * rng.choice(scales) for _ in range(net.r)]
        point = [_candidate_values(rng) for _ in range(net.s)]
        ls = line_system(net, rates, point)
        if ls.g.is_zero() or ls.domain.is_empty():
            continue
        states = _steady_states(ls.g, ls.domain, 1, None)
        if sum(st.nondegenerate for st in states) >= count and sum(bool(st.stable) for st in states) >= stable:
            return _line_witness(net, rates, ls, states)
    raise WitnessError("search budget exhausted")


def _line_witness(net: Network, rates, ls: LineSystem, states) -> Witness:
    v = ls.direction
    pivot = next(i for i, x in enumerate(v) if x)
    base = tuple(x + vi * ls.shift for x, vi in zip(ls.point, v))
    cls = ClassOffsets.through(base, v, pivot)
    # Re-express the line parameter u as the pivot coordinate x_p = base_p + v_p u.
    vp = v[pivot]
    out = []
    for st in states:
        lo, hi = (base[pivot] + vp * st.interval[0], base[pivot] + vp * st.interval[1])
        lo, hi = min(lo, hi), max(lo, hi)
        out.append(SteadyState((lo, hi), _point_intervals(cls, lo, hi), st.multiplicity, st.nondegenerate, st.stable))
    dom_hi = None if ls.domain.upper is None else base[pivot] + vp * ls.domain.upper
    domain = Domain(base[pivot], dom_hi)
    return Witness(net, tuple(Fraction(k) for k in rates), cls, domain, ls.g, tuple(out), False, "line-search")


# ---------------------------------------------------------------------------
# Certification


@dataclass(frozen=True)
class CertifiedReport:
    """Counts re-derived from scratch for a witness."""

    nondegenerate: int
    stable: int
    degenerate: int
    continuum: bool
    checks: tuple[str, ...] = field(default=())

    def to_json(self) -> dict[str, Any]:
        return {
            "nondegenerate": self.nondegenerate,
            "stable": self.stable,
            "degenerate": self.degenerate,
            "continuum": self.continuum,
            "checks": list(self.checks),
        }


def _fail(msg: str) -> None:
    raise CertificationError(msg)


def _line_states(net: Network, w: Witness) -> tuple[Optional[tuple[SteadyState, ...]], bool]:
    """Independent recount on the line through a point of the witness class."""
    if w.cls is None:
        point = (Fraction(0),)
        if net.s != 1:
            return None, False
    else:
        lo = w.domain.lower
        hi = w.domain.upper if w.domain.upper is not None else lo + 2
        point = w.cls.point((lo + hi) / 2)
    ls = line_system(net, w.rates, point)
    if ls.g.is_zero():
        return (), not ls.domain.is_empty()
    return _steady_states(ls.g, ls.domain, 1, None), False


def certify(net: Network, w: Witness, verdict: Optional[Verdict] = None) -> CertifiedReport:
    """Recompute the witness from rates and class and check it.

    Checks that the pivot reduction reproduces the reported roots, that the
    line reduction of the full system has the same number of roots with the
    same multiplicities and stability, and that the counts respect the
    capacities of ``verdict`` (computed when omitted).

    Raises:
        CertificationError: on any mismatch.
    """
    checks = []
    if w.network != net:
        _fail("witness belongs to a different network")
    if w.method == "inconsistent":
        if is_consistent(net).consistent:
            _fail("network is consistent")
        return CertifiedReport(0, 0, 0, False, ("inconsistent",))
    states = w.steady_states
    if net.s == 1 or net.r == 2:
        if net.s == 1:
            poly, domain, sign, cls = reduce_one_species(net, w.rates), POSITIVE, 1, None
        else:
            red = reduce_two_reaction(net, w.rates, w.cls)
            poly, domain, sign, cls = red.poly, red.domain, red.direction_sign, w.cls
        if (poly.is_zero() and not domain.is_empty()) != w.continuum:
            _fail("continuum flag disagrees with the reduced polynomial")
        states = () if poly.is_zero() else _steady_states(poly, domain, sign, cls)
        if len(states) != len(w.steady_states):
            _fail(f"witness reports {len(w.steady_states)} steady states, recomputation finds {len(states)}")
        for mine, theirs in zip(states, w.steady_states):
            if mine.multiplicity != theirs.multiplicity or mine.stable != theirs.stable:
                _fail("multiplicity or stability mismatch")
            if mine.interval[1] <= theirs.interval[0] or theirs.interval[1] <= mine.interval[0]:
                _fail("isolating intervals do not overlap")
        checks.append("pivot-reduction")
    line, line_cont = _line_states(net, w)
    if line is not None:
        if line_cont != w.continuum:
            _fail("line reduction disagrees about the continuum")
        if [s.multiplicity for s in line] != [s.multiplicity for s in states]:
            # The line parameter may run against the pivot, so compare as multisets.
            if sorted(s.multiplicity for s in line) != sorted(s.multiplicity for s in states):
                _fail("line reduction finds different steady states")
        if sorted(str(s.stable) for s in line) != sorted(str(s.stable) for s in states):
            _fail("line reduction disagrees about stability")
        checks.append("line-reduction")
    nondeg = sum(1 for s in states if s.nondegenerate)
    stable = sum(1 for s in states if s.stable)
    degen = len(states) - nondeg
    if verdict is None:
        verdict = classify(net)
    if w.continuum:
        if verdict.cap_pss.lower != float("inf"):
            _fail("continuum witness for a network with finite capacity")
    else:
        if verdict.cap_pss.upper is not None and len(states) > verdict.cap_pss.upper:
            _fail("more steady states than cap_pss allows")
        if verdict.cap_npss.upper is not None and nondeg > verdict.cap_npss.upper:
            _fail("more nondegenerate steady states than cap_npss allows")
        if verdict.cap_stable.upper is not None and stable > verdict.cap_stable.upper:
            _fail("more stable steady states than cap_stable allows")
    checks.append("capacity-bounds")
    return CertifiedReport(nondeg, stable, degen, w.continuum, tuple(checks))


# ---------------------------------------------------------------------------
# Sampling


def count_steady_states(net: Network, rates: Sequence, point: Sequence) -> tuple[int, int, bool]:
    """Steady states in the class through ``point``: ``(distinct, nondegenerate, continuum)``.

    Works for any network with a one-dimensional stoichiometric subspace.
    """
    ls = line_system(net, rates, point)
    if ls.domain.is_empty():
        return 0, 0, False
    if ls.g.is_zero():
        return 0, 0, True
    roots: list[RootInterval] = isolate_positive_roots(ls.g, ls.domain)
    return len(roots), sum(1 for r in roots if r.simple), False


def random_rates(rng: random.Random, r: int, lo=Fraction(1, 100), hi=Fraction(100)) -> list[Fraction]:
    """Rational rates drawn log-uniformly-ish from ``[lo, hi]``."""
    out = []
    for _ in range(r):
        num = rng.randint(1, 100)
        den = rng.randint(1, 100)
        k = Fraction(num, den) * rng.choice([Fraction(1, 10), Fraction(1), Fraction(10)])
        out.append(min(max(k, lo), hi))
    return out


def witness_for(net: Network, count: Optional[int] = None, roots: Optional[Sequence] = None) -> Witness:
    """Pick a witness strategy from the network's shape and verdict.

    Raises:
        WitnessError: if no strategy applies or the search fails.
    """
    verdict = classify(net)
    if net.s == 1:
        if count is None and roots is None and verdict.cap_npss.lower == 0 and verdict.cap_pss.lower == float("inf"):
            return witness_degenerate_one_species(net)
        return witness_one_species(net, count, roots)
    if roots is not None:
        raise WitnessError("prescribed roots are supported for one-species networks only")
    if net.r == 2:
        if count is None:
            if verdict.cap_npss.lower >= 2:
                return witness_two_reaction(net, "two_nondeg")
            if verdict.cap_pss.lower == float("inf"):
                return witness_degenerate(net)
            count = 1 if verdict.cap_pss.lower >= 1 else 0
        if count >= 2:
            return witness_two_reaction(net, "two_nondeg")
        return witness_two_reaction(net, "one" if count == 1 else "none")
    if rank(net.stoich_matrix()) == 1:
        want = 2 if count is None else count
        if verdict.cap_npss.upper is not None and want > verdict.cap_npss.upper:
            raise WitnessError(f"cap_npss is {verdict.cap_npss}; {want} nondegenerate states are impossible")
        return witness_search(net, want)
    raise WitnessError("witnesses need a one-dimensional stoichiometric subspace")
