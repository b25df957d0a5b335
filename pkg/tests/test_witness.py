from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from crnms.classify import CaseLabel, classify, max_alternating_T
from crnms.network import Network, make_network, parse_network
from crnms.ratpoly import RatPoly
from crnms.rootiso import Domain
from crnms.witness import (
    ClassOffsets,
    WitnessError,
    certify,
    count_steady_states,
    prescribe_roots_one_species,
    reduce_one_species,
    reduce_two_reaction,
    search_budget,
    witness_degenerate,
    witness_for,
    witness_one_species,
    witness_search,
    witness_two_reaction,
)
from oracles import mass_action_rhs, real_roots_oracle, root_factors_oracle, vanishes_on_factor
from strategies import networks, two_reaction_networks

HO_HARRINGTON = make_network([((0, 1), (1, 0)), ((1, 2), (0, 3))])  # B -> A, A + 2B -> 3B over (A, B)


def rows_of(n):
    return [(rx.reactant.coeffs, rx.product.coeffs) for rx in n.reactions]


def proportional(p: RatPoly, q: RatPoly) -> bool:
    return not p.is_zero() and (p.scale(1 / p.lead) - q.scale(1 / q.lead)).is_zero()


# one species -----------------------------------------------------------------


def test_reduce_one_species_examples():
    assert reduce_one_species(parse_network("A -> 0\nA -> 2A"), [1, 1]).is_zero()
    assert reduce_one_species(parse_network("0 -> A\n2A -> A\n3A -> 4A"), [4, 7, 3]) == RatPoly([4, 0, -7, 3])
    assert reduce_one_species(parse_network("0 -> A"), [1]) == RatPoly([1])


@given(networks(max_s=1, max_r=4, max_mol=5), st.lists(st.integers(1, 9), min_size=4, max_size=4))
def test_reduce_one_species_matches_rhs(n, ks):
    rates = [Fraction(k) for k in ks[: n.r]]
    poly = reduce_one_species(n, rates)
    x = sympy.Rational(3, 7)
    (rhs,) = mass_action_rhs(rows_of(n), rates, [x])
    assert sympy.Rational(str(poly(Fraction(3, 7)))) == rhs


def test_prescribe_roots_example():
    n = parse_network("0 -> A\n2A -> A\n3A -> 4A")
    w = prescribe_roots_one_species(n, [1, 2])
    assert w.rates == (4, 7, 3)
    assert [s.nondegenerate for s in w.steady_states] == [True, True]
    assert [s.stable for s in w.steady_states] == [True, False]
    for s, r in zip(w.steady_states, (1, 2)):
        assert s.interval[0] < r < s.interval[1]


def test_prescribe_roots_linear():
    w = prescribe_roots_one_species(parse_network("0 -> A\nA -> 0"), [1])
    assert w.rates == (1, 1) and len(w.steady_states) == 1


def test_prescribe_roots_two_alternating_right():
    w = prescribe_roots_one_species(parse_network("0 -> A\nA -> 0\n2A -> 3A"))
    assert w.nondegenerate_count == 2 and w.stable_count == 1
    rep = certify(w.network, w)
    assert (rep.nondegenerate, rep.stable) == (2, 1)


def test_prescribe_roots_rejects_non_alternating():
    with pytest.raises(ValueError):
        prescribe_roots_one_species(parse_network("0 -> A\n2A -> 3A"))


@given(
    st.integers(1, 4).flatmap(
        lambda t: st.tuples(
            st.just(t),
            st.lists(st.integers(0, 6), min_size=t + 1, max_size=t + 1, unique=True),
            st.booleans(),
            st.lists(st.fractions(Fraction(1, 10), Fraction(10), max_denominator=10), min_size=t, max_size=t, unique=True),
        )
    )
)
def test_prescribed_roots_are_exact(args):
    t, reactants, right, roots = args
    reactants.sort()
    rows = []
    d = 1 if right else -1
    for a in reactants:
        if a == 0 and d < 0:
            return
        rows.append(((a,), (a + d,)))
        d = -d
    n = make_network(rows)
    w = prescribe_roots_one_species(n, roots)
    got = [s.interval for s in w.steady_states]
    assert len(got) == t
    for (lo, hi), r in zip(got, sorted(roots)):
        assert lo < r < hi
    want = real_roots_oracle(w.poly.coeffs, lo=0)
    assert [m for _, m in want] == [1] * t
    assert w.poly.coeffs and sum(1 for _ in want) <= w.poly.sign_variations()
    lower = (t + 1) // 2 if right else t // 2
    assert w.stable_count >= lower


def test_witness_one_species_with_extra_reactions():
    n = parse_network("A -> 0\nA -> 2A\n2A <-> 3A\n3A -> A")
    w = witness_one_species(n)
    assert w.nondegenerate_count == max_alternating_T(n).t_max == 2
    certify(n, w)


def test_witness_one_species_refuses_too_many():
    with pytest.raises(WitnessError):
        witness_one_species(parse_network("0 -> A\nA -> 0"), count=2)


def test_degenerate_one_species():
    w = witness_degenerate(parse_network("A -> 0\nA -> 2A"))
    assert w.continuum and w.rates == (1, 1)
    w = witness_degenerate(parse_network("A -> 0\nA -> 2A\n3A -> 2A\n3A -> 4A"))
    assert w.continuum and reduce_one_species(w.network, w.rates).is_zero()
    assert certify(w.network, w).continuum


# two reactions ---------------------------------------------------------------


def test_reduce_two_reaction_example():
    cls = ClassOffsets.from_T(3, HO_HARRINGTON.reactions[0].vector)
    red = reduce_two_reaction(HO_HARRINGTON, [2, 1], cls)
    assert proportional(red.poly, RatPoly([2, -3, 1]))
    assert red.domain == Domain(0, 3)


def test_reduce_two_reaction_continuum_example():
    n = parse_network("A + B -> 0\n2A -> 3A + B")
    cls = ClassOffsets.from_T(0, n.reactions[0].vector)
    assert reduce_two_reaction(n, [1, 1], cls).poly.is_zero()


def test_reduce_two_reaction_monotone():
    n = parse_network("A + 2B -> 3B\n3A + B -> 4A")
    for T in (-2, 0, 3):
        for ks in ((1, 1), (5, 1), (1, 7)):
            red = reduce_two_reaction(n, ks, ClassOffsets.from_T(T, n.reactions[0].vector))
            assert len(isolate(red)) <= 1


def isolate(red):
    from crnms.rootiso import isolate_positive_roots

    return isolate_positive_roots(red.poly, red.domain)


def test_ho_harrington_stability_by_hand():
    cls = ClassOffsets.from_T(3, HO_HARRINGTON.reactions[0].vector)
    red = reduce_two_reaction(HO_HARRINGTON, [2, 1], cls)
    from crnms.witness import _steady_states

    states = _steady_states(red.poly, red.domain, red.direction_sign, cls)
    # x_A = 1 gives (1, 2), stable; x_A = 2 gives (2, 1), unstable.
    assert [s.stable for s in states] == [True, False]


def test_witness_two_reaction_ho_harrington():
    w = witness_two_reaction(HO_HARRINGTON)
    rep = certify(HO_HARRINGTON, w)
    assert (rep.nondegenerate, rep.stable) == (2, 1)
    assert set(w.class_json()) == {"T", "pivot"}


def test_witness_two_reaction_three_species():
    n = parse_network("A -> B + C\n2A + B + C -> 3A")
    rep = certify(n, witness_two_reaction(n))
    assert rep.nondegenerate >= 2


def test_witness_refused_for_case_3a():
    with pytest.raises(WitnessError):
        witness_two_reaction(parse_network("A + 2B -> 3B\n3A + B -> 4A"))


def test_witness_degenerate_two_reaction():
    n = parse_network("A + B -> 0\n2A -> 3A + B")
    w = witness_degenerate(n)
    assert w.continuum and certify(n, w).continuum


def test_double_degenerate_when_rational():
    w = witness_two_reaction(HO_HARRINGTON, "double_degenerate")
    assert any(s.multiplicity == 2 for s in w.steady_states)
    certify(HO_HARRINGTON, w)


def test_one_and_none_witnesses():
    n = parse_network("A + 2B -> 3B\n3A + B -> 4A")
    assert certify(n, witness_two_reaction(n, "one")).nondegenerate == 1
    assert len(witness_two_reaction(HO_HARRINGTON, "none").steady_states) == 0


def case_3c(n):
    return classify(n).case_label is CaseLabel.CASE_3C


@settings(max_examples=40, suppress_health_check=[HealthCheck.filter_too_much])
@given(two_reaction_networks(s=2, max_mol=5))
def test_case_3c_reduction_is_sound(n):
    assume(case_3c(n))
    w = witness_two_reaction(n)
    assert w.nondegenerate_count == 2 and w.stable_count == 1
    # Every root of the reduced polynomial inside the domain is an exact zero
    # of the full mass-action right-hand side.
    roots = root_factors_oracle(w.poly.coeffs, lo=w.domain.lower, hi=w.domain.upper)
    assert len(roots) == 2
    x = sympy.Symbol("x")
    for factor, r in roots:
        point = [sympy.Rational(c.numerator, c.denominator) + sympy.Rational(g.numerator, g.denominator) * x
                 for c, g in zip(w.cls.offsets, w.cls.slopes)]
        assert all(p.subs(x, r) > 0 for p in point)
        assert all(vanishes_on_factor(v, factor) for v in mass_action_rhs(rows_of(n), w.rates, point))


@settings(max_examples=30, suppress_health_check=[HealthCheck.filter_too_much])
@given(two_reaction_networks(s=2, max_mol=5))
def test_swap_invariance(n):
    assume(classify(n).nondegenerately_multistationary is True)
    swapped = Network(n.species, tuple(reversed(n.reactions)))
    a = certify(n, witness_two_reaction(n))
    b = certify(swapped, witness_two_reaction(swapped))
    assert (a.nondegenerate, a.stable) == (b.nondegenerate, b.stable)


# generic line search and sampling ---------------------------------------------


def test_bistable_reversible_example():
    n = parse_network("A <-> B\n2A + B -> 3A")
    w = witness_search(n, count=2, stable=2)
    rep = certify(n, w)
    assert rep.stable == 2


def test_count_steady_states_matches_reduction():
    cls = ClassOffsets.from_T(3, HO_HARRINGTON.reactions[0].vector)
    assert count_steady_states(HO_HARRINGTON, [2, 1], cls.point(Fraction(3, 2))) == (2, 2, False)


def test_witness_for_dispatch():
    assert witness_for(parse_network("0 -> A\nA -> 0\n2A -> 3A"), 2).nondegenerate_count == 2
    assert witness_for(parse_network("A -> 0\nA -> 2A")).continuum


def test_search_budget_env(monkeypatch):
    assert search_budget() == 10**5
    monkeypatch.setenv("CRNMS_SEARCH_BUDGET", "7")
    assert search_budget() == 7
    monkeypatch.setenv("CRNMS_SEARCH_BUDGET", "0")
    with pytest.raises(ValueError):
        search_budget()
    # A single candidate, the class x_A + x_B = 2, never has exactly one
    # nondegenerate state for the ratios tried, so the search gives up.
    monkeypatch.setenv("CRNMS_SEARCH_BUDGET", "1")
    with pytest.raises(WitnessError):
        witness_two_reaction(HO_HARRINGTON, "one")
    # In this case exactly one nondegenerate state is impossible at any budget.
    monkeypatch.setenv("CRNMS_SEARCH_BUDGET", "200")
    with pytest.raises(WitnessError):
        witness_two_reaction(HO_HARRINGTON, "one")


def test_witness_json():
    w = witness_two_reaction(HO_HARRINGTON)
    data = w.to_json()
    assert set(data["rates"]) == {"r0", "r1"}
    assert all(isinstance(v, str) for v in data["rates"].values())
    st0 = data["steady_states"][0]
    assert {"interval", "point_intervals", "nondegenerate", "stable"} <= set(st0)
    assert all(isinstance(v, str) for v in st0["interval"])
