"""Decide multistationarity, nondegenerate multistationarity and multistability.

Every verdict carries three capacities (positive, nondegenerate and stable
steady-state counts) and a justification trail. Justification tags name the
criterion that was applied:

    consistency                  positive dependency of the reaction vectors
    deficiency-zero              deficiency-zero theorem
    deficiency-one               deficiency-one theorem (hypotheses hold)
    single-reaction              one reaction or one reversible pair
    one-species-alternation      arrow diagram and longest alternating subnetwork
    one-species-continuum        arrow diagram with every entry mixed
    two-reaction-beta            sign pattern of beta
    two-species-two-reaction-taxonomy   full case split for two species
    box-diagram                  zigzag box-diagram criterion
    two-reaction-slope           slope -1 exception for one positive/one negative entry
    two-reaction-continuum       class consisting entirely of steady states
    stability-sign               stability read off the sign of beta
    reversible-irreversible      one reversible pair plus one irreversible reaction
    two-reversible               two reversible pairs
    attested-multistability      multistability fact recorded from the literature
    lifting                      in-scope subnetwork with the same stoichiometric subspace
    out-of-scope                 no complete criterion applies
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Optional, Sequence

from .geometry import (
    BetaVector,
    BoxForm,
    beta_of_reactions,
    box_geometry,
    projected_slope_minus_one,
    raw_beta,
)
from .network import (
    Embedding,
    Network,
    Reaction,
    canonical_form,
    embedded_network,
    enumerate_embedded,
    is_consistent,
    make_network,
    parallel_multiple,
    parse_network,
    stoich_structure,
    StoichStructure,
    _tighten,
)
from .linalg import rank

INF = math.inf


# ---------------------------------------------------------------------------
# Capacities and verdicts


@dataclass(frozen=True)
class Capacity:
    """A steady-state count known exactly or only bounded.

    Attributes:
        lower: Proven lower bound (``math.inf`` for infinitely many).
        upper: Proven upper bound, ``None`` when nothing better than the lower
            bound's "at least" is known.
    """

    lower: float
    upper: Optional[float]

    @classmethod
    def exact(cls, n: float) -> "Capacity":
        return cls(n, n)

    @classmethod
    def at_least(cls, n: int) -> "Capacity":
        return cls(n, None)

    @classmethod
    def infinite(cls) -> "Capacity":
        return cls(INF, INF)

    @classmethod
    def between(cls, lo: int, hi: int) -> "Capacity":
        return cls.exact(lo) if lo == hi else cls(lo, hi)

    @property
    def kind(self) -> str:
        if self.lower == INF:
            return "infinite"
        if self.upper is None:
            return "at_least"
        if self.lower == self.upper:
            return "exact"
        return "range"

    @property
    def is_exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def at_most(self, n: float) -> bool:
        """Whether the count is proven to be at most ``n``."""
        return self.upper is not None and self.upper <= n

    def to_json(self) -> dict[str, Any]:
        kind = self.kind
        if kind == "infinite":
            return {"kind": "infinite"}
        if kind == "exact":
            return {"kind": "exact", "value": int(self.lower)}
        if kind == "at_least":
            return {"kind": "at_least", "value": int(self.lower)}
        return {"kind": "range", "lower": int(self.lower), "upper": int(self.upper)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Capacity":
        kind = data["kind"]
        if kind == "infinite":
            return cls.infinite()
        if kind == "exact":
            return cls.exact(data["value"])
        if kind == "at_least":
            return cls.at_least(data["value"])
        if kind == "range":
            return cls.between(data["lower"], data["upper"])
        raise ValueError(f"unknown capacity kind {kind!r}")

    def __str__(self) -> str:
        kind = self.kind
        if kind == "infinite":
            return "infinite"
        if kind == "exact":
            return str(int(self.lower))
        if kind == "at_least":
            return f">= {int(self.lower)}"
        return f"{int(self.lower)}..{int(self.upper)}"


ZERO = Capacity.exact(0)
ONE = Capacity.exact(1)
UNKNOWN = Capacity.at_least(0)


class CaseLabel(str, Enum):
    CASE_1 = "CASE_1"
    CASE_2A = "CASE_2A"
    CASE_2B = "CASE_2B"
    CASE_3A = "CASE_3A"
    CASE_3B = "CASE_3B"
    CASE_3C = "CASE_3C"
    INCONSISTENT = "INCONSISTENT"
    ONE_SPECIES = "ONE_SPECIES"
    ONE_REACTION = "ONE_REACTION"
    TWO_REACTION = "TWO_REACTION"
    ONE_REV_ONE_IRREV = "ONE_REV_ONE_IRREV"
    TWO_REVERSIBLE = "TWO_REVERSIBLE"
    LIFTED = "LIFTED"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Capacity):
        return value.to_json()
    return value


@dataclass(frozen=True)
class Justification:
    tag: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"theorem": self.tag, "data": _jsonable(self.data)}


def _flag(cap: Capacity, threshold: int) -> bool | str:
    if cap.lower >= threshold:
        return True
    if cap.at_most(threshold - 1):
        return False
    return "unknown"


@dataclass(frozen=True)
class Verdict:
    """Classification result.

    Attributes:
        cap_pss: Maximum number of positive steady states in one class.
        cap_npss: Same, counting only nondegenerate ones.
        cap_stable: Same, counting only exponentially stable ones.
        case_label: Case of the applied classification.
        justification: Criteria applied, in order.
    """

    cap_pss: Capacity
    cap_npss: Capacity
    cap_stable: Capacity
    case_label: CaseLabel
    justification: tuple[Justification, ...] = ()

    @property
    def multistationary(self) -> bool | str:
        return _flag(self.cap_pss, 2)

    @property
    def nondegenerately_multistationary(self) -> bool | str:
        return _flag(self.cap_npss, 2)

    @property
    def multistable(self) -> bool | str:
        return _flag(self.cap_stable, 2)

    @property
    def in_scope(self) -> bool:
        return self.case_label is not CaseLabel.OUT_OF_SCOPE

    def tags(self) -> list[str]:
        return [j.tag for j in self.justification]

    def to_json(self) -> dict[str, Any]:
        return {
            "multistationary": self.multistationary,
            "nondegenerately_multistationary": self.nondegenerately_multistationary,
            "multistable": self.multistable,
            "cap_pss": self.cap_pss.to_json(),
            "cap_npss": self.cap_npss.to_json(),
            "cap_stable": self.cap_stable.to_json(),
            "case": self.case_label.value,
            "justification": [j.to_json() for j in self.justification],
        }

    def with_extra(self, *items: Justification) -> "Verdict":
        return Verdict(self.cap_pss, self.cap_npss, self.cap_stable, self.case_label, self.justification + items)


def _verdict(pss, npss, stable, label, just) -> Verdict:
    v = Verdict(pss, npss, stable, label, tuple(just))
    _check_chain(v)
    return v


def _check_chain(v: Verdict) -> None:
    caps = [v.cap_pss, v.cap_npss, v.cap_stable]
    for hi, lo in zip(caps, caps[1:]):
        # A proven lower bound on a smaller count can never exceed a proven
        # upper bound on a larger one.
        assert hi.upper is None or lo.lower <= hi.upper, f"capacity chain broken: {caps}"


class ShapeError(ValueError):
    """The network does not have the shape a classifier requires."""


# ---------------------------------------------------------------------------
# Attested multistability facts


_ATTESTED_TEXT = {
    "A -> B + C; 2A + B + C -> 3A": Capacity.at_least(2),
    "A + C -> B; 2A + B -> 3A + C": ONE,
    "A <-> B; 2A + B -> 3A": Capacity.at_least(2),
    "A -> B; 2A + B <-> 3A": ONE,
}
_ATTESTED: dict[tuple, tuple[Capacity, str]] = {
    canonical_form(parse_network(text)): (cap, text) for text, cap in _ATTESTED_TEXT.items()
}


def attested_stable_capacity(net: Network) -> Optional[tuple[Capacity, str]]:
    """Recorded stable capacity for a network, matched up to species renaming."""
    if net.s > 4:
        return None
    return _ATTESTED.get(canonical_form(net))


def _apply_attestation(net: Network, stable: Capacity, just: list) -> Capacity:
    hit = attested_stable_capacity(net)
    if hit is None:
        return stable
    cap, text = hit
    just.append(Justification("attested-multistability", {"network": text, "cap_stable": cap}))
    return cap


# ---------------------------------------------------------------------------
# One species


class Arrow(str, Enum):
    RIGHT = "->"
    LEFT = "<-"
    BOTH = "<->"


@dataclass(frozen=True)
class ArrowDiagram:
    """Per distinct reactant coefficient, the direction of its reactions."""

    reactant_coeffs: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def all_both(self) -> bool:
        return all(a is Arrow.BOTH for a in self.arrows)

    def is_alternating(self) -> bool:
        """Strictly alternating between right and left (no mixed entries)."""
        if any(a is Arrow.BOTH for a in self.arrows):
            return False
        return all(a != b for a, b in zip(self.arrows, self.arrows[1:]))

    def __str__(self) -> str:
        return "(" + ", ".join(a.value for a in self.arrows) + ")"


def _require_one_species(net: Network) -> None:
    if net.s != 1:
        raise ShapeError("expected a one-species network")


def arrow_diagram(net: Network) -> ArrowDiagram:
    """Arrow diagram of a one-species network.

    Raises:
        ShapeError: if the network has more than one species.
    """
    _require_one_species(net)
    dirs: dict[int, set[int]] = {}
    for rx in net.reactions:
        a, b = rx.reactant[0], rx.product[0]
        dirs.setdefault(a, set()).add(1 if b > a else -1)
    coeffs = tuple(sorted(dirs))
    arrows = []
    for a in coeffs:
        d = dirs[a]
        arrows.append(Arrow.BOTH if len(d) == 2 else (Arrow.RIGHT if 1 in d else Arrow.LEFT))
    return ArrowDiagram(coeffs, tuple(arrows))


@dataclass(frozen=True)
class AlternationWitness:
    """Longest alternating subnetwork of a one-species network.

    Attributes:
        t_max: Number of sign alternations (reactions minus one).
        reactions: Indices of the chosen reactions, by increasing reactant.
        leading: Direction of the reaction with the smallest reactant.
    """

    t_max: int
    reactions: tuple[int, ...]
    leading: Arrow

    def subnetwork(self, net: Network) -> Network:
        return Network(net.species, tuple(net.reactions[i] for i in self.reactions))


def _longest_alternation(net: Network, first: int) -> list[int]:
    """Longest chain of reactions with increasing reactants and alternating
    directions, starting with direction ``first`` (+1 right, -1 left)."""
    options: dict[int, dict[int, int]] = {}
    for idx, rx in enumerate(net.reactions):
        a, b = rx.reactant[0], rx.product[0]
        options.setdefault(a, {}).setdefault(1 if b > a else -1, idx)
    chain: list[int] = []
    want = first
    # Greedy is optimal: taking the smallest reactant that offers the wanted
    # direction never blocks a longer continuation.
    for a in sorted(options):
        if want in options[a]:
            chain.append(options[a][want])
            want = -want
    return chain


def max_alternating_T(net: Network) -> AlternationWitness:
    """Largest T with a T-alternating subnetwork, preferring a right-leading witness.

    T is 0 when no two reactions alternate.
    """
    _require_one_species(net)
    right = _longest_alternation(net, 1)
    left = _longest_alternation(net, -1)
    if len(right) >= len(left):
        chain, lead = right, Arrow.RIGHT
    else:
        chain, lead = left, Arrow.LEFT
    return AlternationWitness(max(len(chain) - 1, 0), tuple(chain), lead)


def one_species_consistent(net: Network) -> bool:
    ups = any(rx.product[0] > rx.reactant[0] for rx in net.reactions)
    downs = any(rx.product[0] < rx.reactant[0] for rx in net.reactions)
    return ups and downs


def classify_one_species(net: Network) -> Verdict:
    """Capacities of a one-species network from its arrow diagram."""
    _require_one_species(net)
    diagram = arrow_diagram(net)
    wit = max_alternating_T(net)
    t = wit.t_max
    consistent = one_species_consistent(net)
    just = [
        Justification("consistency", {"consistent": consistent}),
        Justification(
            "one-species-alternation",
            {
                "arrow_diagram": [a.value for a in diagram.arrows],
                "reactant_coeffs": list(diagram.reactant_coeffs),
                "T_max": t,
                "witness_reactions": list(wit.reactions),
                "leading": wit.leading.value,
            },
        ),
    ]
    npss = Capacity.exact(t)
    if diagram.all_both():
        pss = Capacity.infinite()
        just.append(Justification("one-species-continuum", {"arrow_diagram": [a.value for a in diagram.arrows]}))
    else:
        pss = Capacity.exact(t)
    if t >= 2:
        lo = (t + 1) // 2 if wit.leading is Arrow.RIGHT else t // 2
        stable = Capacity.at_least(lo)
    elif t == 1:
        # One alternation: the single nondegenerate state is stable exactly
        # when some pair goes right below a pair going left.
        stable = ONE if len(_longest_alternation(net, 1)) >= 2 else ZERO
    else:
        stable = ZERO
    assert consistent == (pss.lower >= 1 or pss.lower == INF), "consistency and capacity disagree"
    return _verdict(pss, npss, stable, CaseLabel.ONE_SPECIES, just)


# ---------------------------------------------------------------------------
# Two reactions


def continuum_class_exists(first: Reaction, second: Reaction) -> bool:
    """Whether some class consists entirely of steady states (for suitable rates).

    Along a class line, the monomial ratio is constant iff within each sign
    class of the reaction vector the exponent differences sum to zero.
    Requires the vectors to be parallel.
    """
    v = first.vector
    d = tuple(b - a for a, b in zip(first.reactant.coeffs, second.reactant.coeffs))
    pos = sum(di for vi, di in zip(v, d) if vi > 0)
    neg = sum(di for vi, di in zip(v, d) if vi < 0)
    return pos == 0 and neg == 0


def _stable_from_beta(b: BetaVector) -> Capacity:
    return ONE if b.positives else ZERO


def _two_reaction_analysis(first: Reaction, second: Reaction, s: int):
    """Capacities for two directed reactions in ``s`` species.

    Returns ``(pss, npss, stable, just, beta)``; ``beta`` is ``None`` when the
    vectors are not negative multiples.
    """
    b = beta_of_reactions(first, second)
    if b is None:
        return ZERO, ZERO, ZERO, [Justification("consistency", {"consistent": False})], None
    just = [
        Justification("consistency", {"consistent": True, "lambda": b.lam}),
        Justification("two-reaction-beta", {"beta": list(b.entries), "lambda": b.lam}),
    ]
    cont = continuum_class_exists(first, second)
    if b.is_zero():
        assert cont
        just.append(Justification("two-reaction-continuum", {}))
        return Capacity.infinite(), ZERO, ZERO, just, b
    if b.is_one_signed():
        assert not cont
        stable = _stable_from_beta(b)
        just.append(Justification("stability-sign", {"sign": 1 if b.positives else -1}))
        return ONE, ONE, stable, just, b
    pos, neg = b.positives, b.negatives
    if len(pos) == 1 and len(neg) == 1 and projected_slope_minus_one(first, second, pos[0], neg[0]):
        assert cont
        just.append(Justification("two-reaction-slope", {"pair": [pos[0], neg[0]], "slope": -1}))
        just.append(Justification("two-reaction-continuum", {}))
        return Capacity.infinite(), ONE, ONE, just, b
    nonzero = len(pos) + len(neg)
    just.append(Justification("two-reaction-slope", {"positives": list(pos), "negatives": list(neg)}))
    if s == 2:
        assert nonzero == 2 and not cont
        return Capacity.exact(2), Capacity.exact(2), ONE, just, b
    if cont:
        just.append(Justification("two-reaction-continuum", {}))
        pss = Capacity.infinite()
    else:
        pss = Capacity.at_least(2)
    return pss, Capacity.at_least(2), Capacity.at_least(1), just, b


def _require_two_reactions(net: Network) -> None:
    if net.r != 2:
        raise ShapeError("expected exactly two reactions")


def two_species_case(first: Reaction, second: Reaction) -> CaseLabel:
    """Case label of the two-species two-reaction taxonomy."""
    b = beta_of_reactions(first, second)
    if b is None:
        return CaseLabel.INCONSISTENT
    b1, b2 = b.entries
    v = first.vector
    if b1 == 0 and b2 == 0:
        return CaseLabel.CASE_1
    if b1 == 0 or b2 == 0:
        if (v[0] == 0 and b2 != 0) or (v[1] == 0 and b1 != 0):
            return CaseLabel.CASE_2A
        return CaseLabel.CASE_2B
    if b1 * b2 > 0:
        return CaseLabel.CASE_3A
    d = tuple(b - a for a, b in zip(first.reactant.coeffs, second.reactant.coeffs))
    if d[0] == -d[1]:
        return CaseLabel.CASE_3B
    return CaseLabel.CASE_3C


def box_criterion(first: Reaction, second: Reaction) -> bool:
    """Geometric test for two species: consistent, box defined, diagonal slope
    not -1, and the box diagram is a zigzag."""
    if beta_of_reactions(first, second) is None:
        return False
    geo = box_geometry(first, second, 0, 1)
    return geo.box_defined and not geo.diagonal_slope_minus_one and geo.is_zigzag


def check_slope_identity(first: Reaction, second: Reaction, i: int, j: int) -> Optional[bool]:
    """Whether ``beta_j / beta_i == gamma * alpha`` (``None`` if undefined)."""
    b = raw_beta(first, second)
    if b[i] == 0 or b[j] == 0:
        return None
    geo = box_geometry(first, second, i, j)
    return Fraction(b[j], b[i]) == geo.gamma * geo.alpha


_EXPECTED_2x2 = {
    CaseLabel.INCONSISTENT: (ZERO, ZERO),
    CaseLabel.CASE_1: (Capacity.infinite(), ZERO),
    CaseLabel.CASE_2A: (ONE, ONE),
    CaseLabel.CASE_2B: (ONE, ONE),
    CaseLabel.CASE_3A: (ONE, ONE),
    CaseLabel.CASE_3B: (Capacity.infinite(), ONE),
    CaseLabel.CASE_3C: (Capacity.exact(2), Capacity.exact(2)),
}


def classify_two_species_two_rxn(net: Network) -> Verdict:
    """Full case taxonomy for two species and two reactions."""
    if net.s != 2:
        raise ShapeError("expected two species")
    _require_two_reactions(net)
    first, second = net.reactions
    pss, npss, stable, just, b = _two_reaction_analysis(first, second, 2)
    label = two_species_case(first, second)
    exp_pss, exp_npss = _EXPECTED_2x2[label]
    assert (pss, npss) == (exp_pss, exp_npss), f"{label}: {pss}, {npss}"
    geo = box_geometry(first, second, 0, 1)
    boxed = box_criterion(first, second)
    assert boxed == (label is CaseLabel.CASE_3C), "box criterion disagrees with the taxonomy"
    if b is not None:
        assert (geo.form is not BoxForm.NONE) == (b.entries[0] * b.entries[1] < 0)
        ident = check_slope_identity(first, second, 0, 1)
        assert ident is not False, "slope identity failed"
    just.append(Justification("two-species-two-reaction-taxonomy", {"case": label}))
    just.append(
        Justification(
            "box-diagram",
            {"form": geo.form, "alpha": geo.alpha, "gamma": geo.gamma, "box_defined": geo.box_defined},
        )
    )
    if net.reversible_pair_count() == 1:
        just.append(Justification("single-reaction", {"reversible_pair": True}))
    return _verdict(pss, npss, stable, label, just)


def classify_two_rxn(net: Network) -> Verdict:
    """Two directed reactions in any number of species."""
    _require_two_reactions(net)
    if net.s == 2:
        return classify_two_species_two_rxn(net)
    first, second = net.reactions
    pss, npss, stable, just, b = _two_reaction_analysis(first, second, net.s)
    label = CaseLabel.INCONSISTENT if b is None else CaseLabel.TWO_REACTION
    if net.s == 1:
        # Cross-check with the arrow-diagram classification.
        one = classify_one_species(net)
        assert (one.cap_pss, one.cap_npss) == (pss, npss), f"one-species disagreement on {net}"
    if npss.lower >= 2:
        stable = _apply_attestation(net, stable, just)
    if net.reversible_pair_count() == 1:
        just.append(Justification("single-reaction", {"reversible_pair": True}))
    return _verdict(pss, npss, stable, label, just)


# ---------------------------------------------------------------------------
# Reversible pairs


def _orient(pair: tuple[Reaction, Reaction], other: Reaction) -> Optional[tuple[Reaction, Reaction, Fraction]]:
    """Pick the direction ``y -> y'`` of a reversible pair with ``y'-y = -lam (ỹ'-ỹ)``, ``lam > 0``."""
    fwd, back = pair
    c = parallel_multiple(fwd.vector, other.vector)
    if c is None:
        return None
    if c > 0:
        fwd, back = back, fwd
        c = -c
    return fwd, back, -c


def _single_species_embedding(net: Network, keep: int) -> Optional[Network]:
    others = [i for i in range(net.s) if i != keep]
    return embedded_network(net, (), others).network


def _is_t_alternating(net: Optional[Network], t: int) -> bool:
    if net is None or net.s != 1 or net.r != t + 1:
        return False
    diagram = arrow_diagram(net)
    return len(diagram.arrows) == t + 1 and diagram.is_alternating()


def rev_irrev_criteria(net: Network) -> dict[str, Any]:
    """The three equivalent multistationarity conditions for one reversible
    pair and one irreversible reaction, each computed on its own."""
    (i, j), = net.pair_indices()
    (k,) = net.irreversible_indices()
    other = net.reactions[k]
    oriented = _orient((net.reactions[i], net.reactions[j]), other)
    if oriented is None:
        return {"parallel": False, "beta_negative": False, "interleave": False, "embedded_alternating": False}
    fwd, _, lam = oriented
    b = raw_beta(fwd, other)
    beta_negative = any(x < 0 for x in b)
    y, yp = fwd.reactant.coeffs, fwd.product.coeffs
    yt, ytp = other.reactant.coeffs, other.product.coeffs
    interleave = [
        idx
        for idx in range(net.s)
        if max(y[idx], yp[idx]) < yt[idx] < ytp[idx] or ytp[idx] < yt[idx] < min(y[idx], yp[idx])
    ]
    embedded = [idx for idx in range(net.s) if _is_t_alternating(_single_species_embedding(net, idx), 2)]
    return {
        "parallel": True,
        "lambda": lam,
        "beta": list(b),
        "beta_negative": beta_negative,
        "interleave": bool(interleave),
        "interleave_species": interleave,
        "embedded_alternating": bool(embedded),
        "embedded_species": embedded,
    }


def two_rev_criteria(net: Network) -> dict[str, Any]:
    """The two equivalent multistationarity conditions for two reversible pairs."""
    (i, j), (k, l) = net.pair_indices()
    first, second = net.reactions[i], net.reactions[k]
    if parallel_multiple(first.vector, second.vector) is None:
        return {"parallel": False, "interleave": False, "embedded_alternating": False}
    y, yp = first.reactant.coeffs, first.product.coeffs
    yt, ytp = second.reactant.coeffs, second.product.coeffs
    interleave = []
    for idx in range(net.s):
        lo1, hi1 = sorted((y[idx], yp[idx]))
        lo2, hi2 = sorted((yt[idx], ytp[idx]))
        if lo1 < hi1 < lo2 < hi2 or lo2 < hi2 < lo1 < hi1:
            interleave.append(idx)
    embedded = [idx for idx in range(net.s) if _is_t_alternating(_single_species_embedding(net, idx), 3)]
    return {
        "parallel": True,
        "interleave": bool(interleave),
        "interleave_species": interleave,
        "embedded_alternating": bool(embedded),
        "embedded_species": embedded,
    }


def _is_rev_irrev(net: Network) -> bool:
    return net.r == 3 and net.reversible_pair_count() == 1


def _is_two_rev(net: Network) -> bool:
    return net.r == 4 and net.reversible_pair_count() == 2


def classify_one_rev_one_irrev(net: Network) -> Verdict:
    """One reversible pair plus one irreversible reaction, any number of species."""
    if not _is_rev_irrev(net):
        raise ShapeError("expected one reversible pair and one irreversible reaction")
    crit = rev_irrev_criteria(net)
    assert crit["beta_negative"] == crit["interleave"] == crit["embedded_alternating"], crit
    cons = is_consistent(net)
    assert cons.consistent == crit["parallel"]
    just = [
        Justification("consistency", {"consistent": cons.consistent}),
        Justification("reversible-irreversible", crit),
    ]
    if not crit["parallel"]:
        return _verdict(ZERO, ZERO, ZERO, CaseLabel.ONE_REV_ONE_IRREV, just)
    if crit["beta_negative"]:
        stable = _apply_attestation(net, Capacity.at_least(1), just)
        return _verdict(Capacity.at_least(2), Capacity.at_least(2), stable, CaseLabel.ONE_REV_ONE_IRREV, just)
    return _verdict(ONE, Capacity.between(0, 1), Capacity.between(0, 1), CaseLabel.ONE_REV_ONE_IRREV, just)


def classify_two_rev(net: Network) -> Verdict:
    """Two reversible pairs, any number of species."""
    if not _is_two_rev(net):
        raise ShapeError("expected two reversible pairs")
    crit = two_rev_criteria(net)
    assert crit["interleave"] == crit["embedded_alternating"], crit
    just = [Justification("consistency", {"consistent": True}), Justification("two-reversible", crit)]
    if not crit["parallel"]:
        st = stoich_structure(net)
        assert st.deficiency == 0 and st.weakly_reversible
        just.append(Justification("deficiency-zero", {"weakly_reversible": True}))
        return _verdict(ONE, ONE, ONE, CaseLabel.TWO_REVERSIBLE, just)
    if crit["interleave"]:
        stable = _apply_attestation(net, Capacity.at_least(1), just)
        return _verdict(Capacity.at_least(2), Capacity.at_least(2), stable, CaseLabel.TWO_REVERSIBLE, just)
    return _verdict(ONE, Capacity.between(0, 1), Capacity.between(0, 1), CaseLabel.TWO_REVERSIBLE, just)


# ---------------------------------------------------------------------------
# Dispatcher


def deficiency_one_applies(st: StoichStructure) -> bool:
    """Hypotheses of the deficiency-one theorem."""
    return (
        all(c == 1 for c in st.terminal_counts)
        and all(d <= 1 for d in st.linkage_deficiencies)
        and sum(st.linkage_deficiencies) == st.deficiency
    )


def shape_of(net: Network) -> Optional[str]:
    """Name of the in-scope shape, or ``None``."""
    if net.s == 1:
        return "one-species"
    if net.r == 1:
        return "one-reaction"
    if net.r == 2:
        return "two-irrev" if net.reversible_pair_count() == 0 else "one-reversible-pair"
    if _is_rev_irrev(net):
        return "rev-irrev"
    if _is_two_rev(net):
        return "two-rev"
    return None


def _classify_one_reaction(net: Network) -> Verdict:
    just = [
        Justification("consistency", {"consistent": False}),
        Justification("single-reaction", {"reversible_pair": False}),
    ]
    return _verdict(ZERO, ZERO, ZERO, CaseLabel.ONE_REACTION, just)


def _lift_search(net: Network) -> Optional[tuple[Verdict, tuple[int, ...]]]:
    """In-scope subnetwork with the same stoichiometric subspace that is
    nondegenerately multistationary."""
    full = rank(net.stoich_matrix())
    for size in range(2, net.r):
        for subset in combinations(range(net.r), size):
            rxs = [net.reactions[i] for i in subset]
            sub = _tighten(net.species, rxs)
            if shape_of(sub) is None or rank([rx.vector for rx in rxs]) != full:
                continue
            v = _classify_in_scope(sub)
            if v.cap_npss.lower >= 2:
                return v, subset
    return None


def _classify_in_scope(net: Network) -> Verdict:
    shape = shape_of(net)
    if shape == "one-species":
        return classify_one_species(net)
    if shape == "one-reaction":
        return _classify_one_reaction(net)
    if shape in ("two-irrev", "one-reversible-pair"):
        return classify_two_rxn(net)
    if shape == "rev-irrev":
        return classify_one_rev_one_irrev(net)
    if shape == "two-rev":
        return classify_two_rev(net)
    raise ShapeError("network shape is out of scope")


def _classify_out_of_scope(net: Network, st: StoichStructure) -> Verdict:
    cons = is_consistent(net)
    just = [
        Justification("out-of-scope", {"s": net.s, "r": net.r, "reversible_pairs": net.reversible_pair_count()}),
        Justification("consistency", {"consistent": cons.consistent, "certificate": list(cons.certificate or ())}),
    ]
    if not cons.consistent:
        return _verdict(ZERO, ZERO, ZERO, CaseLabel.OUT_OF_SCOPE, just)
    if st.deficiency == 0:
        # Consistent with deficiency zero forces weak reversibility.
        assert st.weakly_reversible
        just.append(Justification("deficiency-zero", {"weakly_reversible": True}))
        return _verdict(ONE, ONE, ONE, CaseLabel.OUT_OF_SCOPE, just)
    if deficiency_one_applies(st):
        just.append(Justification("deficiency-one", {"linkage_deficiencies": list(st.linkage_deficiencies)}))
        return _verdict(ONE, Capacity.between(0, 1), Capacity.between(0, 1), CaseLabel.OUT_OF_SCOPE, just)
    lifted = _lift_search(net)
    if lifted is not None:
        sub, subset = lifted
        just.append(Justification("lifting", {"subnetwork_reactions": list(subset), "sub_case": sub.case_label}))
        stable = Capacity.at_least(int(sub.cap_stable.lower))
        return _verdict(Capacity.at_least(2), Capacity.at_least(2), stable, CaseLabel.LIFTED, just)
    return _verdict(Capacity.at_least(1), UNKNOWN, UNKNOWN, CaseLabel.OUT_OF_SCOPE, just)


def classify(net: Network) -> Verdict:
    """Route a network to its classifier and cross-check with deficiency theory.

    Never raises for a valid network: shapes without a complete criterion get
    an ``OUT_OF_SCOPE`` (or ``LIFTED``) verdict carrying whatever the
    deficiency theorems and consistency settle.
    """
    st = stoich_structure(net)
    shape = shape_of(net)
    if shape is None:
        return _classify_out_of_scope(net, st)
    verdict = _classify_in_scope(net)
    extra = []
    if st.deficiency == 0:
        assert verdict.cap_pss.at_most(1), f"deficiency-zero network classified multistationary: {net}"
        extra.append(Justification("deficiency-zero", {"weakly_reversible": st.weakly_reversible}))
        if st.weakly_reversible:
            assert verdict.cap_pss.lower >= 1
    elif deficiency_one_applies(st):
        assert verdict.cap_pss.at_most(1), f"deficiency-one network classified multistationary: {net}"
        extra.append(Justification("deficiency-one", {"linkage_deficiencies": list(st.linkage_deficiencies)}))
    return verdict.with_extra(*extra)


# ---------------------------------------------------------------------------
# Embedding-minimality


@dataclass(frozen=True)
class MinimalityResult:
    """Outcome of the embedding-minimality test.

    Attributes:
        minimal: Whether no proper embedded network is nondegenerately
            multistationary.
        witness: A failing embedded network, when not minimal.
        closed_form: Verdict of the closed-form family test, when it applies.
    """

    minimal: bool
    witness: Optional[Embedding]
    closed_form: Optional[bool]


def minimal_closed_form(net: Network) -> Optional[bool]:
    """Closed-form embedding-minimality for in-scope shapes, ``None`` elsewhere.

    Assumes ``net`` is nondegenerately multistationary.
    """
    if net.s == 1:
        return _is_t_alternating(net, 2)
    shape = shape_of(net)
    if shape in ("two-irrev", "one-reversible-pair"):
        if net.s == 2:
            return True
        if net.s == 3:
            first, second = net.reactions
            b = beta_of_reactions(first, second)
            if b is None or 0 in b.entries:
                return False
            pos, neg = b.positives, b.negatives
            if sorted((len(pos), len(neg))) != [1, 2]:
                return False
            return all(projected_slope_minus_one(first, second, i, j) for i in pos for j in neg)
        return False
    if shape in ("rev-irrev", "two-rev"):
        return False
    return None


def is_embedding_minimal(net: Network) -> MinimalityResult:
    """Check that no proper embedded network is nondegenerately multistationary.

    Raises:
        ValueError: if ``net`` is not nondegenerately multistationary or an
            embedded network cannot be decided.
    """
    v = classify(net)
    if v.cap_npss.lower < 2:
        raise ValueError("network is not nondegenerately multistationary")
    witness = None
    for emb in enumerate_embedded(net):
        sub = classify(emb.network)
        if sub.cap_npss.lower >= 2:
            witness = emb
            break
        if sub.nondegenerately_multistationary == "unknown":
            raise ValueError(f"cannot decide embedded network {emb.network}")
    minimal = witness is None
    closed = minimal_closed_form(net)
    if closed is not None:
        assert closed == minimal, f"closed-form minimality disagrees on {net}"
    return MinimalityResult(minimal, witness, closed)


# ---------------------------------------------------------------------------
# Existence construction for r + s >= 4


def construct_nondegenerate(r: int, s: int) -> Network:
    """A nondegenerately multistationary network with ``r`` reactions and ``s`` species.

    Needs ``r >= 2`` and ``r + s >= 4``. One species uses an alternating chain;
    more species start from a two-species zigzag, add reactions parallel to it
    and pad extra species onto both sides of the first reaction.
    """
    if r < 2 or r + s < 4 or s < 1:
        raise ValueError("needs r >= 2 and r + s >= 4")
    if s == 1:
        rows = []
        for j in range(r):
            rows.append(((j,), (j + 1,)) if j % 2 == 0 else ((j,), (j - 1,)))
        return make_network(rows)
    extra = s - 2
    pad = (1,) * extra
    rows = [((0, 1) + pad, (1, 0) + pad), ((1, 2) + (0,) * extra, (0, 3) + (0,) * extra)]
    for j in range(r - 2):
        rows.append(((j + 3, 0) + (0,) * extra, (j + 2, 1) + (0,) * extra))
    return make_network(rows)
