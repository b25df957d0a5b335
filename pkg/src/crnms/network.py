"""Reaction networks: parsing, rendering, stoichiometry and embedded networks.

A network is an ordered list of species and an ordered list of directed
reactions between complexes. All values are immutable; every function here is
pure.

Example:
    >>> net = parse_network("B -> A\\nA + 2B -> 3B")
    >>> net.species
    ('B', 'A')
    >>> stoich_structure(net).deficiency
    0
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

from .graph import terminal_components, weak_components
from .linalg import feasible_nonnegative, rank, transpose


class ParseError(ValueError):
    """Raised for malformed network text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class NetworkError(ValueError):
    """Raised when a network violates a structural invariant."""


@dataclass(frozen=True)
class Complex:
    """Nonnegative integer combination of species, stored per species index."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any((not isinstance(c, int)) or c < 0 for c in self.coeffs):
            raise NetworkError(f"complex coefficients must be nonnegative integers: {self.coeffs}")

    @property
    def molecularity(self) -> int:
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class Reaction:
    """Directed reaction ``reactant -> product`` with distinct complexes."""

    reactant: Complex
    product: Complex

    def __post_init__(self):
        if len(self.reactant) != len(self.product):
            raise NetworkError("reactant and product have different lengths")
        if self.reactant == self.product:
            raise NetworkError("trivial reaction: reactant equals product")

    @property
    def vector(self) -> tuple[int, ...]:
        """Reaction vector, product minus reactant."""
        return tuple(b - a for a, b in zip(self.reactant.coeffs, self.product.coeffs))

    def reversed(self) -> "Reaction":
        return Reaction(self.product, self.reactant)

    @classmethod
    def of(cls, reactant: Sequence[int], product: Sequence[int]) -> "Reaction":
        return cls(Complex(tuple(reactant)), Complex(tuple(product)))


@dataclass(frozen=True)
class Network:
    """A mass-action reaction network.

    Attributes:
        species: Species names in a fixed order (first appearance when parsed).
        reactions: Directed reactions; a reversible pair is two entries.
    """

    species: tuple[str, ...]
    reactions: tuple[Reaction, ...]
    complexes: tuple[Complex, ...] = field(init=False, compare=False, repr=False)
    reversible_pairs: tuple[Optional[int], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        s = len(self.species)
        if s < 1 or not self.reactions:
            raise NetworkError("a network needs at least one species and one reaction")
        if len(set(self.species)) != s:
            raise NetworkError("duplicate species names")
        if len(set(self.reactions)) != len(self.reactions):
            raise NetworkError("duplicate reactions")
        for rx in self.reactions:
            if len(rx.reactant) != s:
                raise NetworkError("reaction length does not match species count")
        for i in range(s):
            if not any(rx.reactant[i] or rx.product[i] for rx in self.reactions):
                raise NetworkError(f"species {self.species[i]!r} appears in no complex")
        seen: dict[Complex, None] = {}
        for rx in self.reactions:
            seen.setdefault(rx.reactant)
            seen.setdefault(rx.product)
        object.__setattr__(self, "complexes", tuple(seen))
        index = {rx: i for i, rx in enumerate(self.reactions)}
        pairs = tuple(index.get(rx.reversed()) for rx in self.reactions)
        object.__setattr__(self, "reversible_pairs", pairs)

    @property
    def s(self) -> int:
        return len(self.species)

    @property
    def r(self) -> int:
        return len(self.reactions)

    @property
    def p(self) -> int:
        return len(self.complexes)

    @property
    def max_molecularity(self) -> int:
        return max(c.molecularity for c in self.complexes)

    def stoich_matrix(self) -> tuple[tuple[int, ...], ...]:
        """The s-by-r matrix whose columns are the reaction vectors."""
        return tuple(tuple(rx.vector[i] for rx in self.reactions) for i in range(self.s))

    def reversible_pair_count(self) -> int:
        return sum(1 for i, j in enumerate(self.reversible_pairs) if j is not None and i < j)

    def irreversible_indices(self) -> list[int]:
        return [i for i, j in enumerate(self.reversible_pairs) if j is None]

    def pair_indices(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.reversible_pairs) if j is not None and i < j]

    def __str__(self) -> str:
        return "; ".join(render_reaction(rx, self.species) for rx in self.reactions)


# ---------------------------------------------------------------------------
# Parsing and rendering

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_NUMBER = re.compile(r"\d+(?:\.\d*)?|\.\d+")
_ARROWS = ("<->", "->", "<-")


def _parse_complex(seg: str, start: int, stop: int, lineno: int, col0: int, names: dict[str, int]):
    """Parse ``seg[start:stop]`` as a complex; returns ``{species_index: coeff}``."""
    text = seg[start:stop]
    if not text.strip():
        raise ParseError("missing complex", lineno, col0 + start + 1)
    if text.strip() == "0":
        return {}
    terms: dict[int, int] = {}
    pos = 0
    expect_term = True
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        col = col0 + start + pos + 1
        if pos >= len(text):
            if expect_term:
                raise ParseError("expected a term after '+'", lineno, col)
            break
        if not expect_term:
            if text[pos] != "+":
                raise ParseError(f"unexpected character {text[pos]!r}", lineno, col)
            pos += 1
            expect_term = True
            continue
        coeff = 1
        m = _NUMBER.match(text, pos)
        if m:
            token = m.group(0)
            if "." in token:
                raise ParseError(f"non-integer coefficient {token}", lineno, col)
            coeff = int(token)
            if coeff < 1:
                raise ParseError(f"coefficient must be at least 1, got {token}", lineno, col)
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        elif text[pos] == "-":
            raise ParseError("negative coefficient", lineno, col)
        m = _IDENT.match(text, pos)
        if not m:
            if pos < len(text) and text[pos] == "0" and coeff == 1:
                raise ParseError("'0' must stand alone as the zero complex", lineno, col0 + start + pos + 1)
            raise ParseError("expected a species name", lineno, col0 + start + pos + 1)
        name = m.group(0)
        if name not in names:
            names[name] = len(names)
        idx = names[name]
        terms[idx] = terms.get(idx, 0) + coeff
        pos = m.end()
        expect_term = False
    return terms


def _split_arrow(seg: str, lineno: int, col0: int) -> tuple[int, int, str]:
    found = []
    i = 0
    while i < len(seg):
        for arrow in _ARROWS:
            if seg.startswith(arrow, i):
                found.append((i, arrow))
                i += len(arrow)
                break
        else:
            i += 1
    if not found:
        raise ParseError("missing reaction arrow", lineno, col0 + 1)
    if len(found) > 1:
        raise ParseError("more than one reaction arrow", lineno, col0 + found[1][0] + 1)
    pos, arrow = found[0]
    return pos, pos + len(arrow), arrow


def parse_network(text: str) -> Network:
    """Parse network text.

    One reaction per line (``;`` also separates reactions), ``#`` starts a
    comment, blank lines are skipped. Arrows are ``->``, ``<-`` and ``<->``.

    Raises:
        ParseError: on malformed text, trivial or duplicate reactions, or bad
            coefficients.
    """
    names: dict[str, int] = {}
    raw: list[tuple[dict[int, int], dict[int, int], int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        offset = 0
        for seg in line.split(";"):
            col0 = offset
            offset += len(seg) + 1
            if not seg.strip():
                continue
            lo, hi, arrow = _split_arrow(seg, lineno, col0)
            col = col0 + len(seg) - len(seg.lstrip()) + 1
            left = _parse_complex(seg, 0, lo, lineno, col0, names)
            right = _parse_complex(seg, hi, len(seg), lineno, col0, names)
            if arrow == "->":
                raw.append((left, right, lineno, col))
            elif arrow == "<-":
                raw.append((right, left, lineno, col))
            else:
                raw.append((left, right, lineno, col))
                raw.append((right, left, lineno, col))
    if not raw:
        raise ParseError("no reactions found", 1, 1)
    s = len(names)
    species = tuple(sorted(names, key=names.get))
    reactions: list[Reaction] = []
    seen: set[Reaction] = set()
    for left, right, lineno, col in raw:
        a = tuple(left.get(i, 0) for i in range(s))
        b = tuple(right.get(i, 0) for i in range(s))
        if a == b:
            raise ParseError("trivial reaction (reactant equals product)", lineno, col)
        rx = Reaction.of(a, b)
        if rx in seen:
            raise ParseError("duplicate reaction", lineno, col)
        seen.add(rx)
        reactions.append(rx)
    return Network(species, tuple(reactions))


def render_complex(c: Complex, species: Sequence[str]) -> str:
    terms = [(f"{v}{name}" if v > 1 else name) for v, name in zip(c.coeffs, species) if v]
    return " + ".join(terms) if terms else "0"


def render_reaction(rx: Reaction, species: Sequence[str], arrow: str = "->") -> str:
    return f"{render_complex(rx.reactant, species)} {arrow} {render_complex(rx.product, species)}"


def render_network(net: Network) -> str:
    """Render in the text grammar; adjacent reversible pairs become ``<->``."""
    lines = []
    i = 0
    while i < net.r:
        rx = net.reactions[i]
        if net.reversible_pairs[i] == i + 1:
            lines.append(render_reaction(rx, net.species, "<->"))
            i += 2
        else:
            lines.append(render_reaction(rx, net.species))
            i += 1
    return "\n".join(lines) + "\n"


def network_to_dict(net: Network) -> dict:
    """JSON-ready dictionary: species, reactions and their reversible partner index."""

    def cdict(c: Complex) -> dict[str, int]:
        return {name: v for name, v in zip(net.species, c.coeffs) if v}

    return {
        "species": list(net.species),
        "reactions": [
            {"reactant": cdict(rx.reactant), "product": cdict(rx.product), "reversible_pair": pair}
            for rx, pair in zip(net.reactions, net.reversible_pairs)
        ],
    }


def network_from_dict(data: dict) -> Network:
    species = tuple(data["species"])
    idx = {name: i for i, name in enumerate(species)}

    def vec(d: dict) -> tuple[int, ...]:
        out = [0] * len(species)
        for name, v in d.items():
            out[idx[name]] = int(v)
        return tuple(out)

    return Network(species, tuple(Reaction.of(vec(r["reactant"]), vec(r["product"])) for r in data["reactions"]))


def network_to_json(net: Network) -> str:
    return json.dumps(network_to_dict(net), sort_keys=True)


def make_network(reactions: Iterable[tuple[Sequence[int], Sequence[int]]], species: Optional[Sequence[str]] = None) -> Network:
    """Build a network from coefficient vectors, naming species A, B, C, ... by default."""
    rxs = tuple(Reaction.of(a, b) for a, b in reactions)
    s = len(rxs[0].reactant)
    names = tuple(species) if species is not None else default_species_names(s)
    return Network(names, rxs)


def default_species_names(s: int) -> tuple[str, ...]:
    if s <= 26:
        return tuple(chr(ord("A") + i) for i in range(s))
    return tuple(f"X{i + 1}" for i in range(s))


# ---------------------------------------------------------------------------
# Stoichiometry


@dataclass(frozen=True)
class StoichStructure:
    """Structural invariants of a network.

    Attributes:
        stoich_matrix: s-by-r integer matrix of reaction vectors.
        subspace_dim: Rank of the stoichiometric matrix over the rationals.
        complexes: Complexes in first-appearance order; indices below refer here.
        linkage_classes: Connected components of the complex graph.
        terminal_strong_linkage_classes: Sink strong components.
        weakly_reversible: Every linkage class is strongly connected.
        deficiency: ``p - l - subspace_dim``.
        linkage_deficiencies: Deficiency of each linkage class taken alone.
        terminal_counts: Number of terminal strong classes in each linkage class.
    """

    stoich_matrix: tuple[tuple[int, ...], ...]
    subspace_dim: int
    complexes: tuple[Complex, ...]
    linkage_classes: tuple[tuple[int, ...], ...]
    terminal_strong_linkage_classes: tuple[tuple[int, ...], ...]
    weakly_reversible: bool
    deficiency: int
    linkage_deficiencies: tuple[int, ...]
    terminal_counts: tuple[int, ...]


def complex_edges(net: Network) -> list[tuple[int, int]]:
    index = {c: i for i, c in enumerate(net.complexes)}
    return [(index[rx.reactant], index[rx.product]) for rx in net.reactions]


def stoich_structure(net: Network) -> StoichStructure:
    """Stoichiometric subspace, linkage classes, weak reversibility and deficiency."""
    gamma = net.stoich_matrix()
    dim = rank(gamma)
    edges = complex_edges(net)
    p = net.p
    linkage = weak_components(p, edges)
    terminal = terminal_components(p, edges)
    owner = {v: i for i, comp in enumerate(linkage) for v in comp}
    # Weakly reversible iff every reaction lies inside a strong component,
    # equivalently every linkage class is itself a single terminal class.
    terminal_counts = [0] * len(linkage)
    for comp in terminal:
        terminal_counts[owner[comp[0]]] += 1
    weakly_reversible = all(
        any(set(comp) == set(lc) for comp in terminal) for lc in linkage
    )
    lc_defs = []
    for lc in linkage:
        members = set(lc)
        vecs = [rx.vector for rx, (u, _) in zip(net.reactions, edges) if u in members]
        lc_defs.append(len(lc) - 1 - rank(vecs))
    deficiency = p - len(linkage) - dim
    return StoichStructure(
        stoich_matrix=gamma,
        subspace_dim=dim,
        complexes=net.complexes,
        linkage_classes=tuple(linkage),
        terminal_strong_linkage_classes=tuple(terminal),
        weakly_reversible=weakly_reversible,
        deficiency=deficiency,
        linkage_deficiencies=tuple(lc_defs),
        terminal_counts=tuple(terminal_counts),
    )


@dataclass(frozen=True)
class Consistency:
    """Outcome of the positive-dependency test.

    Attributes:
        consistent: Whether some strictly positive ``lam`` has ``Gamma lam = 0``.
        certificate: Such a ``lam`` in exact rationals, when consistent.
        method: ``"two-vector"`` or ``"lp"``.
    """

    consistent: bool
    certificate: Optional[tuple[Fraction, ...]]
    method: str

    def __bool__(self) -> bool:
        return self.consistent


def negative_multiple(u: Sequence[int], v: Sequence[int]) -> Optional[Fraction]:
    """Return ``lam > 0`` with ``u = -lam * v``, or ``None`` if no such scalar exists."""
    lam: Optional[Fraction] = None
    for a, b in zip(u, v):
        if b == 0:
            if a != 0:
                return None
            continue
        ratio = Fraction(-a, b)
        if lam is None:
            lam = ratio
        elif ratio != lam:
            return None
    if lam is None or lam <= 0:
        return None
    return lam


def parallel_multiple(u: Sequence[int], v: Sequence[int]) -> Optional[Fraction]:
    """Return nonzero ``c`` with ``u = c * v`` (either sign), else ``None``."""
    c: Optional[Fraction] = None
    for a, b in zip(u, v):
        if b == 0:
            if a != 0:
                return None
            continue
        ratio = Fraction(a, b)
        if c is None:
            c = ratio
        elif ratio != c:
            return None
    if c is None or c == 0:
        return None
    return c


def is_consistent(net: Network) -> Consistency:
    """Decide whether the reaction vectors admit a strictly positive dependency.

    Two reactions use the negative-multiple test; otherwise an exact phase-one
    simplex decides feasibility of ``Gamma lam = 0`` with every ``lam_k >= 1``
    (strict positivity is scale-invariant, so the normalisation loses nothing).
    """
    vecs = [rx.vector for rx in net.reactions]
    if net.r == 1:
        return Consistency(False, None, "two-vector")
    if net.r == 2:
        lam = negative_multiple(vecs[0], vecs[1])
        if lam is None:
            return Consistency(False, None, "two-vector")
        return Consistency(True, (Fraction(1), lam), "two-vector")
    gamma = net.stoich_matrix()
    shift = [-sum(row) for row in gamma]
    mu = feasible_nonnegative(gamma, shift)
    if mu is None:
        return Consistency(False, None, "lp")
    return Consistency(True, tuple(1 + m for m in mu), "lp")


# ---------------------------------------------------------------------------
# Restriction and embedded networks


def restrict_reactions(reactions: Sequence[Reaction], keep_species: Iterable[int]) -> tuple[Reaction, ...]:
    """Zero the coefficients of species outside ``keep_species``.

    Reactions that become trivial are dropped and duplicates are merged, keeping
    the first occurrence. Coordinates keep their original length.
    """
    keep = set(keep_species)
    out: dict[Reaction, None] = {}
    for rx in reactions:
        a = tuple(v if i in keep else 0 for i, v in enumerate(rx.reactant.coeffs))
        b = tuple(v if i in keep else 0 for i, v in enumerate(rx.product.coeffs))
        if a != b:
            out.setdefault(Reaction.of(a, b))
    return tuple(out)


@dataclass(frozen=True)
class Embedding:
    """An embedded network together with how it was obtained.

    Attributes:
        network: The embedded network, or ``None`` when nothing survives.
        removed_reactions: Indices (into the host) of removed reactions.
        removed_species: Names of removed species (explicit removals only).
    """

    network: Optional[Network]
    removed_reactions: tuple[int, ...]
    removed_species: tuple[str, ...]

    @property
    def is_empty(self) -> bool:
        return self.network is None

    def describe(self) -> str:
        parts = []
        if self.removed_reactions:
            parts.append("remove reactions " + ",".join(f"r{i}" for i in self.removed_reactions))
        if self.removed_species:
            parts.append("remove species " + ",".join(self.removed_species))
        return "; ".join(parts) if parts else "identity"


def _tighten(species: Sequence[str], reactions: Sequence[Reaction]) -> Network:
    used = [i for i in range(len(species)) if any(rx.reactant[i] or rx.product[i] for rx in reactions)]
    rxs = tuple(
        Reaction.of(tuple(rx.reactant[i] for i in used), tuple(rx.product[i] for i in used)) for rx in reactions
    )
    return Network(tuple(species[i] for i in used), rxs)


def embedded_network(net: Network, remove_reactions: Iterable[int] = (), remove_species: Iterable[str | int] = ()) -> Embedding:
    """Remove reactions, then restrict to the remaining species, then tighten.

    Args:
        net: Host network.
        remove_reactions: Reaction indices to delete.
        remove_species: Species names or indices to delete.

    Returns:
        The embedding; its ``network`` is ``None`` if no reaction survives.
    """
    rr = tuple(sorted(set(remove_reactions)))
    idx = []
    for sp in remove_species:
        idx.append(sp if isinstance(sp, int) else net.species.index(sp))
    rs = tuple(sorted(set(idx)))
    for i in rr:
        if not 0 <= i < net.r:
            raise IndexError(f"no reaction {i}")
    kept = [rx for i, rx in enumerate(net.reactions) if i not in rr]
    keep_sp = [i for i in range(net.s) if i not in rs]
    restricted = restrict_reactions(kept, keep_sp)
    names = tuple(net.species[i] for i in rs)
    if not restricted:
        return Embedding(None, rr, names)
    return Embedding(_tighten(net.species, restricted), rr, names)


def network_key(net: Network) -> tuple:
    """Identity of a network as a species-labelled reaction set (order-free)."""
    named = []
    for rx in net.reactions:
        a = tuple(sorted((net.species[i], v) for i, v in enumerate(rx.reactant.coeffs) if v))
        b = tuple(sorted((net.species[i], v) for i, v in enumerate(rx.product.coeffs) if v))
        named.append((a, b))
    return tuple(sorted(named))


def enumerate_embedded(net: Network) -> Iterator[Embedding]:
    """Yield every proper, nonempty embedded network once.

    Removal sets are visited by increasing size (reactions first, then
    species), so the first description seen for a network is a smallest one.
    """
    own = network_key(net)
    seen = {own}
    for k_sp in range(net.s):
        for rs in combinations(range(net.s), k_sp):
            for k_rx in range(net.r):
                for rr in combinations(range(net.r), k_rx):
                    emb = embedded_network(net, rr, rs)
                    if emb.network is None:
                        continue
                    key = network_key(emb.network)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield emb


def canonical_rows(s: int, rows: Iterable[tuple[tuple[int, ...], tuple[int, ...]]]) -> tuple:
    """Canonical form of raw ``(reactant, product)`` rows; see ``canonical_form``."""
    rows = list(rows)
    best = None
    for perm in permutations(range(s)):
        key = tuple(sorted((tuple(a[p] for p in perm), tuple(b[p] for p in perm)) for a, b in rows))
        if best is None or key < best:
            best = key
    return (s, best)


def canonical_form(net: Network) -> tuple:
    """Smallest sorted reaction list over all species permutations.

    Two networks share a canonical form exactly when they agree up to renaming
    species and reordering reactions.
    """
    return canonical_rows(net.s, ((rx.reactant.coeffs, rx.product.coeffs) for rx in net.reactions))


def network_from_canonical(form: tuple, species: Optional[Sequence[str]] = None) -> Network:
    s, rows = form
    return make_network(rows, species if species is not None else default_species_names(s))
