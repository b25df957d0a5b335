"""Exhaustive enumeration of small networks by shape, with classification."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import gcd
from typing import Iterable, Iterator, Optional

from .classify import Verdict, classify
from .network import Network, Reaction, canonical_rows, default_species_names

SHAPES = ("one-species", "one-reaction", "two-irrev", "one-rev", "rev-irrev", "two-rev")
"""Enumerable shapes. ``one-rev`` is a single reversible pair."""


@dataclass(frozen=True)
class Bounds:
    """Enumeration limits.

    Attributes:
        shape: One of ``SHAPES``.
        max_molecularity: Largest complex molecularity.
        max_reactions: Largest reaction count (one-species shape only).
        max_species: Largest species count (multi-species shapes).
        consistent_only: Skip networks whose reaction vectors admit no positive
            dependency (they have no positive steady state at all).
    """

    shape: str
    max_molecularity: int
    max_reactions: int = 4
    max_species: int = 3
    consistent_only: bool = False

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}; expected one of {', '.join(SHAPES)}")
        if self.max_molecularity < 1:
            raise ValueError("max_molecularity must be at least 1")


def complexes(s: int, max_molecularity: int) -> list[tuple[int, ...]]:
    """All complexes over ``s`` species with molecularity at most the bound."""
    out = []
    for total in range(max_molecularity + 1):
        for combo in combinations_with_replacement(range(s), total):
            v = [0] * s
            for i in combo:
                v[i] += 1
            out.append(tuple(v))
    return sorted(set(out))


def _direction(v: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Primitive direction up to sign, plus the sign."""
    g = 0
    for x in v:
        g = gcd(g, x)
    prim = tuple(x // g for x in v)
    lead = next(x for x in prim if x)
    sign = 1 if lead > 0 else -1
    return tuple(sign * x for x in prim), sign


Row = tuple[tuple[int, ...], tuple[int, ...]]


def _vec(row: Row) -> tuple[int, ...]:
    return tuple(y - x for x, y in zip(*row))


def _reactions(s: int, m: int) -> list[Row]:
    cs = complexes(s, m)
    return [(a, b) for a in cs for b in cs if a != b]


def _tight(rows: Iterable[Row], s: int) -> bool:
    used = [False] * s
    for a, b in rows:
        for i in range(s):
            if a[i] or b[i]:
                used[i] = True
    return all(used)


def _opposite_pairs(rows: list[Row]) -> Iterator[tuple[Row, Row]]:
    """Pairs of reactions whose vectors are negative multiples."""
    groups: dict[tuple[int, ...], tuple[list[Row], list[Row]]] = {}
    for row in rows:
        d, sign = _direction(_vec(row))
        plus, minus = groups.setdefault(d, ([], []))
        (plus if sign > 0 else minus).append(row)
    for plus, minus in groups.values():
        yield from product(plus, minus)


def _raw_networks(b: Bounds, s: int) -> Iterator[tuple[Row, ...]]:
    rows = _reactions(s, b.max_molecularity)
    pairs = [((x, y), (y, x)) for x, y in rows if x < y]
    if b.shape == "one-species":
        for k in range(1, b.max_reactions + 1):
            yield from combinations(rows, k)
    elif b.shape == "one-reaction":
        if not b.consistent_only:
            for row in rows:
                yield (row,)
    elif b.shape == "one-rev":
        yield from pairs
    elif b.shape == "two-irrev":
        source = _opposite_pairs(rows) if b.consistent_only else combinations(rows, 2)
        for r1, r2 in source:
            if r1 != (r2[1], r2[0]):
                yield (r1, r2)
    elif b.shape == "rev-irrev":
        for (p, q), other in product(pairs, rows):
            if other in (p, q):
                continue
            if b.consistent_only and _direction(_vec(p))[0] != _direction(_vec(other))[0]:
                continue
            yield (p, q, other)
    elif b.shape == "two-rev":
        # Two reversible pairs are always consistent.
        for (p, q), (u, w) in combinations(pairs, 2):
            yield (p, q, u, w)


def species_range(b: Bounds) -> range:
    if b.shape == "one-species":
        return range(1, 2)
    return range(1, b.max_species + 1)


def enumerate_networks(b: Bounds) -> Iterator[Network]:
    """Every network of the shape within bounds, once up to species relabelling.

    Networks are tight: each species occurs in some complex. When
    ``consistent_only`` is set, inconsistent ones are skipped.
    """
    seen: set = set()
    for s in species_range(b):
        names = default_species_names(s)
        for rows in _raw_networks(b, s):
            if not _tight(rows, s):
                continue
            key = canonical_rows(s, rows)
            if key in seen:
                continue
            seen.add(key)
            yield Network(names, tuple(Reaction.of(x, y) for x, y in rows))


@dataclass
class Summary:
    """Counts gathered while streaming a catalogue."""

    total: int = 0
    multistationary: int = 0
    nondegenerate: int = 0
    multistable: int = 0
    by_case: Counter = field(default_factory=Counter)

    def add(self, v: Verdict) -> None:
        self.total += 1
        self.multistationary += v.multistationary is True
        self.nondegenerate += v.nondegenerately_multistationary is True
        self.multistable += v.multistable is True
        self.by_case[v.case_label.value] += 1

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "multistationary": self.multistationary,
            "nondegenerately_multistationary": self.nondegenerate,
            "multistable": self.multistable,
            "by_case": dict(sorted(self.by_case.items())),
        }


def _classify_one(net: Network) -> tuple[Network, Verdict]:
    return net, classify(net)


def enumerate_and_classify(b: Bounds, workers: Optional[int] = None) -> Iterator[tuple[Network, Verdict]]:
    """Stream ``(network, verdict)`` in deterministic enumeration order.

    Args:
        b: Enumeration bounds.
        workers: Process count for parallel classification; ``None`` or 1
            classifies in this process.
    """
    nets = enumerate_networks(b)
    if not workers or workers <= 1:
        for net in nets:
            yield net, classify(net)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_classify_one, nets, chunksize=256)
