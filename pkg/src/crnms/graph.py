"""Tiny directed-graph helpers for complex graphs (a handful of nodes)."""

from __future__ import annotations

from typing import Iterable, Sequence


def weak_components(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Connected components of the underlying undirected graph.

    Components are listed by their smallest node, and each is sorted.
    """
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [tuple(groups[k]) for k in sorted(groups)]


def strong_components(n: int, edges: Sequence[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Strongly connected components via reachability closure.

    Quadratic in the node count, which is fine for complex graphs.
    """
    reach = [{v} for v in range(n)]
    succ: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        succ[u].add(v)
    for v in range(n):
        stack = list(succ[v])
        while stack:
            w = stack.pop()
            if w not in reach[v]:
                reach[v].add(w)
                stack.extend(succ[w])
    seen: set[int] = set()
    comps = []
    for v in range(n):
        if v in seen:
            continue
        comp = tuple(sorted(w for w in reach[v] if v in reach[w]))
        seen.update(comp)
        comps.append(comp)
    return comps


def terminal_components(n: int, edges: Sequence[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Strong components with no edge leaving them (sinks of the condensation)."""
    comps = strong_components(n, edges)
    owner = {v: i for i, comp in enumerate(comps) for v in comp}
    leaves = {owner[u] for u, v in edges if owner[u] != owner[v]}
    return [comp for i, comp in enumerate(comps) if i not in leaves]
