"""Hypothesis strategies for small networks."""

from __future__ import annotations

from math import gcd

from hypothesis import assume
from hypothesis import strategies as st

from crnms.network import Network, Reaction, default_species_names


def complexes(s: int, max_mol: int = 4):
    return st.lists(st.integers(0, max_mol), min_size=s, max_size=s).filter(lambda c: sum(c) <= max_mol).map(tuple)


@st.composite
def networks(draw, min_s=1, max_s=3, min_r=1, max_r=4, max_mol=4):
    s = draw(st.integers(min_s, max_s))
    r = draw(st.integers(min_r, max_r))
    rows = draw(
        st.lists(
            st.tuples(complexes(s, max_mol), complexes(s, max_mol)).filter(lambda ab: ab[0] != ab[1]),
            min_size=r,
            max_size=r,
            unique=True,
        )
    )
    used = [i for i in range(s) if any(a[i] or b[i] for a, b in rows)]
    assume(used)
    rxs = tuple(Reaction.of(tuple(a[i] for i in used), tuple(b[i] for i in used)) for a, b in rows)
    assume(len(set(rxs)) == len(rxs))
    return Network(default_species_names(len(used)), rxs)


@st.composite
def two_reaction_networks(draw, s=2, max_mol=6, consistent=True):
    """Two reactions over exactly ``s`` species, vectors negative multiples
    when ``consistent``. Built constructively so nothing is filtered."""
    y = list(draw(complexes(s, max_mol)))
    yp = list(draw(complexes(s, max_mol)))
    if yp == y:
        yp[0] += 1
    yt = list(draw(complexes(s, max_mol)))
    if consistent:
        v = [b - a for a, b in zip(y, yp)]
        g = 0
        for x in v:
            g = gcd(g, x)
        k = draw(st.integers(1, 3))
        w = [-k * x // g for x in v]
        yt = [max(a, -x) for a, x in zip(yt, w)]
        ytp = [a + x for a, x in zip(yt, w)]
    else:
        ytp = list(draw(complexes(s, max_mol)))
        if ytp == yt:
            ytp[0] += 1
    for i in range(s):
        if not (y[i] or yp[i] or yt[i] or ytp[i]):
            yt[i] += 1
            ytp[i] += 1
    if (yt, ytp) == (y, yp):
        yt[0] += 1
        ytp[0] += 1
    rows = [(tuple(y), tuple(yp)), (tuple(yt), tuple(ytp))]
    return Network(default_species_names(s), tuple(Reaction.of(a, b) for a, b in rows))
