import json
from fractions import Fraction

import pytest
from hypothesis import given

from crnms.network import (
    NetworkError,
    ParseError,
    Reaction,
    embedded_network,
    enumerate_embedded,
    is_consistent,
    make_network,
    network_from_dict,
    network_key,
    network_to_dict,
    parse_network,
    render_network,
    restrict_reactions,
    stoich_structure,
)
from oracles import consistent_oracle, rank_oracle, structure_oracle
from strategies import networks


def keyset(text):
    return network_key(parse_network(text))


# parsing ---------------------------------------------------------------------


def test_parse_single_reaction():
    net = parse_network("A + 2B -> 3B")
    assert net.species == ("A", "B")
    (rx,) = net.reactions
    assert rx.reactant.coeffs == (1, 2) and rx.product.coeffs == (0, 3)


def test_parse_reversible_expands_forward_first():
    net = parse_network("3A + B <-> 4A")
    assert [(rx.reactant.coeffs, rx.product.coeffs) for rx in net.reactions] == [((3, 1), (4, 0)), ((4, 0), (3, 1))]
    assert net.reversible_pairs == (1, 0)


def test_parse_left_arrow_and_zero():
    net = parse_network("0 <- A  # decay\n\nA -> 2A; 2A <-> 3A")
    assert net.species == ("A",)
    assert [(rx.reactant.coeffs, rx.product.coeffs) for rx in net.reactions] == [
        ((1,), (0,)),
        ((1,), (2,)),
        ((2,), (3,)),
        ((3,), (2,)),
    ]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("A -> A", "trivial"),
        ("A -> B\nA -> B", "duplicate"),
        ("A -> B\nB <- A", "duplicate"),
        ("-1A -> B", "negative"),
        ("1.5A -> B", "non-integer"),
        ("A + -> B", "expected"),
        ("A B", "arrow"),
        ("A -> B -> C", "more than one"),
        ("", "no reactions"),
        ("0A -> B", "at least 1"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_network(text)
    assert fragment in exc.value.message
    assert exc.value.line >= 1 and exc.value.col >= 1


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_network("A -> B\nC -> C")
    assert exc.value.line == 2


def test_network_rejects_untight_species():
    with pytest.raises(NetworkError):
        make_network([((1, 0), (2, 0))])


@given(networks())
def test_render_round_trip(net):
    again = parse_network(render_network(net))
    assert network_key(again) == network_key(net)
    assert network_from_dict(json.loads(json.dumps(network_to_dict(net)))) == net


def test_json_shape():
    d = network_to_dict(parse_network("A + 2B -> 3B\nB <-> A"))
    assert d["species"] == ["A", "B"]
    assert d["reactions"][0] == {"reactant": {"A": 1, "B": 2}, "product": {"B": 3}, "reversible_pair": None}
    assert d["reactions"][1]["reversible_pair"] == 2


# structure -------------------------------------------------------------------


def test_structure_single_reaction():
    st = stoich_structure(parse_network("A + B -> 3A + C"))
    assert (st.subspace_dim, len(st.complexes), len(st.linkage_classes), st.deficiency) == (1, 2, 1, 0)


def test_structure_deficiency_one():
    st = stoich_structure(parse_network("0 <-> A\n2A -> 3A"))
    assert (len(st.complexes), len(st.linkage_classes), st.subspace_dim, st.deficiency) == (4, 2, 1, 1)


def test_structure_weakly_reversible_deficiency_zero():
    st = stoich_structure(parse_network("A + B <-> C\n2A <-> B"))
    assert st.subspace_dim == 2 and st.weakly_reversible and st.deficiency == 0
    assert st.stoich_matrix == ((-1, 1, -2, 2), (-1, 1, 1, -1), (1, -1, 0, 0))


@given(networks())
def test_structure_matches_oracle(net):
    rows = [(rx.reactant.coeffs, rx.product.coeffs) for rx in net.reactions]
    st = stoich_structure(net)
    p, l, delta, wr = structure_oracle(rows)
    assert (len(st.complexes), len(st.linkage_classes), st.deficiency, st.weakly_reversible) == (p, l, delta, wr)
    assert st.deficiency >= 0
    assert st.subspace_dim <= min(net.s, net.r)
    assert st.subspace_dim == rank_oracle([list(c) for c in st.stoich_matrix])
    for lc in st.linkage_classes:
        assert any(set(t) <= set(lc) for t in st.terminal_strong_linkage_classes)


# consistency -----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [
        ("A + D -> B + D\n2A + D -> C + D", False),
        ("A -> B\nB -> 2A", False),
        ("B -> A\nA + 2B -> 3B", True),
    ],
)
def test_consistency_examples(text, expected):
    assert bool(is_consistent(parse_network(text))) is expected


def test_consistency_certificate_example():
    c = is_consistent(parse_network("B -> A\nA + 2B -> 3B"))
    assert c.certificate == (1, 1)


@given(networks())
def test_consistency_matches_lp_and_certifies(net):
    c = is_consistent(net)
    assert c.consistent == consistent_oracle([rx.vector for rx in net.reactions])
    if c.consistent:
        assert all(l > 0 for l in c.certificate)
        for i in range(net.s):
            assert sum(l * rx.vector[i] for l, rx in zip(c.certificate, net.reactions)) == 0


@given(networks(min_r=2, max_r=2))
def test_two_reactions_consistent_iff_negative_multiple(net):
    u, v = (rx.vector for rx in net.reactions)
    cross_zero = all(u[i] * v[j] == u[j] * v[i] for i in range(net.s) for j in range(net.s))
    opposite = sum(a * b for a, b in zip(u, v)) < 0
    assert bool(is_consistent(net)) == (cross_zero and opposite)


# restriction and embedding ---------------------------------------------------


def test_restrict_examples():
    (rx,) = restrict_reactions([Reaction.of((1, 1, 0), (1, 0, 1))], [0, 2])
    assert (rx.reactant.coeffs, rx.product.coeffs) == ((1, 0, 0), (1, 0, 1))
    (rx,) = restrict_reactions([Reaction.of((1, 1), (0, 2))], [0])
    assert (rx.reactant.coeffs, rx.product.coeffs) == ((1, 0), (0, 0))
    assert restrict_reactions([Reaction.of((1, 1), (1, 2))], [0]) == ()


@given(networks())
def test_restrict_idempotent(net):
    keep = list(range(0, net.s, 2))
    once = restrict_reactions(net.reactions, keep)
    assert restrict_reactions(once, keep) == once


def test_embedded_examples():
    g = parse_network("A -> 0\nA -> 2A\n2A <-> 3A\n3A -> A")
    emb = embedded_network(g, remove_reactions=[1])
    assert emb.network.r == 4
    h = parse_network("B <-> A + 2B\n3A + B -> 2A")
    assert network_key(embedded_network(h, remove_species=["B"]).network) == keyset("0 <-> A\n3A -> 2A")
    assert network_key(embedded_network(h, remove_species=["A"]).network) == keyset("B -> 0\nB <-> 2B")


def test_embedded_empty_result_flagged():
    emb = embedded_network(parse_network("A + B -> A + 2B"), remove_species=["B"])
    assert emb.is_empty


@given(networks(min_s=2))
def test_embedded_composition(net):
    first = embedded_network(net, remove_reactions=[0])
    if first.network is None:
        return
    sp = net.species[-1]
    if sp not in first.network.species:
        return
    second = embedded_network(first.network, remove_species=[sp])
    direct = embedded_network(net, remove_reactions=[0], remove_species=[sp])
    assert (second.network is None) == (direct.network is None)
    if direct.network is not None:
        assert network_key(second.network) == network_key(direct.network)


def test_enumerate_embedded_examples():
    assert list(enumerate_embedded(parse_network("A -> 2A"))) == []
    g = parse_network("A -> 0\n2A -> 3A\n3A -> 2A")
    keys = {network_key(e.network) for e in enumerate_embedded(g)}
    assert keyset("A -> 0\n2A -> 3A") in keys


@given(networks(max_r=3))
def test_enumerate_embedded_proper_and_unique(net):
    own = network_key(net)
    keys = [network_key(e.network) for e in enumerate_embedded(net)]
    assert own not in keys
    assert len(keys) == len(set(keys))
    for e in enumerate_embedded(net):
        assert e.network.r <= net.r and e.network.s <= net.s
