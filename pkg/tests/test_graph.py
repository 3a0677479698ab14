import io
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from densify import (
    Chain,
    DomainError,
    Graph,
    ParseError,
    cross_edge_count,
    density,
    edge_count,
    load_edge_list,
    marginal_edge_count,
    outer_density,
)


def test_dedup_and_loops():
    g = load_edge_list("a b\nb c\nb c\na a")
    assert (g.n, g.m) == (3, 2)
    assert g.stats.duplicates_collapsed == 1
    assert g.stats.loops_dropped == 1
    assert g.stats.lines_read == 4


def test_first_appearance_ids(g1):
    assert g1.labels == ("a", "b", "c", "d", "e", "f")
    assert (g1.n, g1.m) == (6, 9)


def test_empty_input():
    g = load_edge_list(b"")
    assert (g.n, g.m) == (0, 0)


@pytest.mark.parametrize("source", [b"# c\nx y\n\n", io.BytesIO(b"x y\n"), io.StringIO("x y\r\n")])
def test_accepts_bytes_and_streams(source):
    g = load_edge_list(source)
    assert g.labels == ("x", "y") and g.m == 1


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as err:
        load_edge_list("a b\n# fine\na b c\n")
    assert err.value.lineno == 3


def test_adjacency_invariants(g2):
    assert all(list(a) == sorted(a) for a in g2.adjacency)
    assert sum(len(a) for a in g2.adjacency) == 2 * g2.m
    for u, nb in enumerate(g2.adjacency):
        assert u not in nb
        for w in nb:
            assert u in g2.adjacency[w]


@pytest.mark.parametrize(
    "fixture, members, expected",
    [
        ("g1", "abcd", Fraction(6, 4)),
        ("g1", "abcde", Fraction(8, 5)),
        ("g2", "abcde", Fraction(7, 5)),
        ("g1", "f", Fraction(0)),
    ],
)
def test_density_examples(request, fixture, members, expected):
    g = request.getfixturevalue(fixture)
    assert density(g, g.ids_of(members)) == expected


def test_density_whole_graph(g1, g2):
    assert density(g1, g1.vertices()) == Fraction(9, 6)
    assert density(g2, g2.vertices()) == Fraction(11, 8)


def test_density_empty_raises(g1):
    with pytest.raises(DomainError):
        density(g1, [])


def test_outer_density_examples(g1):
    assert outer_density(g1, g1.ids_of("abcde"), g1.ids_of("abcd")) == 2
    assert outer_density(g1, g1.vertices(), g1.ids_of("abcde")) == 1
    X = g1.ids_of("bef")
    assert outer_density(g1, X, set()) == density(g1, X)
    with pytest.raises(DomainError):
        outer_density(g1, g1.ids_of("ab"), g1.ids_of("abc"))


def test_marginal_and_cross(g1, g2):
    e, core = g1.ids_of("e"), g1.ids_of("abcd")
    assert cross_edge_count(g1, e, core) == 2
    assert marginal_edge_count(g1, e, core) == 2
    assert cross_edge_count(g1, set(), core) == 0
    assert marginal_edge_count(g1, set(), core) == 0
    X, Y = g2.ids_of("fgh"), g2.ids_of("abcde")
    assert cross_edge_count(g2, X, Y) == 1
    assert marginal_edge_count(g2, X, Y) == 4
    with pytest.raises(DomainError):
        cross_edge_count(g1, e, g1.ids_of("de"))


def _recount(g, X, Y):
    inner = sum(1 for u, w in g.edges() if u in X and w in X)
    cross = sum(1 for u, w in g.edges() if (u in X and w in Y) or (w in X and u in Y))
    return inner, cross


edge_lists = st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=40)


@settings(max_examples=150, deadline=None)
@given(edge_lists, st.sets(st.integers(0, 9)), st.sets(st.integers(0, 9)))
def test_marginal_identity(edges, X, Y):
    g = Graph.from_edges(10, edges)
    Y = Y - X
    inner, cross = _recount(g, X, Y)
    assert edge_count(g, X) == inner
    assert cross_edge_count(g, X, Y) == cross
    assert marginal_edge_count(g, X, Y) == inner + cross


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.sampled_from("pqrstuvw"), st.sampled_from("pqrstuvw")), min_size=1, max_size=30))
def test_reserialize_roundtrip(pairs):
    g = load_edge_list("".join(f"{u} {w}\n" for u, w in pairs))
    assert g.n == 0 or density(g, g.vertices()) == Fraction(g.m, g.n)
    h = load_edge_list(g.to_edge_list())
    # isolated vertices only arise from self-loops and are not re-emitted
    non_isolated = sum(1 for a in g.adjacency if a)
    assert (h.n, h.m) == (non_isolated, g.m)
    assert Counter(map(len, h.adjacency)) == Counter(len(a) for a in g.adjacency if a)


def test_canonical_json(g1):
    doc = g1.to_json()
    assert doc.startswith('{"n":6,"m":9,"labels":["a","b","c","d","e","f"],"edges":[[0,1],[0,2]')
    h = Graph.from_json(doc)
    assert h.adjacency == g1.adjacency and h.labels == g1.labels


def test_chain_validation(g1):
    chain = Chain.from_sets(g1, [g1.ids_of("abcde")], "exact")
    assert chain.sizes == [0, 5, 6]
    assert chain.step_densities == (Fraction(8, 5), Fraction(1))
    assert chain.levels(6) == [1, 1, 1, 1, 1, 2]
    with pytest.raises(AssertionError):
        # 6/4 then 2: not decreasing, so not acceptable for an exact chain
        Chain.from_sets(g1, [g1.ids_of("abcd"), g1.ids_of("abcde")], "exact")
    Chain.from_sets(g1, [g1.ids_of("abcd"), g1.ids_of("abcde")], "core")


def test_degenerate_chains():
    empty = Graph.from_edges(0, [])
    assert Chain.from_sets(empty, [], "exact").sets == (frozenset(),)
    edgeless = Graph.from_edges(3, [])
    chain = Chain.from_sets(edgeless, [], "exact")
    assert chain.sizes == [0, 3] and chain.step_densities == (0,)
