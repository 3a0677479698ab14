"""Exact locally-dense decomposition through anchored min-cut problems."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .graph import Chain, DomainError, Graph, outer_density
from .mincut import FlowNetwork, min_cut

__all__ = ["AlphaQuery", "build_cut_network", "compact_graph", "exact_ld"]


@dataclass(frozen=True)
class AlphaQuery:
    """Penalty ``alpha`` with anchor ``X`` inside universe ``Y``.

    Only vertices of ``Y`` are looked at, and every candidate set contains
    ``X``. ``universe=None`` means the whole graph.
    """

    alpha: Fraction
    anchor: frozenset[int] = frozenset()
    universe: frozenset[int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "anchor", frozenset(self.anchor))
        if self.universe is not None:
            object.__setattr__(self, "universe", frozenset(self.universe))
        if self.alpha < 0:
            raise DomainError("alpha must be nonnegative")

    def resolve(self, graph: Graph) -> tuple[frozenset[int], frozenset[int]]:
        Y = graph.vertices() if self.universe is None else self.universe
        if not self.anchor <= Y:
            raise DomainError("anchor must lie inside the universe")
        return self.anchor, Y


def build_cut_network(graph: Graph, query: AlphaQuery) -> FlowNetwork:
    """Network whose maximal min-cut source side is the best extension of the anchor.

    Nodes ``0..r-1`` are the vertices of ``Y \\ X`` in ascending id order
    (``net.node_labels`` maps them back), followed by the source ``r`` and
    the sink ``r + 1``. With ``alpha = p/q`` every weight is multiplied by
    ``q``: free edges get capacity ``q`` both ways, each vertex ``y`` gets
    ``2p`` towards the sink and ``q * (deg(y; Y \\ X) + 2 deg(y; X))`` from
    the source.
    """
    X, Y = query.resolve(graph)
    free = sorted(Y - X)
    pos = {v: i for i, v in enumerate(free)}
    r = len(free)
    s, t = r, r + 1
    p, q = query.alpha.numerator, query.alpha.denominator
    net = FlowNetwork(r + 2, s, t, node_labels=free)
    adj = graph.adjacency
    for i, y in enumerate(free):
        inner = anchored = 0
        for w in adj[y]:
            j = pos.get(w)
            if j is not None:
                inner += 1
                if i < j:
                    net.add_edge(i, j, q)
            elif w in X:
                anchored += 1
        net.add_arc(s, i, q * (inner + 2 * anchored))
        net.add_arc(i, t, 2 * p)
    return net


def compact_graph(graph: Graph, query: AlphaQuery) -> frozenset[int]:
    """Largest ``W`` with ``X <= W <= Y`` maximizing ``|E(W)| - alpha |W|``."""
    X, _ = query.resolve(graph)
    net = build_cut_network(graph, query)
    _, side = min_cut(net)
    labels = net.node_labels
    return X | frozenset(labels[i] for i in side if i != net.source)


def exact_ld(graph: Graph, stats: Counter | None = None) -> Chain:
    """Exact locally-dense decomposition.

    Starting from the pair ``(empty, V)``, each pair ``(X, Y)`` of known
    consecutive candidates is probed with ``alpha = d(Y, X) + 1/n**2``; a
    result strictly between them is a new locally-dense set and splits the
    pair in two, otherwise the pair is final. ``n`` is always the vertex
    count of the whole graph.

    If ``stats`` is given, ``stats["mincut_calls"]`` is incremented per cut.
    """
    n = graph.n
    everything = graph.vertices()
    if n == 0:
        return Chain((frozenset(),), (), "exact")
    bump = Fraction(1, n * n)
    found: list[frozenset[int]] = []
    work: list[tuple[frozenset[int], frozenset[int]]] = [(frozenset(), everything)]
    while work:
        X, Y = work.pop()
        alpha = outer_density(graph, Y, X) + bump
        Z = compact_graph(graph, AlphaQuery(alpha, X, Y))
        if stats is not None:
            stats["mincut_calls"] += 1
        if Z != X:
            assert X < Z < Y, "probe escaped its bracket"
            found.append(Z)
            work.append((Z, Y))
            work.append((X, Z))
    return Chain.from_sets(graph, found, "exact")

