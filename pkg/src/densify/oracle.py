"""Exhaustive reference computations for small graphs.

Everything here is exponential in ``n`` and meant for tests and spot
checks only. Vertex sets are handled as bitmasks internally.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Chain, Graph

__all__ = [
    "OracleRefused",
    "brute_densest",
    "brute_locally_dense_chain",
    "is_locally_dense",
    "subset_edge_counts",
]

DENSEST_LIMIT = 20
CHAIN_LIMIT = 14


class OracleRefused(ValueError):
    """The graph is too large for exhaustive enumeration."""


def _check(graph: Graph, limit: int) -> None:
    if graph.n > limit:
        raise OracleRefused(f"exhaustive search refused for n={graph.n} > {limit}")


def subset_edge_counts(graph: Graph) -> list[int]:
    """``counts[mask]`` = number of edges inside the vertex set ``mask``."""
    n = graph.n
    nbr = [sum(1 << w for w in graph.adjacency[v]) for v in range(n)]
    counts = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        counts[mask] = counts[rest] + bin(nbr[low] & rest).count("1")
    return counts


def _mask(vertices) -> int:
    return sum(1 << v for v in vertices)


def _unmask(mask: int) -> frozenset[int]:
    return frozenset(v for v in range(mask.bit_length()) if mask >> v & 1)


def brute_densest(graph: Graph) -> tuple[frozenset[int], Fraction]:
    """Densest vertex set by exhaustive search, largest one on ties."""
    _check(graph, DENSEST_LIMIT)
    if graph.n == 0:
        return frozenset(), Fraction(0)
    counts = subset_edge_counts(graph)
    best_mask, best_e, best_size = 0, -1, 1
    for mask in range(1, 1 << graph.n):
        e, size = counts[mask], bin(mask).count("1")
        lhs, rhs = e * best_size, best_e * size
        if lhs > rhs or (lhs == rhs and size > best_size):
            best_mask, best_e, best_size = mask, e, size
    return _unmask(best_mask), Fraction(best_e, best_size)


def brute_locally_dense_chain(graph: Graph) -> Chain:
    """Chain built by repeatedly taking the densest proper extension.

    ``B_i`` maximizes ``d(W, B_{i-1})`` over all ``W`` strictly containing
    ``B_{i-1}``, the largest ``W`` on ties.
    """
    _check(graph, CHAIN_LIMIT)
    n = graph.n
    if n == 0:
        return Chain((frozenset(),), (), "exact")
    counts = subset_edge_counts(graph)
    full = (1 << n) - 1
    sets = []
    prev = 0
    while prev != full:
        rest = full & ~prev
        best, best_num, best_den = 0, -1, 1
        sub = rest
        while sub:
            w = prev | sub
            num = counts[w] - counts[prev]
            den = bin(sub).count("1")
            lhs, rhs = num * best_den, best_num * den
            if lhs > rhs or (lhs == rhs and den > best_den):
                best, best_num, best_den = w, num, den
            sub = (sub - 1) & rest
        sets.append(_unmask(best))
        prev = best
    return Chain.from_sets(graph, sets, "exact")


def is_locally_dense(graph: Graph, W) -> bool:
    """True when no nonempty ``X <= W`` and nonempty ``Y`` outside ``W`` have
    ``d(X, W \\ X) <= d(Y, W)``.

    ``X = W`` is allowed, in which case ``d(W, {})`` is the plain density.
    """
    _check(graph, CHAIN_LIMIT)
    n = graph.n
    counts = subset_edge_counts(graph)
    w = _mask(W)
    outside = ((1 << n) - 1) & ~w
    if not w or not outside:
        return True
    # weakest inside set: min over X of (E(W) - E(W \ X)) / |X|
    lo_num, lo_den = None, 1
    sub = w
    while sub:
        num = counts[w] - counts[w & ~sub]
        den = bin(sub).count("1")
        if lo_num is None or num * lo_den < lo_num * den:
            lo_num, lo_den = num, den
        sub = (sub - 1) & w
    # strongest outside set: max over Y of (E(W | Y) - E(W)) / |Y|
    hi_num, hi_den = None, 1
    sub = outside
    while sub:
        num = counts[w | sub] - counts[w]
        den = bin(sub).count("1")
        if hi_num is None or num * hi_den > hi_num * den:
            hi_num, hi_den = num, den
        sub = (sub - 1) & outside
    return lo_num * hi_den > hi_num * lo_den
