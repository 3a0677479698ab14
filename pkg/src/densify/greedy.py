"""Linear-time factor-2 decomposition: min-degree peeling plus prefix segmentation."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Chain, Graph

__all__ = ["PeelOrder", "peel", "maximal_average_intervals", "greedy_ld"]


@dataclass(frozen=True)
class PeelOrder:
    """Result of repeatedly deleting a minimum-degree vertex.

    Attributes:
        order: vertices in reverse removal order (last removed first).
        din: ``din[k]`` counts the neighbours of ``order[k]`` that come
            earlier in ``order``.
        removal_degrees: ``removal_degrees[v]`` is the degree of vertex
            ``v`` at the moment it was deleted.
    """

    order: tuple[int, ...]
    din: tuple[int, ...]
    removal_degrees: tuple[int, ...]

    @property
    def removal_order(self) -> tuple[int, ...]:
        return self.order[::-1]


def peel(graph: Graph) -> PeelOrder:
    """Peel minimum-degree vertices, smallest id first among ties.

    Vertices sit in per-degree buckets; a bucket is a heap so the smallest
    id is popped first. Stale heap entries are skipped lazily. The minimum
    degree can drop by at most one per deletion, which keeps the bucket
    pointer scan linear overall.
    """
    n = graph.n
    adj = graph.adjacency
    deg = [len(a) for a in adj]
    buckets: list[list[int]] = [[] for _ in range(max(deg, default=0) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    for b in buckets:
        heapq.heapify(b)

    removed = [False] * n
    removal_degrees = [0] * n
    removal: list[int] = []
    d = 0
    for _ in range(n):
        while True:
            b = buckets[d]
            while b and (removed[b[0]] or deg[b[0]] != d):
                heapq.heappop(b)
            if b:
                break
            d += 1
        v = heapq.heappop(buckets[d])
        removed[v] = True
        removal_degrees[v] = deg[v]
        removal.append(v)
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(buckets[deg[w]], w)
        d = max(d - 1, 0)

    order = removal[::-1]
    position = [0] * n
    for k, v in enumerate(order):
        position[v] = k
    din = tuple(sum(1 for w in adj[v] if position[w] < k) for k, v in enumerate(order))
    return PeelOrder(tuple(order), din, tuple(removal_degrees))


def maximal_average_intervals(y: Sequence[int]) -> list[int]:
    """Split ``y`` into consecutive blocks of greatest average.

    Returns the block end points ``j_1 < ... < j_r = len(y)``. Starting at
    ``j_0 = 0`` each block ``y[j_p:j_{p+1}]`` is the prefix of ``y[j_p:]``
    with the highest mean, the longest such prefix on ties; block means come
    out strictly decreasing.

    Pools adjacent violators from the right end, so the whole thing is
    linear: a block absorbs its right neighbour whenever that neighbour's
    mean is at least its own.

    >>> maximal_average_intervals([0, 1, 2, 3, 2, 1])
    [5, 6]
    """
    # stack of (start, sum, length); the top is the leftmost block
    stack: list[tuple[int, int, int]] = []
    for k in range(len(y) - 1, -1, -1):
        total, length = y[k], 1
        while stack and stack[-1][1] * length >= total * stack[-1][2]:
            _, s2, l2 = stack.pop()
            total += s2
            length += l2
        stack.append((k, total, length))
    return [start + length for start, _, length in reversed(stack)]


def block_averages(y: Sequence[int], breakpoints: Sequence[int]) -> list[Fraction]:
    out, j = [], 0
    for i in breakpoints:
        out.append(Fraction(sum(y[j:i]), i - j))
        j = i
    return out


def greedy_ld(graph: Graph) -> Chain:
    """Approximate locally-dense decomposition along the peeling order.

    Each chain set is a prefix of ``peel(graph).order``; the cut points are
    the maximal-average blocks of ``din``. Block averages equal the outer
    densities of consecutive prefixes, which is checked.
    """
    if graph.n == 0:
        return Chain((frozenset(),), (), "greedy")
    po = peel(graph)
    cuts = maximal_average_intervals(po.din)
    chain = Chain.from_sets(graph, (po.order[:i] for i in cuts), "greedy")
    if list(chain.step_densities) != block_averages(po.din, cuts):
        raise AssertionError("block averages disagree with prefix outer densities")
    return chain
