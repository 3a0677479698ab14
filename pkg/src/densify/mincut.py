"""Exact integer max-flow / min s-t cut via highest-label push-relabel.

Capacities are Python ints, so there is no overflow no matter how the caller
scales rational weights.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Sequence

__all__ = ["FlowNetwork", "min_cut", "max_flow"]


class FlowNetwork:
    """Directed network with integer capacities and a distinguished source/sink.

    Arcs are stored in pairs: arc ``e`` and its partner ``e ^ 1`` point in
    opposite directions. :meth:`add_arc` gives the partner capacity 0,
    :meth:`add_edge` gives both directions the same capacity, which is how an
    undirected edge is modelled.

    A network is consumed by one solve; the solvers work on copies of the
    capacity array so calling them twice is harmless but wasteful.
    """

    def __init__(
        self,
        n_nodes: int,
        source: int,
        sink: int,
        node_labels: Sequence[Hashable] | None = None,
    ):
        if not (0 <= source < n_nodes and 0 <= sink < n_nodes):
            raise ValueError("source and sink must be valid node indices")
        if source == sink:
            raise ValueError("source and sink must differ")
        self.n_nodes = n_nodes
        self.source = source
        self.sink = sink
        # maps node index -> caller's object (e.g. graph vertex id)
        self.node_labels = node_labels
        self.head: list[int] = []
        self.capacity: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n_nodes)]

    def _pair(self, u: int, v: int, c_uv: int, c_vu: int) -> int:
        if c_uv < 0 or c_vu < 0:
            raise ValueError("capacities must be nonnegative")
        if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
            raise ValueError(f"arc ({u}, {v}) out of range")
        e = len(self.head)
        self.head += [v, u]
        self.capacity += [int(c_uv), int(c_vu)]
        self.out[u].append(e)
        self.out[v].append(e + 1)
        return e

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        """Add a directed arc ``u -> v``; returns its arc id."""
        return self._pair(u, v, capacity, 0)

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        """Add an undirected edge as two opposite arcs of equal capacity."""
        return self._pair(u, v, capacity, capacity)

    def tail(self, e: int) -> int:
        return self.head[e ^ 1]

    def arcs(self) -> list[tuple[int, int, int]]:
        """All arcs with positive capacity as ``(u, v, capacity)``."""
        return [
            (self.head[e ^ 1], self.head[e], c)
            for e, c in enumerate(self.capacity)
            if c > 0
        ]

    def __repr__(self) -> str:
        return f"FlowNetwork(nodes={self.n_nodes}, arcs={len(self.head)})"


def _reverse_bfs(net: FlowNetwork, residual: list[int], target: int, blocked: int) -> list[int]:
    """Distance to ``target`` in the residual network, -1 if unreachable.

    ``blocked`` is never entered (the other terminal).
    """
    head, out = net.head, net.out
    dist = [-1] * net.n_nodes
    dist[target] = 0
    queue = deque([target])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for e in out[v]:
            u = head[e]
            # arc u -> v is e ^ 1
            if dist[u] < 0 and u != blocked and residual[e ^ 1] > 0:
                dist[u] = dv
                queue.append(u)
    return dist


def _preflow(net: FlowNetwork) -> tuple[list[int], list[int]]:
    """First phase of push-relabel: a maximum preflow.

    Returns the residual capacities and the excess per node; ``excess[sink]``
    is the max-flow value.
    """
    n = net.n_nodes
    s, t = net.source, net.sink
    head, out = net.head, net.out
    res = list(net.capacity)
    excess = [0] * n
    height = [0] * n
    current = [0] * n

    for e in out[s]:
        c = res[e]
        if c > 0:
            v = head[e]
            res[e] = 0
            res[e ^ 1] += c
            excess[v] += c
            excess[s] -= c

    active: list[list[int]] = [[] for _ in range(n + 1)]
    count = [0] * (n + 1)
    highest = 0

    def global_relabel() -> int:
        dist = _reverse_bfs(net, res, t, s)
        for lst in active:
            lst.clear()
        for h in range(n + 1):
            count[h] = 0
        top = 0
        for v in range(n):
            if v == s:
                continue
            h = dist[v] if dist[v] >= 0 else n
            height[v] = h
            current[v] = 0
            if h < n:
                count[h] += 1
                if excess[v] > 0 and v != t:
                    active[h].append(v)
                    top = max(top, h)
        return top

    height[s] = n
    highest = global_relabel()
    work = 0
    relabel_budget = 6 * n + sum(len(o) for o in out)

    while True:
        while highest >= 0 and not active[highest]:
            highest -= 1
        if highest < 0:
            break
        v = active[highest].pop()
        h = height[v]
        if h != highest or excess[v] <= 0:
            continue
        arcs = out[v]
        i = current[v]
        ex = excess[v]
        while ex > 0:
            if i == len(arcs):
                # relabel
                work += len(arcs) + 12
                new_h = 2 * n
                for e in arcs:
                    if res[e] > 0:
                        hw = height[head[e]]
                        if hw < new_h:
                            new_h = hw
                new_h += 1
                old = h
                count[old] -= 1
                if count[old] == 0:
                    # gap: everything above ``old`` is cut off from the sink
                    for u in range(n):
                        if old < height[u] < n and u != s:
                            count[height[u]] -= 1
                            height[u] = n
                    new_h = n
                if new_h >= n:
                    height[v] = n
                    break
                height[v] = h = new_h
                count[h] += 1
                i = 0
                continue
            e = arcs[i]
            r = res[e]
            if r > 0:
                w = head[e]
                if height[w] == h - 1:
                    delta = ex if ex < r else r
                    res[e] = r - delta
                    res[e ^ 1] += delta
                    ex -= delta
                    if excess[w] == 0 and w != t and w != s:
                        active[h - 1].append(w)
                        if h - 1 > highest:
                            highest = h - 1
                    excess[w] += delta
                    if ex == 0:
                        break
            i += 1
        excess[v] = ex
        current[v] = i if i < len(arcs) else 0
        if ex > 0 and height[v] < n:
            active[height[v]].append(v)
            if height[v] > highest:
                highest = height[v]
        if work > relabel_budget:
            work = 0
            highest = global_relabel()

    return res, excess


def min_cut(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """Minimum s-t cut value and its maximal source side.

    The source side returned is the complement of the nodes that can still
    reach the sink in the residual network of a maximum (pre)flow, i.e. the
    largest of all minimum cuts. Node indices are returned, not labels.
    """
    res, excess = _preflow(net)
    dist = _reverse_bfs(net, res, net.sink, -1)
    side = frozenset(v for v in range(net.n_nodes) if dist[v] < 0)
    return excess[net.sink], side


def max_flow(net: FlowNetwork) -> tuple[int, list[int]]:
    """Maximum flow value and a feasible flow on every arc.

    ``flow[e]`` is the flow carried by arc ``e`` in its own direction
    (0 <= flow[e] <= capacity). The excess left by the preflow phase is
    pushed back to the source with a FIFO push-relabel pass.
    """
    n = net.n_nodes
    s, t = net.source, net.sink
    head, out = net.head, net.out
    res, excess = _preflow(net)

    dist = _reverse_bfs(net, res, s, t)
    height = [d if d >= 0 else 2 * n for d in dist]
    height[t] = 2 * n + 1
    queue = deque(v for v in range(n) if v not in (s, t) and excess[v] > 0)
    while queue:
        v = queue.popleft()
        while excess[v] > 0:
            pushed = False
            for e in out[v]:
                w = head[e]
                if res[e] > 0 and height[v] == height[w] + 1:
                    delta = min(excess[v], res[e])
                    res[e] -= delta
                    res[e ^ 1] += delta
                    excess[v] -= delta
                    if w != s and excess[w] == 0:
                        queue.append(w)
                    excess[w] += delta
                    pushed = True
                    if excess[v] == 0:
                        break
            if not pushed:
                height[v] = 1 + min(
                    (height[head[e]] for e in out[v] if res[e] > 0 and head[e] != t),
                )
    flow = [max(0, c - r) for c, r in zip(net.capacity, res)]
    return excess[t], flow
