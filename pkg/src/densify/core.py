"""k-core decomposition (Matula-Beck) as a nested chain."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Chain, Graph
from .greedy import peel

__all__ = ["CoreResult", "core_decomposition"]


@dataclass(frozen=True)
class CoreResult:
    chain: Chain
    core_number: tuple[int, ...]

    def core(self, k: int) -> frozenset[int]:
        """Vertices of the k-core (empty when k exceeds the degeneracy)."""
        return frozenset(v for v, c in enumerate(self.core_number) if c >= k)


def core_decomposition(graph: Graph) -> CoreResult:
    """Core numbers and the chain of distinct k-cores, innermost first.

    Uses the same minimum-degree peeling as :func:`densify.greedy.peel`
    (smallest id on ties); a vertex's core number is the largest removal
    degree seen up to and including its own removal.
    """
    if graph.n == 0:
        return CoreResult(Chain((frozenset(),), (), "core"), ())
    po = peel(graph)
    core = [0] * graph.n
    k = 0
    for v in po.removal_order:
        k = max(k, po.removal_degrees[v])
        core[v] = k
    levels = sorted(set(core), reverse=True)
    sets = [frozenset(v for v in range(graph.n) if core[v] >= k) for k in levels]
    return CoreResult(Chain.from_sets(graph, sets, "core"), tuple(core))
