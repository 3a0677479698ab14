"""Exhaustive s-t cut enumeration, independent of the push-relabel code."""

from itertools import combinations


def brute_min_cut(n_nodes, source, sink, arcs):
    """Return (min value, list of all minimizing source sides)."""
    inner = [v for v in range(n_nodes) if v not in (source, sink)]
    best, sides = None, []
    for r in range(len(inner) + 1):
        for extra in combinations(inner, r):
            side = frozenset((source, *extra))
            value = sum(c for u, v, c in arcs if u in side and v not in side)
            if best is None or value < best:
                best, sides = value, [side]
            elif value == best:
                sides.append(side)
    return best, sides


def random_network(rng, max_nodes=12, max_cap=20, density=0.35):
    from densify import FlowNetwork

    n = rng.randint(2, max_nodes)
    s, t = rng.sample(range(n), 2)
    net = FlowNetwork(n, s, t)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < density:
                c = rng.randint(0, max_cap)
                net.add_arc(u, v, c)
                arcs.append((u, v, c))
    return net, arcs
