import random

import pytest

from densify import FlowNetwork, max_flow, min_cut
from cut_oracle import brute_min_cut, random_network


def test_single_arc():
    net = FlowNetwork(2, 0, 1)
    net.add_arc(0, 1, 5)
    assert min_cut(net) == (5, frozenset({0}))


def test_path_bottleneck_at_source():
    # s=0, a=1, t=2; the cut {s} costs 3, {s, a} costs 7
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, 3)
    net.add_arc(1, 2, 7)
    assert min_cut(net) == (3, frozenset({0}))


def test_diamond_takes_maximal_side():
    s, a, b, t = range(4)
    net = FlowNetwork(4, s, t)
    for u, v in [(s, a), (s, b), (a, t), (b, t)]:
        net.add_arc(u, v, 1)
    assert min_cut(net) == (2, frozenset({s, a, b}))


def test_undirected_edge_carries_both_ways():
    s, a, b, t = range(4)
    net = FlowNetwork(4, s, t)
    net.add_arc(s, b, 4)
    net.add_edge(a, b, 3)
    net.add_arc(a, t, 9)
    assert min_cut(net)[0] == 3


def test_rejects_bad_networks():
    with pytest.raises(ValueError):
        FlowNetwork(2, 1, 1)
    net = FlowNetwork(2, 0, 1)
    with pytest.raises(ValueError):
        net.add_arc(0, 1, -1)


def test_huge_capacities_are_exact():
    big = 10**40 + 7
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, big)
    net.add_arc(1, 2, big + 1)
    assert min_cut(net) == (big, frozenset({0}))


def _check_flow(net, value, flow):
    cap = net.capacity
    for e, f in enumerate(flow):
        assert 0 <= f <= cap[e]
    balance = [0] * net.n_nodes
    for e, f in enumerate(flow):
        balance[net.tail(e)] -= f
        balance[net.head[e]] += f
    for v in range(net.n_nodes):
        if v == net.source:
            assert balance[v] == -value
        elif v == net.sink:
            assert balance[v] == value
        else:
            assert balance[v] == 0


@pytest.mark.parametrize("seed", range(60))
def test_matches_enumeration(seed):
    rng = random.Random(seed)
    net, arcs = random_network(rng)
    value, side = min_cut(net)
    best, sides = brute_min_cut(net.n_nodes, net.source, net.sink, arcs)
    assert value == best
    assert side in sides
    assert all(other <= side for other in sides)
    flow_value, flow = max_flow(net)
    assert flow_value == value
    _check_flow(net, value, flow)


@pytest.mark.parametrize("seed", range(20))
def test_larger_random_flows_are_feasible(seed):
    rng = random.Random(1000 + seed)
    net, _ = random_network(rng, max_nodes=60, max_cap=50, density=0.1)
    value, side = min_cut(net)
    flow_value, flow = max_flow(net)
    assert value == flow_value
    _check_flow(net, value, flow)
    # the returned side must attain the value
    attained = sum(c for u, v, c in net.arcs() if u in side and v not in side)
    assert attained == value
