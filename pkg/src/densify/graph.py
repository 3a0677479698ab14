"""Simple undirected graphs and exact density arithmetic on vertex sets.

Vertex sets are plain ``frozenset[int]`` (any iterable of ids is accepted as
input). All densities are :class:`fractions.Fraction` values so that
comparisons are exact.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable, Sequence, Union

__all__ = [
    "DomainError",
    "ParseError",
    "LoadStats",
    "Graph",
    "Chain",
    "load_edge_list",
    "edge_count",
    "cross_edge_count",
    "marginal_edge_count",
    "density",
    "outer_density",
]

VertexSet = frozenset


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class ParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: expected 2 tokens, got {line!r}")
        self.lineno = lineno
        self.line = line


@dataclass(frozen=True)
class LoadStats:
    lines_read: int = 0
    loops_dropped: int = 0
    duplicates_collapsed: int = 0


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertex ids ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v`` and
    ``labels[v]`` the original label. Build one with :meth:`from_edges` or
    :func:`load_edge_list` rather than calling the constructor.
    """

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    m: int
    stats: LoadStats = field(default_factory=LoadStats, compare=False)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        """Build a graph, dropping self-loops and collapsing parallel edges."""
        if labels is None:
            labels = [str(v) for v in range(n)]
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        loops = dups = 0
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise ValueError(f"edge ({u}, {w}) out of range for n={n}")
            if u == w:
                loops += 1
            elif w in nbrs[u]:
                dups += 1
            else:
                nbrs[u].add(w)
                nbrs[w].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        m = sum(len(a) for a in adjacency) // 2
        return cls(
            adjacency,
            tuple(str(x) for x in labels),
            m,
            LoadStats(0, loops, dups),
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, w)`` with ``u < w``, sorted lexicographically."""
        return [(u, w) for u, nb in enumerate(self.adjacency) for w in nb if u < w]

    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def ids_of(self, labels: Iterable[str]) -> frozenset[int]:
        """Translate original labels into a vertex set."""
        index = {lab: v for v, lab in enumerate(self.labels)}
        try:
            return frozenset(index[lab] for lab in labels)
        except KeyError as exc:
            raise KeyError(f"unknown vertex label {exc.args[0]!r}") from None

    def labels_of(self, vertices: Iterable[int]) -> list[str]:
        return sorted(self.labels[v] for v in vertices)

    def to_json(self) -> str:
        """Canonical JSON emission: ``{"n", "m", "labels", "edges"}``."""
        doc = {
            "n": self.n,
            "m": self.m,
            "labels": list(self.labels),
            "edges": [list(e) for e in self.edges()],
        }
        return json.dumps(doc, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> Graph:
        doc = json.loads(text)
        return cls.from_edges(doc["n"], (tuple(e) for e in doc["edges"]), doc["labels"])

    def to_edge_list(self) -> str:
        """Serialize back into the edge-list text format (isolated vertices are lost)."""
        return "".join(
            f"{self.labels[u]} {self.labels[w]}\n" for u, w in self.edges()
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def load_edge_list(source: Union[str, bytes, IO[str], IO[bytes]]) -> Graph:
    """Parse whitespace-separated ``u w`` lines into a :class:`Graph`.

    Lines starting with ``#`` and blank lines are skipped. Labels get dense
    ids in order of first appearance. Self-loops are dropped and repeated
    edges collapsed; the counts end up in ``graph.stats``.

    Raises:
        ParseError: a non-comment line does not hold exactly two tokens.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        source = io.StringIO(source)

    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    lines = 0

    def vid(label: str) -> int:
        v = index.get(label)
        if v is None:
            v = index[label] = len(labels)
            labels.append(label)
        return v

    for lineno, raw in enumerate(source, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        lines += 1
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, raw.rstrip("\r\n"))
        edges.append((vid(tokens[0]), vid(tokens[1])))

    g = Graph.from_edges(len(labels), edges, labels)
    stats = LoadStats(lines, g.stats.loops_dropped, g.stats.duplicates_collapsed)
    return Graph(g.adjacency, g.labels, g.m, stats)


# -- edge counting -----------------------------------------------------------


def _as_set(x: Iterable[int]) -> frozenset[int]:
    return x if isinstance(x, frozenset) else frozenset(x)


def edge_count(graph: Graph, X: Iterable[int]) -> int:
    """``|E(X)|``: edges with both endpoints in ``X``."""
    X = _as_set(X)
    adj = graph.adjacency
    return sum(1 for u in X for w in adj[u] if w in X) // 2


def _cross(graph: Graph, X: frozenset[int], Y: frozenset[int]) -> int:
    adj = graph.adjacency
    return sum(1 for u in X for w in adj[u] if w in Y)


def cross_edge_count(graph: Graph, X: Iterable[int], Y: Iterable[int]) -> int:
    """Number of edges with one endpoint in ``X`` and the other in ``Y``.

    ``X`` and ``Y`` must be disjoint.
    """
    X, Y = _as_set(X), _as_set(Y)
    if not X.isdisjoint(Y):
        raise DomainError("cross edges need disjoint vertex sets")
    return _cross(graph, X, Y)


def marginal_edge_count(graph: Graph, X: Iterable[int], Y: Iterable[int]) -> int:
    """``|E(X)| + |cross(X, Y)|`` for disjoint ``X`` and ``Y``."""
    X, Y = _as_set(X), _as_set(Y)
    if not X.isdisjoint(Y):
        raise DomainError("marginal edges need disjoint vertex sets")
    return edge_count(graph, X) + _cross(graph, X, Y)


def density(graph: Graph, X: Iterable[int]) -> Fraction:
    """Exact density ``|E(X)| / |X|`` of a nonempty vertex set."""
    X = _as_set(X)
    if not X:
        raise DomainError("density of the empty set is undefined")
    return Fraction(edge_count(graph, X), len(X))


def outer_density(graph: Graph, X: Iterable[int], Y: Iterable[int]) -> Fraction:
    """Density that ``X \\ Y`` adds on top of ``Y``.

    Counts the edges inside ``X \\ Y`` plus those running from ``X \\ Y``
    into ``Y``, divided by ``|X \\ Y|``. With ``Y`` empty this is
    :func:`density`.
    """
    X, Y = _as_set(X), _as_set(Y)
    D = X - Y
    if not D:
        raise DomainError("outer density needs X not contained in Y")
    return Fraction(edge_count(graph, D) + _cross(graph, D, Y), len(D))


# -- chains -------------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    """Nested vertex sets ``sets[0] = {} < sets[1] < ... < sets[-1] = V``.

    ``step_densities[i - 1]`` holds ``outer_density(sets[i], sets[i - 1])``,
    so there is one density per nonempty set. ``kind`` is ``"exact"``,
    ``"greedy"`` or ``"core"``. A graph without vertices has the one-element
    chain ``[frozenset()]`` and no step densities.
    """

    sets: tuple[frozenset[int], ...]
    step_densities: tuple[Fraction, ...]
    kind: str

    @classmethod
    def from_sets(cls, graph: Graph, sets: Iterable[Iterable[int]], kind: str) -> Chain:
        """Sort ``sets`` by size, add the empty set and ``V``, and recompute densities."""
        everything = graph.vertices()
        uniq = {_as_set(s) for s in sets}
        uniq.add(frozenset())
        uniq.add(everything)
        ordered = tuple(sorted(uniq, key=len))
        steps = tuple(
            outer_density(graph, ordered[i], ordered[i - 1])
            for i in range(1, len(ordered))
        )
        chain = cls(ordered, steps, kind)
        chain.validate(graph)
        return chain

    def __len__(self) -> int:
        return len(self.sets)

    @property
    def nonempty_sets(self) -> tuple[frozenset[int], ...]:
        return self.sets[1:]

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]

    def shells(self) -> list[frozenset[int]]:
        """``sets[i] \\ sets[i - 1]`` for every step."""
        return [self.sets[i] - self.sets[i - 1] for i in range(1, len(self.sets))]

    def levels(self, n: int) -> list[int]:
        """Per-vertex index of the smallest chain set containing it (1-based)."""
        out = [0] * n
        for i, shell in enumerate(self.shells(), start=1):
            for v in shell:
                out[v] = i
        return out

    def validate(self, graph: Graph) -> None:
        """Check nestedness, endpoints, recorded densities and (for exact/greedy) monotonicity."""
        sets = self.sets
        if not sets or sets[0]:
            raise AssertionError("chain must start with the empty set")
        if sets[-1] != graph.vertices():
            raise AssertionError("chain must end with the full vertex set")
        if len(self.step_densities) != len(sets) - 1:
            raise AssertionError("one step density per nonempty set expected")
        for i in range(1, len(sets)):
            if not sets[i - 1] < sets[i]:
                raise AssertionError(f"set {i} does not strictly contain set {i - 1}")
            if self.step_densities[i - 1] != outer_density(graph, sets[i], sets[i - 1]):
                raise AssertionError(f"step density {i} disagrees with the graph")
        if self.kind in ("exact", "greedy"):
            d = self.step_densities
            if any(d[i] <= d[i + 1] for i in range(len(d) - 1)):
                raise AssertionError("step densities must strictly decrease")
