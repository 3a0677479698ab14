"""Machine-readable decomposition and comparison reports."""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Any, Callable, Sequence

from .core import core_decomposition
from .exact import exact_ld
from .graph import Chain, Graph
from .greedy import greedy_ld
from .metrics import chain_tau_b, profile, profile_ratio, round_half_up

SCHEMA_VERSION = 1

ALGORITHMS: dict[str, Callable[[Graph], Chain]] = {
    "exact": exact_ld,
    "greedy": greedy_ld,
    "core": lambda g: core_decomposition(g).chain,
}


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def _decimal(x) -> float | None:
    if isinstance(x, float):
        return None if math.isnan(x) or math.isinf(x) else x
    return float(x)


def graph_stats(graph: Graph) -> dict[str, int]:
    return {
        "n": graph.n,
        "m": graph.m,
        "lines_read": graph.stats.lines_read,
        "loops_dropped": graph.stats.loops_dropped,
        "duplicates_collapsed": graph.stats.duplicates_collapsed,
    }


@dataclass
class DecompositionReport:
    """One decomposition as labelled shells, innermost first.

    ``steps[i]`` describes chain set ``i + 1``: the labels it adds to the
    previous set (``shell``), its total ``size`` and the exact step density.
    """

    algorithm: str
    steps: list[dict[str, Any]]
    graph: dict[str, int]
    elapsed_seconds: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_chain(cls, graph: Graph, chain: Chain, algorithm: str, elapsed: float = 0.0) -> DecompositionReport:
        steps = []
        for shell, size, d in zip(chain.shells(), chain.sizes[1:], chain.step_densities):
            steps.append(
                {
                    "shell": graph.labels_of(shell),
                    "size": size,
                    "density": fraction_str(d),
                    "density_decimal": float(d),
                }
            )
        return cls(algorithm, steps, graph_stats(graph), elapsed)

    @property
    def nonempty_sets(self) -> int:
        return len(self.steps)

    @property
    def chain_length(self) -> int:
        return len(self.steps) + 1

    def chain_sets(self) -> list[frozenset[str]]:
        """Cumulative label sets ``B_1 .. B_k`` rebuilt from the shells."""
        out, acc = [], frozenset()
        for step in self.steps:
            acc = acc | frozenset(step["shell"])
            out.append(acc)
        return out

    def step_densities(self) -> list[Fraction]:
        return [parse_fraction(s["density"]) for s in self.steps]

    def to_dict(self) -> dict[str, Any]:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "algorithm": self.algorithm,
            "graph": self.graph,
            "nonempty_sets": self.nonempty_sets,
            "chain_length": self.chain_length,
            "steps": self.steps,
            "elapsed_seconds": self.elapsed_seconds,
        }
        doc.update(self.extra)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> DecompositionReport:
        doc = json.loads(text)
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
        known = {"schema_version", "algorithm", "graph", "nonempty_sets", "chain_length", "steps", "elapsed_seconds"}
        extra = {k: v for k, v in doc.items() if k not in known}
        return cls(doc["algorithm"], doc["steps"], doc["graph"], doc["elapsed_seconds"], extra)

    def to_tsv(self) -> str:
        lines = ["step\tsize\tdensity\tdensity_decimal\tshell"]
        for i, s in enumerate(self.steps, start=1):
            lines.append(
                f"{i}\t{s['size']}\t{s['density']}\t{s['density_decimal']:.6f}\t{' '.join(s['shell'])}"
            )
        return "\n".join(lines) + "\n"


def run(graph: Graph, algorithm: str) -> tuple[Chain, float]:
    fn = ALGORITHMS[algorithm]
    start = time.perf_counter()
    chain = fn(graph)
    return chain, time.perf_counter() - start


def _ratio_entry(x) -> dict[str, Any]:
    if isinstance(x, float):
        return {"exact": None, "decimal": None if math.isinf(x) else x}
    return {"exact": fraction_str(x), "decimal": str(round_half_up(x, 2))}


def compare_report(graph: Graph, algorithms: Sequence[str]) -> dict[str, Any]:
    """Sizes, pairwise tau-b, pairwise profile ratios and profile vectors."""
    chains: dict[str, Chain] = {}
    timings: dict[str, float] = {}
    for a in algorithms:
        chains[a], timings[a] = run(graph, a)
    n = graph.n
    profiles = {a: profile(c, n) for a, c in chains.items()}
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "graph": graph_stats(graph),
        "algorithms": list(algorithms),
        "sizes": {
            a: {"nonempty_sets": len(c) - 1, "chain_length": len(c)} for a, c in chains.items()
        },
        "elapsed_seconds": timings,
        "kendall_tau_b": {},
        "profile_ratio": {},
        "inner_density_ratio": {},
        "profiles": {a: [fraction_str(x) for x in p] for a, p in profiles.items()},
    }
    for a, b in combinations(algorithms, 2):
        doc["kendall_tau_b"][f"{a}-vs-{b}"] = _decimal(chain_tau_b(chains[a], chains[b]))
    for a, b in permutations(algorithms, 2):
        doc["profile_ratio"][f"{a}/{b}"] = _ratio_entry(profile_ratio(chains[a], chains[b]))
        if n and profiles[b][0] != 0:
            doc["inner_density_ratio"][f"{a}/{b}"] = _ratio_entry(profiles[a][0] / profiles[b][0])
    return doc


def compare_tsv(doc: dict[str, Any]) -> str:
    lines = ["section\tkey\tvalue"]
    for a, s in doc["sizes"].items():
        lines.append(f"nonempty_sets\t{a}\t{s['nonempty_sets']}")
        lines.append(f"chain_length\t{a}\t{s['chain_length']}")
    for k, v in doc["kendall_tau_b"].items():
        lines.append(f"kendall_tau_b\t{k}\t{'nan' if v is None else repr(v)}")
    for section in ("profile_ratio", "inner_density_ratio"):
        for k, v in doc[section].items():
            lines.append(f"{section}\t{k}\t{v['exact'] or 'inf'}")
    return "\n".join(lines) + "\n"


def profile_tsv(values: Sequence[Fraction]) -> str:
    lines = ["i\tprofile\tprofile_decimal"]
    for i, x in enumerate(values, start=1):
        lines.append(f"{i}\t{fraction_str(x)}\t{float(x):.6f}")
    return "\n".join(lines) + "\n"
