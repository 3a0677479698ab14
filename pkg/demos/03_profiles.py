"""
Profile functions
=================

prof(i) is the step density of the smallest chain set holding at least i
vertices. Plotted against i it shows how fast density falls off from the
core of the graph to its periphery.
"""

from pathlib import Path

from densify import core_decomposition, exact_ld, greedy_ld, load_edge_list, profile

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
with open(DATA / "lesmis.txt", "rb") as fh:
    g = load_edge_list(fh)

chains = {
    "exact": exact_ld(g),
    "greedy": greedy_ld(g),
    "core": core_decomposition(g).chain,
}
profs = {name: profile(c, g.n) for name, c in chains.items()}

# one row per change point of any profile
print(f"{'i':>4} " + " ".join(f"{name:>8}" for name in profs))
prev = None
for i in range(g.n):
    row = tuple(profs[name][i] for name in profs)
    if row != prev:
        print(f"{i + 1:>4} " + " ".join(f"{float(x):8.3f}" for x in row))
        prev = row

# the exact profile dominates at its first point of disagreement
exact = profs["exact"]
for name in ("greedy", "core"):
    first = next((i for i, (a, b) in enumerate(zip(profs[name], exact)) if a != b), None)
    if first is not None:
        print(f"{name} first differs at i={first + 1}: {float(profs[name][first]):.3f} vs {float(exact[first]):.3f}")
