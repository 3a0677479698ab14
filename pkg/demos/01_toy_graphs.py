"""
Three decompositions of two small graphs
=========================================

Cores rank vertices by degree, the locally-dense chain ranks them by
density. The two disagree on the six-vertex graph below.
"""

from densify import core_decomposition, density, exact_ld, greedy_ld, load_edge_list

# a 4-clique a..d, a vertex e attached to b and d, and a pendant f
g = load_edge_list("a b\na c\na d\nb c\nb d\nc d\nb e\nd e\ne f\n")


def show(title, chain):
    print(title)
    for s, step in zip(chain.nonempty_sets, chain.step_densities):
        print(f"  {' '.join(g.labels_of(s)):<14} d(B)={density(g, s)}  step={step}")


# the 3-core is the clique, yet adding e raises the density from 3/2 to 8/5
show("k-cores", core_decomposition(g).chain)

# so the densest set, and the first locally-dense set, is {a..e}
show("locally-dense (exact)", exact_ld(g))

# peeling by minimum degree recovers the same chain here
show("locally-dense (greedy)", greedy_ld(g))
