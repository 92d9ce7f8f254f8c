"""Build graphs, round-trip graph6 text, and query the basic predicates."""

from symbreak import (
    NamedGraphSpec,
    bipartition,
    complete_bipartite_graph,
    cycle_graph,
    from_edge_list,
    is_connected,
    is_irreducible,
    max_degree,
    named_graph,
    neighborhood,
    parse_graph6,
    to_graph6,
)

# A graph is just an order plus unordered index pairs.
triangle = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
print("triangle:", triangle, "max degree", max_degree(triangle))

# graph6 is the one-line interchange format used by every corpus file here.
line = to_graph6(triangle)
print("graph6 encoding:", line)
print("round trip is identity:", parse_graph6(line) == triangle)

# The named catalog covers the families the verification sweeps care about,
# including the two special four-vertex graphs Q and LQ.
for spec in (
    NamedGraphSpec("C", (6,)),
    NamedGraphSpec("K_bip", (3, 3)),
    NamedGraphSpec("Q"),
    NamedGraphSpec("LQ"),
):
    G = named_graph(spec)
    print(
        f"{spec.family}{spec.params or ''}: order {G.n}, size {G.num_edges}, "
        f"degrees {G.degree_sequence()}"
    )

# Predicates: connectivity, bipartitions, neighborhoods, irreducibility.
C6 = cycle_graph(6)
print("C6 connected:", is_connected(C6))
print("C6 bipartition:", bipartition(C6))
print("C5 bipartition:", bipartition(cycle_graph(5)))
print("neighborhood of 0 in K3,3:", sorted(neighborhood(complete_bipartite_graph(3, 3), 0)))

# C4 is reducible: opposite vertices see exactly the same neighbors.
print("C4 irreducible:", is_irreducible(cycle_graph(4)))
print("C6 irreducible:", is_irreducible(C6))
