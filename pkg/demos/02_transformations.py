"""The four transformations and the provenance labels tying outputs to inputs."""

from symbreak import (
    cycle_graph,
    endline_edges,
    endline_graph,
    is_isomorphic,
    line_graph,
    middle_graph,
    path_graph,
    subdivision_graph,
    to_graph6,
)

P3 = path_graph(3)

# Line graph: vertices are the edges of the input.
L = line_graph(P3)
print("L(P3):", to_graph6(L), "labels:", [str(l) for l in L.labels])

# Endline graph: one new pendant hanging off every vertex.
Gp = endline_graph(P3)
print("P3+part:", to_graph6(Gp), "pendant edges:", endline_edges(Gp))

# Subdivision graph: a new vertex in the middle of every edge; always bipartite
# between originals and edge vertices.
S = subdivision_graph(P3)
print("S(P3):", to_graph6(S), "labels:", [str(l) for l in S.labels])

# Middle graph: subdivision plus adjacencies between touching edges.
M = middle_graph(P3)
print("M(P3):", to_graph6(M), "edges:", M.edges)

# Two structural identities the harness verifies exhaustively:
C5 = cycle_graph(5)
print(
    "S(C5) is the 10-cycle:",
    is_isomorphic(subdivision_graph(C5), cycle_graph(10)) is not None,
)
print(
    "M(C5) is L(C5+):",
    is_isomorphic(middle_graph(C5), line_graph(endline_graph(C5))) is not None,
)
