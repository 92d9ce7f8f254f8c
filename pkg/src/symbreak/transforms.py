"""The four graph transformations: line, endline, subdivision and middle graph.

Output vertex numbering is deterministic: original vertices keep their source
indices 0..n-1, and edge vertices / pendant vertices are appended in
lexicographic source-edge / source-vertex order.  Provenance labels link every
output vertex back to the input graph.
"""

from __future__ import annotations

from .errors import ContractError, MalformedInputError
from .graph_core import Edge, Graph, VertexLabel, from_edge_list


def _require_edges(G: Graph, op: str) -> None:
    if G.num_edges == 0:
        raise MalformedInputError(f"{op} is undefined for edgeless input")


def line_graph(G: Graph) -> Graph:
    """Graph on E(G); two edge vertices adjacent iff the edges share an endpoint."""
    _require_edges(G, "line graph")
    rank = {e: k for k, e in enumerate(G.edges)}
    pairs = set()
    for v in range(G.n):
        incident = [rank[(v, w) if v < w else (w, v)] for w in G.adj[v]]
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                x, y = incident[a], incident[b]
                pairs.add((x, y) if x < y else (y, x))
    labels = tuple(VertexLabel.edge_vertex(u, v) for u, v in G.edges)
    return from_edge_list(G.num_edges, sorted(pairs), labels)


def endline_graph(G: Graph) -> Graph:
    """G plus one new pendant vertex attached to each original vertex."""
    n = G.n
    pairs = list(G.edges) + [(i, n + i) for i in range(n)]
    labels = tuple(VertexLabel.original(i) for i in range(n)) + tuple(
        VertexLabel.pendant(i) for i in range(n)
    )
    return from_edge_list(2 * n, pairs, labels)


def subdivision_graph(G: Graph) -> Graph:
    """Each edge replaced by a path of length two through a new edge vertex."""
    _require_edges(G, "subdivision graph")
    n = G.n
    pairs = []
    for k, (u, v) in enumerate(G.edges):
        pairs.append((u, n + k))
        pairs.append((v, n + k))
    labels = tuple(VertexLabel.original(i) for i in range(n)) + tuple(
        VertexLabel.edge_vertex(u, v) for u, v in G.edges
    )
    return from_edge_list(n + G.num_edges, pairs, labels)


def middle_graph(G: Graph) -> Graph:
    """Vertex set V(G) u E(G); edge-edge adjacency by shared endpoint,
    vertex-edge adjacency by incidence, and no original-original edges."""
    _require_edges(G, "middle graph")
    n = G.n
    rank = {e: k for k, e in enumerate(G.edges)}
    pairs = set()
    for k, (u, v) in enumerate(G.edges):
        pairs.add((u, n + k))
        pairs.add((v, n + k))
    for v in range(G.n):
        incident = [rank[(v, w) if v < w else (w, v)] for w in G.adj[v]]
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                x, y = incident[a], incident[b]
                pairs.add((n + x, n + y) if x < y else (n + y, n + x))
    labels = tuple(VertexLabel.original(i) for i in range(n)) + tuple(
        VertexLabel.edge_vertex(u, v) for u, v in G.edges
    )
    return from_edge_list(n + G.num_edges, sorted(pairs), labels)


def endline_edges(Gplus: Graph) -> tuple[Edge, ...]:
    """Recover the pendant edges of an endline graph from its labels."""
    out = []
    for idx, lab in enumerate(Gplus.labels):
        if lab.is_pendant:
            out.append((lab.a, idx) if lab.a < idx else (idx, lab.a))
    if not out:
        raise ContractError("graph carries no pendant labels; not an endline graph")
    return tuple(sorted(out))


def original_vertices(H: Graph) -> tuple[int, ...]:
    """Indices of the vertices labelled as originals of the source graph."""
    return tuple(i for i, lab in enumerate(H.labels) if lab.is_original)
