"""Explicit colorings for endline and subdivision graphs, certified at runtime.

Every construction re-checks its own output with the generic checkers
(properness and trivial stabilizer) instead of trusting the recipe; the
result object records the certification outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colorings import EdgeColoring, TotalColoring, VertexColoring
from .errors import ContractError
from .graph_core import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_connected,
    is_cycle_graph,
    max_degree,
)
from .invariants import (
    distinguishing_chromatic_index,
    distinguishing_number,
    is_distinguishing,
    is_proper,
)
from .symmetry import automorphism_group, is_isomorphic
from .transforms import endline_graph, subdivision_graph

# The four exceptional graphs and the fixed Hamiltonian cycle used on each.
# Vertex-transitivity makes the choice of cycle immaterial up to isomorphism;
# fixing one keeps outputs deterministic.
_EXCEPTIONAL_CYCLES: dict[str, tuple[int, ...]] = {
    "C4": (0, 1, 2, 3),
    "C6": (0, 1, 2, 3, 4, 5),
    "K4": (0, 1, 2, 3),
    "K3,3": (0, 3, 1, 4, 2, 5),
}


def _exceptional_catalog() -> dict[str, Graph]:
    return {
        "C4": cycle_graph(4),
        "C6": cycle_graph(6),
        "K4": complete_graph(4),
        "K3,3": complete_bipartite_graph(3, 3),
    }


def exception_name(G: Graph) -> str | None:
    """Which of the four exceptional graphs G is isomorphic to, if any."""
    for name, H in _exceptional_catalog().items():
        if G.n == H.n and G.num_edges == H.num_edges and is_isomorphic(G, H):
            return name
    return None


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed coloring together with its runtime certification."""

    graph: Graph
    coloring: object
    palette: int
    proper: bool
    distinguishing: bool
    used_fallback: bool = False

    @property
    def certified(self) -> bool:
        return self.proper and self.distinguishing


def exceptional_endline_coloring(G: Graph) -> ConstructionResult:
    """Proper distinguishing edge coloring of G+ with max_degree(G)+2 colors,
    for G one of C4, C6, K4, K3,3 in catalog vertex order.

    Hamiltonian cycle edges alternate colors 3/4, the pendant edge at the
    cycle start gets color 1, every other pendant edge gets 2, and any
    leftover edges (the K4 and K3,3 chords) get 5.
    """
    catalog = _exceptional_catalog()
    name = None
    for cand, H in catalog.items():
        if G == H:
            name = cand
            break
    if name is None:
        raise ContractError(
            "exceptional_endline_coloring expects C4, C6, K4 or K3,3 "
            "in catalog vertex order"
        )
    cycle = _EXCEPTIONAL_CYCLES[name]
    p = len(cycle)
    delta = max_degree(G)
    Gp = endline_graph(G)
    coloring: dict[tuple[int, int], int] = {}
    cycle_edges = set()
    for t in range(p):
        u, v = cycle[t], cycle[(t + 1) % p]
        e = (u, v) if u < v else (v, u)
        coloring[e] = 3 if t % 2 == 0 else 4
        cycle_edges.add(e)
    for e in G.edges:
        if e not in cycle_edges:
            coloring[e] = 5
    for i in range(G.n):
        coloring[(i, G.n + i)] = 1 if i == cycle[0] else 2
    col = EdgeColoring.from_dict(coloring, delta + 2)
    aut = automorphism_group(Gp)
    return ConstructionResult(
        graph=Gp,
        coloring=col,
        palette=delta + 2,
        proper=is_proper(Gp, col),
        distinguishing=is_distinguishing(Gp, col, aut),
    )


def endline_extension_coloring(G: Graph) -> ConstructionResult:
    """Extend a minimal proper distinguishing edge coloring of G to G+ using
    only max_degree(G)+1 colors (G connected, order >= 3, not exceptional).

    When the minimal index equals the maximum degree, all pendant edges take
    the one spare color; otherwise the pendant edge at each vertex takes the
    least color missing there.  The output is certified; if the
    distinguishing check ever failed, the exact search on G+ would be used
    instead and the result flagged.
    """
    if G.n < 3 or not is_connected(G):
        raise ContractError("endline_extension_coloring needs a connected graph of order >= 3")
    if exception_name(G) is not None:
        raise ContractError("endline_extension_coloring does not apply to the four exceptional graphs")
    delta = max_degree(G)
    base = distinguishing_chromatic_index(G)
    g = base.witness
    if base.value not in (delta, delta + 1):
        raise AssertionError(
            f"distinguishing chromatic index {base.value} outside "
            f"{{{delta},{delta + 1}}}; cannot happen for non-exceptional graphs"
        )
    Gp = endline_graph(G)
    coloring = dict(zip(g.edges, g.colors))
    if base.value == delta:
        for i in range(G.n):
            coloring[(i, G.n + i)] = delta + 1
    else:
        for v in range(G.n):
            present = {g.color_of(v, w) for w in G.adj[v]}
            missing = [c for c in range(1, delta + 2) if c not in present]
            assert missing, "a vertex of degree <= max degree always misses a color"
            coloring[(v, G.n + v)] = missing[0]
    col = EdgeColoring.from_dict(coloring, delta + 1)
    aut = automorphism_group(Gp)
    proper = is_proper(Gp, col)
    dist = is_distinguishing(Gp, col, aut)
    if proper and dist:
        return ConstructionResult(Gp, col, delta + 1, proper, dist)
    exact = distinguishing_chromatic_index(Gp)
    return ConstructionResult(
        graph=Gp,
        coloring=exact.witness,
        palette=exact.value,
        proper=is_proper(Gp, exact.witness),
        distinguishing=is_distinguishing(Gp, exact.witness, aut),
        used_fallback=True,
    )


def lift_total_to_subdivision(G: Graph, f: TotalColoring) -> VertexColoring:
    """Turn a total coloring of G into the vertex coloring of S(G) that gives
    each original vertex its vertex color and each edge vertex its edge color."""
    if len(f.vertex_part.colors) != G.n or f.edge_part.edges != G.edges:
        raise ContractError("total coloring domain does not match the graph")
    return VertexColoring(f.vertex_part.colors + f.edge_part.colors, f.palette)


def restrict_subdivision_to_total(G: Graph, f: VertexColoring) -> TotalColoring:
    """Inverse of the lift: split a vertex coloring of S(G) back into a total
    coloring of G along the provenance labels."""
    S = subdivision_graph(G)
    if len(f.colors) != S.n:
        raise ContractError("coloring domain does not match V(S(G))")
    return TotalColoring(
        VertexColoring(f.colors[: G.n], f.palette),
        EdgeColoring(G.edges, f.colors[G.n :], f.palette),
    )


def subdivision_proper_distinguishing(G: Graph) -> ConstructionResult:
    """Proper distinguishing vertex coloring of S(G) for connected non-cycle G.

    Palette depends on the distinguishing number d of G: originals keep a
    minimal distinguishing coloring; edge vertices take the least color
    missing at their endpoints (d >= 3), the fresh color 3 (d = 2), or the
    class coloring 1/2 (d = 1).
    """
    if G.n < 3 or not is_connected(G):
        raise ContractError("subdivision_proper_distinguishing needs a connected graph of order >= 3")
    if is_cycle_graph(G):
        raise ContractError("subdivision_proper_distinguishing does not apply to cycles")
    S = subdivision_graph(G)
    d = distinguishing_number(G)
    f = d.witness.colors
    if d.value >= 3:
        palette = d.value
        ev = []
        for x, y in G.edges:
            ev.append(min(c for c in range(1, palette + 1) if c not in (f[x], f[y])))
        colors = f + tuple(ev)
    elif d.value == 2:
        palette = 3
        colors = f + (3,) * G.num_edges
    else:
        palette = 2
        colors = (1,) * G.n + (2,) * G.num_edges
    col = VertexColoring(colors, palette)
    aut = automorphism_group(S)
    return ConstructionResult(
        graph=S,
        coloring=col,
        palette=palette,
        proper=is_proper(S, col),
        distinguishing=is_distinguishing(S, col, aut),
    )
