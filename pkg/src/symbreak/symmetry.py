"""Automorphism groups, isomorphism testing, canonical labeling, group actions.

All groups are enumerated in full: the graphs this package targets are small,
so stabilizers and distinguishing checks reduce to plain filters over the
element list.  The search backtracks over an iterated degree/neighborhood
refinement of the vertex set and validates adjacency incrementally, so leaves
of the search tree are exactly the automorphisms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .colorings import EdgeColoring, TotalColoring, VertexColoring
from .errors import ContractError, ResourceCapError
from .graph_core import Edge, Graph, from_edge_list, to_graph6

Permutation = tuple[int, ...]

DEFAULT_VERTEX_CAP = 40
DEFAULT_ORDER_CAP = 10_000_000


def _vertex_cap(explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("SYMBREAK_MAX_VERTICES")
    return int(env) if env else DEFAULT_VERTEX_CAP


def identity_permutation(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation applying q first, then p."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def is_automorphism(G: Graph, p: Permutation) -> bool:
    if len(p) != G.n or sorted(p) != list(range(G.n)):
        return False
    for u, v in G.edges:
        if not G.has_edge(p[u], p[v]):
            return False
    return True


def permute_graph(G: Graph, p: Permutation) -> Graph:
    """Relabel G so that old vertex v becomes p[v].  Labels travel along."""
    labels = [None] * G.n
    for v in range(G.n):
        labels[p[v]] = G.labels[v]
    return from_edge_list(G.n, [(p[u], p[v]) for u, v in G.edges], labels)


@dataclass(frozen=True)
class AutGroup:
    """The full automorphism group of a graph, one permutation per element."""

    n: int
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def nonidentity(self) -> tuple[Permutation, ...]:
        ident = identity_permutation(self.n)
        return tuple(p for p in self.elements if p != ident)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# ---------------------------------------------------------------------------
# Partition refinement
# ---------------------------------------------------------------------------

def _refine_colors(G: Graph, colors: list[int]) -> list[int]:
    """Iterate (color, multiset of neighbor colors) to a fixpoint.

    The output colors are ranks of sorted signature keys, so they are
    invariant under relabeling.
    """
    n = G.n
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in G.adj[v]))) for v in range(n)
        ]
        rank = {key: r for r, key in enumerate(sorted(set(keys)))}
        new = [rank[keys[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _adjacency_masks(G: Graph) -> list[int]:
    masks = [0] * G.n
    for u, v in G.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


# ---------------------------------------------------------------------------
# Automorphism group enumeration
# ---------------------------------------------------------------------------

def automorphism_group(
    G: Graph,
    *,
    max_vertices: Optional[int] = None,
    max_order: int = DEFAULT_ORDER_CAP,
) -> AutGroup:
    """Enumerate every adjacency-preserving bijection of G.

    Provenance labels are ignored: this is pure graph symmetry.  Raises
    ResourceCapError if the graph order or the group order exceeds its cap.
    Default calls are cached per graph.
    """
    if max_vertices is None and max_order == DEFAULT_ORDER_CAP:
        return _automorphism_group_cached(G)
    return _enumerate_automorphisms(G, max_vertices, max_order)


@lru_cache(maxsize=32)
def _automorphism_group_cached(G: Graph) -> AutGroup:
    return _enumerate_automorphisms(G, None, DEFAULT_ORDER_CAP)


def _enumerate_automorphisms(
    G: Graph, max_vertices: Optional[int], max_order: int
) -> AutGroup:
    n = G.n
    cap = _vertex_cap(max_vertices)
    if n > cap:
        raise ResourceCapError(
            f"automorphism search refused: order {n} exceeds cap {cap} "
            "(set SYMBREAK_MAX_VERTICES to override)"
        )
    colors = _refine_colors(G, [0] * n)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(colors[v], []).append(v)
    order = sorted(range(n), key=lambda v: (len(members[colors[v]]), colors[v], v))
    masks = _adjacency_masks(G)
    # Per depth: the candidate cell of order[d] and its already-placed neighbors.
    cands = [members[colors[v]] for v in order]
    prior_nbrs = [
        [u for u in order[:d] if (masks[order[d]] >> u) & 1] for d in range(n)
    ]

    image = [-1] * n
    used = [False] * n
    results: list[Permutation] = []

    def rec(d: int, used_mask: int) -> None:
        if d == n:
            results.append(tuple(image))
            if len(results) > max_order:
                raise ResourceCapError(f"automorphism group larger than cap {max_order}")
            return
        want = 0
        for u in prior_nbrs[d]:
            want |= 1 << image[u]
        v = order[d]
        for w in cands[d]:
            if used[w] or masks[w] & used_mask != want:
                continue
            image[v] = w
            used[w] = True
            rec(d + 1, used_mask | (1 << w))
            used[w] = False
        image[v] = -1

    rec(0, 0)
    return AutGroup(n=n, elements=tuple(results))


# ---------------------------------------------------------------------------
# Canonical labeling (individualization-refinement, minimum adjacency code)
# ---------------------------------------------------------------------------

def _individualize(G: Graph, colors: list[int], v: int) -> list[int]:
    keys = [(colors[u], 0 if u == v else 1) for u in range(G.n)]
    rank = {key: r for r, key in enumerate(sorted(set(keys)))}
    return _refine_colors(G, [rank[keys[u]] for u in range(G.n)])


def _code_for(G: Graph, colors: list[int]) -> tuple[int, Permutation]:
    # colors are discrete here: colors[v] is v's position in the new order.
    n = G.n
    vert_at = [0] * n
    for v in range(n):
        vert_at[colors[v]] = v
    acc = 0
    for j in range(1, n):
        vj = vert_at[j]
        row = G.adj_sets[vj]
        for i in range(j):
            acc = (acc << 1) | (1 if vert_at[i] in row else 0)
    return acc, tuple(colors)


def canonical_labeling(G: Graph) -> tuple[Permutation, int]:
    """A relabeling p (old index -> new index) minimizing the adjacency code.

    Isomorphic graphs yield equal codes; the code plus the order determines
    the graph, so code equality decides isomorphism.  Automorphisms found
    along the way prune equivalent branches.
    """
    base = _refine_colors(G, [0] * G.n)
    best: dict = {"code": None, "perm": None}
    autos: list[Permutation] = []

    def rec(colors: list[int], path: tuple[int, ...]) -> None:
        cells: dict[int, list[int]] = {}
        for v in range(G.n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            code, perm = _code_for(G, colors)
            if best["code"] is None or code < best["code"]:
                best["code"], best["perm"] = code, perm
            elif code == best["code"]:
                # Two orderings onto the same code compose to an automorphism.
                autos.append(compose(invert(perm), best["perm"]))
            return
        explored: list[int] = []
        for v in sorted(target):
            skip = False
            for a in autos:
                if all(a[x] == x for x in path) and any(a[w] == v for w in explored):
                    skip = True
                    break
            if skip:
                continue
            explored.append(v)
            rec(_individualize(G, colors, v), path + (v,))

    rec(base, ())
    return best["perm"], best["code"]


def canonical_form(G: Graph) -> str:
    """graph6 string of the canonically relabelled graph; a dedup key."""
    perm, _ = canonical_labeling(G)
    return to_graph6(permute_graph(G, perm))


def is_isomorphic(G: Graph, H: Graph) -> Optional[Permutation]:
    """A vertex bijection mapping E(G) onto E(H), or None."""
    if G.n != H.n or G.num_edges != H.num_edges:
        return None
    if G.degree_sequence() != H.degree_sequence():
        return None
    pG, codeG = canonical_labeling(G)
    pH, codeH = canonical_labeling(H)
    if codeG != codeH:
        return None
    witness = compose(invert(pH), pG)
    for u, v in G.edges:
        if not H.has_edge(witness[u], witness[v]):
            raise AssertionError("canonical labeling produced an invalid witness")
    return witness


# ---------------------------------------------------------------------------
# Group actions and lifts
# ---------------------------------------------------------------------------

def edge_action(p: Permutation, G: Graph) -> dict[Edge, Edge]:
    """Induced action on E(G): {x,y} -> {p(x),p(y)}."""
    if not is_automorphism(G, p):
        raise ContractError("permutation is not an automorphism of the graph")
    out = {}
    for u, v in G.edges:
        a, b = p[u], p[v]
        out[(u, v)] = (a, b) if a < b else (b, a)
    return out


def edge_index_action(p: Permutation, G: Graph) -> Permutation:
    """Same action expressed on edge indices into G.edges."""
    act = edge_action(p, G)
    rank = {e: k for k, e in enumerate(G.edges)}
    return tuple(rank[act[e]] for e in G.edges)


def lift_to_endline(alpha: Permutation, G: Graph) -> Permutation:
    """Extend an automorphism of G to its endline graph: pendants follow
    their attachment vertices.  Indices match transforms.endline_graph."""
    if not is_automorphism(G, alpha):
        raise ContractError("permutation is not an automorphism of the graph")
    n = G.n
    return tuple(alpha) + tuple(n + alpha[i] for i in range(n))


def lift_to_subdivision(alpha: Permutation, G: Graph) -> Permutation:
    """Extend an automorphism of G to its subdivision graph: the edge vertex
    of {x,y} goes to the edge vertex of {alpha(x),alpha(y)}."""
    if not is_automorphism(G, alpha):
        raise ContractError("permutation is not an automorphism of the graph")
    n = G.n
    rank = {e: k for k, e in enumerate(G.edges)}
    tail = []
    for u, v in G.edges:
        a, b = alpha[u], alpha[v]
        tail.append(n + rank[(a, b) if a < b else (b, a)])
    return tuple(alpha) + tuple(tail)


def preserves(p: Permutation, c) -> bool:
    """Does p map every vertex/edge to one of the same color?"""
    if isinstance(c, VertexColoring):
        if len(p) != len(c.colors):
            raise ContractError("coloring domain does not match the permutation")
        cols = c.colors
        return all(cols[p[i]] == cols[i] for i in range(len(p)))
    if isinstance(c, EdgeColoring):
        rank = {e: k for k, e in enumerate(c.edges)}
        cols = c.colors
        for k, (u, v) in enumerate(c.edges):
            a, b = p[u], p[v]
            img = (a, b) if a < b else (b, a)
            if img not in rank:
                raise ContractError("permutation does not act on the coloring domain")
            if cols[rank[img]] != cols[k]:
                return False
        return True
    if isinstance(c, TotalColoring):
        return preserves(p, c.vertex_part) and preserves(p, c.edge_part)
    raise ContractError(f"unsupported coloring type {type(c).__name__}")


def stabilizer(A: AutGroup, c) -> AutGroup:
    """Subgroup of A preserving the coloring.  Trivial iff c is distinguishing."""
    kept = tuple(p for p in A.elements if preserves(p, c))
    return AutGroup(n=A.n, elements=kept)
