#!/usr/bin/env python3
"""Regenerate data/connected_order7.g6.

Every connected graph on 7 vertices arises by attaching a new vertex to a
connected graph on 6 vertices (remove any non-cutvertex to see this), so
extending each 6-vertex class by every nonempty neighbor subset and
deduplicating on canonical form enumerates each 7-vertex class exactly once.
The known class count is 853.
"""

from __future__ import annotations

import sys
from pathlib import Path

from symbreak.graph_core import from_edge_list, parse_graph6
from symbreak.harness import CorpusSpec, enumerate_corpus
from symbreak.symmetry import canonical_form

EXPECTED_CLASSES = 853


def connected_order7() -> list[str]:
    base = enumerate_corpus(CorpusSpec(min_order=6, max_order=6))
    reps: set[str] = set()
    for G in base:
        for subset in range(1, 1 << 6):
            extra = [(v, 6) for v in range(6) if (subset >> v) & 1]
            H = from_edge_list(7, list(G.edges) + extra)
            reps.add(canonical_form(H))
    return sorted(reps)


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "data" / "connected_order7.g6"
    lines = connected_order7()
    if len(lines) != EXPECTED_CLASSES:
        print(f"expected {EXPECTED_CLASSES} classes, got {len(lines)}", file=sys.stderr)
        return 1
    for line in lines:
        assert parse_graph6(line).n == 7
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="ascii", newline="\n") as fh:
        fh.write(">>connected graphs on 7 vertices, one canonical graph6 line each\n")
        for line in lines:
            fh.write(line + "\n")
    print(f"wrote {len(lines)} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
