"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s``.  The full suite computes
every value with certified exhaustive search; nothing is asserted that was
not measured here or cross-checked against an independent oracle.
"""

import itertools
import json
import math

import pytest

from symbreak.cli import main as cli_main
from symbreak.graph_core import (
    bipartition,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_irreducible,
    max_degree,
    star_graph,
    to_graph6,
)
from symbreak.harness import CorpusSpec, run_check
from symbreak.invariants import (
    INVARIANT_FUNCTIONS,
    distinguishing_chromatic_index,
    distinguishing_chromatic_number,
    distinguishing_number,
)
from symbreak.symmetry import automorphism_group
from symbreak.transforms import endline_graph, subdivision_graph

from oracles import backtrack_automorphisms, brute_automorphisms, naive_invariant

BUILTIN = CorpusSpec(min_order=3, max_order=6)


def _verdict(num: int, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    assert ok, detail


def test_criterion_1_middle_graph_distinguishing_chromatic_number():
    report = run_check("thm-2.8", BUILTIN)
    counts = {3: 0, 4: 0, 5: 0, 6: 0}
    for r in report.records:
        counts[r["n"]] += 1
        assert r["values"]["certified"], r
    ok = (
        report.summary["failed"] == 0
        and counts == {3: 2, 4: 6, 5: 21, 6: 112}
        and sum(1 for r in report.records if r["values"]["exception"]) == 4
    )
    _verdict(
        1,
        ok,
        f"chiD(middle) = max_degree+1 (+2 on the 4 exceptions) certified on all "
        f"{report.summary['checked']} connected graphs of order 3..6",
    )


def test_criterion_2_subdivision_equals_total(order7_path):
    builtin = run_check("thm-3.3", BUILTIN)
    seven = run_check(
        "thm-3.3",
        CorpusSpec(source="file", path=order7_path, max_order=62),
        jobs=4,
    )
    ok = (
        builtin.summary["failed"] == 0
        and builtin.summary["checked"] == 141
        and seven.summary["failed"] == 0
        and seven.summary["checked"] == 853
    )
    _verdict(
        2,
        ok,
        f"D(subdivision) = total distinguishing number on {builtin.summary['checked']} "
        f"builtin graphs and {seven.summary['checked']} order-7 corpus graphs",
    )


def test_criterion_3_sqrt_bound_and_star_sharpness():
    report = run_check("cor-3.5", BUILTIN)
    stars = [r for r in report.records if r["note"].startswith("star")]
    measured = [r["values"]["D_subdivision"] for r in stars]
    ok = report.summary["failed"] == 0 and measured == [2, 2, 2, 3, 3, 3, 3, 3]
    # independent cross-check of the star values for m <= 5: plain DFS
    # automorphisms plus an unpruned scan over all colorings
    for m, expect in [(2, 2), (3, 2), (4, 2), (5, 3)]:
        S = subdivision_graph(star_graph(m))
        got = naive_invariant(S, "D", backtrack_automorphisms(S))
        ok = ok and got == expect == math.isqrt(m - 1) + 1
    _verdict(
        3,
        ok,
        "D(subdivision) <= ceil(sqrt(max_degree)) with zero violations; "
        f"star values m=2..9 are {measured}, oracle-confirmed for m<=5",
    )


def test_criterion_4_exceptional_endline_index():
    details = []
    ok = True
    for G in (cycle_graph(4), cycle_graph(6), complete_graph(4), complete_bipartite_graph(3, 3)):
        delta = max_degree(G)
        iv = distinguishing_chromatic_index(endline_graph(G))
        # certified means every palette below the value, including delta+1,
        # was exhausted without finding a proper distinguishing coloring
        ok = ok and iv.value == delta + 2 and iv.certified
        details.append(f"{to_graph6(G)}:{iv.value}")
    _verdict(
        4,
        ok,
        "chiDp(endline) = max_degree+2 certified (exhaustion below) for all four "
        f"exceptional graphs [{', '.join(details)}]",
    )


def test_criterion_5_two_chromatic_distinguishing_forces_group_order_two():
    report = run_check("thm-4.5", BUILTIN)
    applicable = [
        r
        for r in report.records
        if r["values"]["D"] != 1 and r["values"]["chiD"] == 2
    ]
    ok = (
        report.summary["failed"] == 0
        and len(applicable) > 0
        and all(r["values"]["aut_order"] == 2 for r in applicable)
    )
    _verdict(
        5,
        ok,
        f"of {report.summary['checked']} graphs, {len(applicable)} satisfy D != 1 "
        "and chiD = 2; every one has automorphism group of order exactly 2",
    )


def test_criterion_6_subdivision_chromatic_distinguishing_cases():
    report = run_check("thm-4.7", BUILTIN)
    k5p = [r for r in report.records if r["note"] == "sharpness: endline of K5"]
    c3 = [r for r in report.records if r["status"] == "paper-inconsistent"]
    cycle_rows = [r for r in report.records if r["note"].startswith("cycle")]
    ok = (
        report.summary["failed"] == 0
        and len(k5p) == 1
        and k5p[0]["values"]["D"] == 3
        and k5p[0]["values"]["chiD_subdivision"] == 3
        and len(c3) == 1
        and c3[0]["values"]["cycle"] == 3
        and c3[0]["values"]["chiD_subdivision"] == 4
        and c3[0]["values"]["claimed_values"] == [3, 4]
        and len(cycle_rows) == 6
    )
    measured_c6 = c3[0]["values"]["chiD_subdivision"] if c3 else None
    _verdict(
        6,
        ok,
        f"constructions certified on {report.summary['checked']} rows; "
        f"chiD(S(K5+)) = D(K5+) = 3; cycle table 3..8 exact with the n=3 row "
        f"flagged paper-inconsistent (measured chiD(C6) = {measured_c6}, claims 3 vs 4)",
    )


def test_criterion_7_oracle_equivalence(corpus):
    checked = 0
    ok = True
    for n in range(1, 6):
        for G in corpus[n]:
            autos = brute_automorphisms(G)
            for kind in ("chi", "D", "chiD", "Dp", "chiDp", "Dpp"):
                if kind in ("Dp", "chiDp") and (not G.num_edges or G.n == 2):
                    continue  # edgeless, or the degenerate single-edge case
                if kind == "Dpp" and not G.num_edges:
                    continue
                got = INVARIANT_FUNCTIONS[kind](G).value
                want = naive_invariant(G, kind, autos)
                ok = ok and got == want
                checked += 1
    groups_checked = 0
    for n in range(1, 7):
        for G in corpus[n]:
            got = sorted(automorphism_group(G).elements)
            want = sorted(brute_automorphisms(G))
            ok = ok and got == want
            groups_checked += 1
    _verdict(
        7,
        ok,
        f"{checked} invariant values match the unpruned brute-force oracle "
        f"(connected graphs, order <= 5); {groups_checked} automorphism groups "
        "match the factorial-filter oracle (order <= 6)",
    )


def test_criterion_8_structural_properties():
    iso = run_check("fact-2.3-1", BUILTIN)
    pendant = run_check("lemma-2.4", BUILTIN)
    classes = run_check("lemma-4.2", BUILTIN)
    pointwise = run_check("lemma-4.3", BUILTIN)
    split = run_check("lemma-4.4", BUILTIN)
    ok = all(
        r.summary["failed"] == 0
        for r in (iso, pendant, classes, pointwise, split)
    )
    _verdict(
        8,
        ok,
        "middle = line-of-endline isomorphism on all 141 graphs; pendant-fixing, "
        "class-preservation, pointwise-fixing and original-class properties hold "
        f"({pendant.summary['checked']}, {classes.summary['checked']}, "
        f"{pointwise.summary['checked']}, {split.summary['checked']} rows, 0 failures)",
    )


def test_criterion_9_determinism(tmp_path):
    out1 = tmp_path / "jobs1.json"
    out4 = tmp_path / "jobs4.json"
    code1 = cli_main(
        ["verify", "--theorem", "thm-3.3", "--builtin", "6", "--jobs", "1", "--out", str(out1)]
    )
    code4 = cli_main(
        ["verify", "--theorem", "thm-3.3", "--builtin", "6", "--jobs", "4", "--out", str(out4)]
    )
    identical = out1.read_bytes() == out4.read_bytes()
    ok = code1 == 0 and code4 == 0 and identical
    _verdict(
        9,
        ok,
        "verify --theorem thm-3.3 --builtin 6 with --jobs 1 and --jobs 4 "
        f"produced byte-identical JSON reports ({len(out1.read_bytes())} bytes)",
    )
