"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import time

from oracles import brute_backdoors, brute_vertex_covers, heavy_model_sets, max_model_weight
from oracles import affine_definable, bijunctive_definable, dual_horn_definable, horn_definable
from fptenum.backdoor import BranchStats as SbdsStats
from fptenum.backdoor import CnfFormula, generate_sbds
from fptenum.cli import main, profile_vc_family
from fptenum.generators import (
    random_affine_relation,
    random_cnf,
    random_dual_horn_relation,
    random_formula,
    random_graph,
    random_two_clause_relation,
)
from fptenum.maxones import ORACLES, BranchStats, enumerate_maxones
from fptenum.relations import classify_relation
from fptenum.vertexcover import Graph, buss_kernelize, enumerate_all_vcs
from test_relations import relation_from_bits


def report(number: int, description: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {description}")
    assert ok, f"criterion {number}: {description}"


def test_criterion_1_vc_oracle_equivalence():
    start = time.monotonic()
    ok = True
    for seed in range(100):
        rng = random.Random(seed)
        n = rng.randint(2, 18)
        m = rng.randint(0, min(32, n * (n - 1) // 2))
        k = rng.randint(0, 5)
        g = random_graph(n, m, seed * 31 + 7)
        got = list(enumerate_all_vcs(g, k))
        if len(got) != len(set(got)) or set(got) != brute_vertex_covers(g, k):
            ok = False
            break
    elapsed = time.monotonic() - start
    report(1, f"vertex-cover oracle equivalence on 100 graphs ({elapsed:.1f}s)", ok and elapsed < 60)


def test_criterion_2_buss_kernel_uniqueness():
    ok = True
    for seed in range(50):
        rng = random.Random(seed)
        n = rng.randint(4, 14)
        g = random_graph(n, rng.randint(0, min(30, n * (n - 1) // 2)), seed * 17 + 3)
        k = rng.randint(0, 5)
        baseline = buss_kernelize(g, k)
        for order_seed in range(20):
            other = buss_kernelize(g, k, rng=random.Random(order_seed * 101 + seed))
            if other.infeasible != baseline.infeasible:
                ok = False
            elif not baseline.infeasible and other != baseline:
                ok = False
    report(2, "Buss kernel unique under 20 random rule orders x 50 instances", ok)


def test_criterion_3_worked_examples():
    star = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    star_covers = set(enumerate_all_vcs(star, 2))
    triangle = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    tri_covers = set(enumerate_all_vcs(triangle, 2))
    mixed = CnfFormula(3, (frozenset({1, 2, -3}),))
    ok = (
        star_covers == {(0,), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)}
        and tri_covers == {(0, 1), (0, 2), (1, 2)}
        and list(generate_sbds(mixed, 1)) == [(1,), (2,)]
        and list(generate_sbds(mixed, 2)) == [(1, 2), (1, 3), (2, 3)]
    )
    report(3, "worked examples exact (star, triangle, backdoor singletons/pairs)", ok)


def test_criterion_4_delay_boundedness_proxy():
    sizes = [100, 200, 400, 800]
    report_data = profile_vc_family(k=3, sizes=sizes, seed=42, repeats=5)
    counts = [run["count"] for run in report_data["runs"]]
    gaps = [run["max_gap_ns"] for run in report_data["runs"]]
    ratios = [r["ratio"] for r in report_data["ratios"]]
    growing = all(a < b for a, b in zip(counts, counts[1:]))
    bounded = all(r <= 8.0 for r in ratios)
    detail = ", ".join(f"n={n} gap={g}ns" for n, g in zip(sizes, gaps))
    report(
        4,
        f"allVC max-gap ratio <= 8 at each doubling while counts grow ({detail}; "
        f"ratios={[round(r, 2) for r in ratios]})",
        growing and bounded and len(ratios) == 3,
    )


MAKERS = {
    "dual_horn_propagation": random_dual_horn_relation,
    "affine_gauss": random_affine_relation,
    "branch_and_bound": random_two_clause_relation,
}


def test_criterion_5_maxones_oracle_agreement():
    ok = True
    for kind, maker in MAKERS.items():
        oracle = ORACLES[kind]
        for seed in range(500):
            rng = random.Random(seed * 3 + 11)
            n = rng.randint(3, 9)
            phi = random_formula(n, rng.randint(1, 4), seed * 7 + 1, maker)
            best = max_model_weight(phi)
            for w in range(n + 1):
                expected = best is not None and best >= w
                if oracle.decide(phi, w) != expected:
                    ok = False
    report(5, "all three exact oracles agree with brute force on 500 formulas each", ok)


def test_criterion_6_maxones_enumerator_equivalence():
    ok = True
    for kind, maker in MAKERS.items():
        oracle = ORACLES[kind]
        for seed in range(200):
            rng = random.Random(seed * 5 + 1)
            n = rng.randint(3, 7)
            phi = random_formula(n, rng.randint(2, 5), seed * 13 + 5, maker)
            for k in range(n + 1):
                got = list(enumerate_maxones(oracle, phi, k))
                if len(got) != len(set(got)) or set(got) != heavy_model_sets(phi, k):
                    ok = False
    # regression: the empty formula on 2 variables with k=0 emits all 4 models
    from fptenum.relations import GammaFormula

    empty = GammaFormula(2, ())
    got = list(enumerate_maxones(ORACLES["bruteforce"], empty, 0))
    ok = ok and set(got) == {(), (0,), (1,), (0, 1)} and len(got) == 4
    report(6, "enumerated family equals weight-filtered model set (200/class + base case)", ok)


def test_criterion_7_backdoor_oracle_equivalence():
    ok = True
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(3, 14)
        m = rng.randint(1, 30)
        k = rng.randint(0, 4)
        phi = random_cnf(n, m, seed * 3 + 1)
        got = list(generate_sbds(phi, k))
        if len(got) != len(set(got)):
            ok = False
        if set(got) != brute_backdoors(phi.clauses, n, k):
            ok = False
        if got != sorted(got):
            ok = False
    report(7, "backdoor enumeration equals C(n,k) scan, lexicographic, on 200 CNFs", ok)


def test_criterion_8_guarded_branch_liveness():
    ok = True
    for kind, maker in MAKERS.items():
        oracle = ORACLES[kind]
        for seed in range(50):
            rng = random.Random(seed)
            phi = random_formula(rng.randint(3, 7), rng.randint(1, 4), seed * 9 + 4, maker)
            stats = BranchStats()
            list(enumerate_maxones(oracle, phi, rng.randint(0, 5), stats))
            if stats.dead_branches != 0:
                ok = False
    for seed in range(100):
        rng = random.Random(seed + 1000)
        phi = random_cnf(rng.randint(3, 10), rng.randint(1, 20), seed)
        stats = SbdsStats()
        list(generate_sbds(phi, rng.randint(0, 4), stats))
        if stats.dead_branches != 0:
            ok = False
    report(8, "every entered branch emits >= 1 solution in both search trees", ok)


def test_criterion_9_classifier_vs_definability():
    ok = True
    for bits in range(16):
        r = relation_from_bits(2, bits)
        flags = classify_relation(r)
        if (
            flags.horn != horn_definable(r)
            or flags.dual_horn != dual_horn_definable(r)
            or flags.bijunctive != bijunctive_definable(r)
            or flags.affine != affine_definable(r)
        ):
            ok = False
    rng = random.Random(123)
    for _ in range(200):
        r = relation_from_bits(3, rng.randrange(1 << 8))
        flags = classify_relation(r)
        if (
            flags.horn != horn_definable(r)
            or flags.dual_horn != dual_horn_definable(r)
            or flags.bijunctive != bijunctive_definable(r)
            or flags.affine != affine_definable(r)
        ):
            ok = False
    report(9, "closure flags match definability search (16 arity-2 + 200 arity-3)", ok)


def test_criterion_10_parser_contract(tmp_path, capsys):
    from fptenum.formats import (
        format_dimacs_cnf,
        format_gamma_formula,
        format_graph,
        parse_dimacs_cnf,
        parse_gamma_formula,
        parse_graph,
    )

    ok = True
    cnf_text = "c x\np cnf 3 2\n-1 2 0\n1 2 -3 0\n"
    once = format_dimacs_cnf(parse_dimacs_cnf(cnf_text))
    ok = ok and format_dimacs_cnf(parse_dimacs_cnf(once)) == once
    graph_text = "p graph 4 2\ne 2 3\ne 0 1\n"
    once = format_graph(parse_graph(graph_text))
    ok = ok and format_graph(parse_graph(once)) == once
    gamma_text = "nvars 2\nrelation OR 2 { 01 10 11 }\nconstraint OR 0 1\n"
    once = format_gamma_formula(*parse_gamma_formula(gamma_text))
    ok = ok and format_gamma_formula(*parse_gamma_formula(once)) == once

    error_cases = [
        (["vc", "--graph"], "p graph 2 1\ne 0 0\n"),  # self-loop
        (["vc", "--graph"], "p graph 2 2\ne 0 1\ne 1 0\n"),  # duplicate edge
        (["vc", "--graph"], "p graph 2 2\ne 0 1\n"),  # count mismatch
        (["backdoor", "--cnf"], "p cnf 2 1\n1 -1 0\n"),  # tautology
        (["backdoor", "--cnf"], "p cnf 1 1\n2 0\n"),  # literal range
        (["backdoor", "--cnf"], "p qqq 1 1\n1 0\n"),  # bad header
        (["maxones", "--formula"], "nvars 2\nrelation R 2 { 011 }\nconstraint R 0 1\n"),
        (["maxones", "--formula"], "nvars 2\nconstraint R 0 1\n"),
        (["maxones", "--formula"], "nvars 2\nrelation R 2 { 01 }\nconstraint R 0 9\n"),
    ]
    for i, (cmd, text) in enumerate(error_cases):
        path = tmp_path / f"bad{i}.txt"
        path.write_text(text)
        code = main(cmd + [str(path), "-k", "1"])
        err = capsys.readouterr().err
        if code != 2 or "line " not in err:
            ok = False
    report(10, "round-trip idempotence; every error case exits 2 with a line number", ok)
