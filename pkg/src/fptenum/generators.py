"""Seeded random instance generators for tests and delay profiling.

Every generator is deterministic in its seed so failures are
reproducible from the command line.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .backdoor import CnfFormula
from .relations import BooleanRelation, Constraint, GammaFormula
from .vertexcover import Graph


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with n vertices and m edges."""
    rng = random.Random(seed)
    all_edges = list(combinations(range(n), 2))
    if m > len(all_edges):
        raise ValueError("too many edges requested")
    return Graph(n, frozenset(rng.sample(all_edges, m)))


def vc_delay_family(n: int, k: int, seed: int) -> Graph:
    """Sparse graph family used for delay-growth measurements.

    One high-degree star (its center is forced into every small cover),
    one disjoint edge (a non-trivial kernel), and isolated padding
    vertices; the number of covers of size <= k grows linearly with n
    while the kernel stays parameter-sized. Labels are randomly permuted.
    """
    if n < k + 10:
        raise ValueError("family needs n >= k + 10")
    rng = random.Random(seed ^ n)
    perm = list(range(n))
    rng.shuffle(perm)
    leaves = n // 2
    edges = [(perm[0], perm[i]) for i in range(1, leaves + 1)]
    edges.append((perm[leaves + 1], perm[leaves + 2]))
    return Graph.from_edges(n, edges)


def random_cnf(n: int, m: int, seed: int, max_clause: int = 4) -> CnfFormula:
    """Random CNF without tautological clauses or duplicate literals."""
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        width = rng.randint(1, min(max_clause, n))
        vars_ = rng.sample(range(1, n + 1), width)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in vars_))
    return CnfFormula(n, tuple(clauses))


def _random_relation(arity: int, rng: random.Random, density: float = 0.5) -> BooleanRelation:
    tuples = frozenset(
        t for t in product((0, 1), repeat=arity) if rng.random() < density
    )
    return BooleanRelation(arity, tuples)


def _close_under(r: BooleanRelation, op) -> BooleanRelation:
    tuples = set(r.tuples)
    changed = True
    while changed:
        changed = False
        for a in list(tuples):
            for b in list(tuples):
                c = tuple(op(x, y) for x, y in zip(a, b))
                if c not in tuples:
                    tuples.add(c)
                    changed = True
    return BooleanRelation(r.arity, frozenset(tuples))


def random_dual_horn_relation(arity: int, rng: random.Random) -> BooleanRelation:
    """Random nonempty OR-closed relation (OR-closure of a random table)."""
    while True:
        r = _close_under(_random_relation(arity, rng), lambda a, b: a | b)
        if r.tuples:
            return r


def random_affine_relation(arity: int, rng: random.Random) -> BooleanRelation:
    """Random nonempty affine relation: a coset of a random GF(2) subspace."""
    while True:
        base = [t for t in product((0, 1), repeat=arity) if rng.random() < 0.4]
        offset = tuple(rng.randint(0, 1) for _ in range(arity))
        span = {tuple([0] * arity)}
        for g in base:
            span |= {tuple(a ^ b for a, b in zip(g, s)) for s in span}
        tuples = frozenset(tuple(a ^ b for a, b in zip(s, offset)) for s in span)
        if tuples:
            return BooleanRelation(arity, tuples)


def random_two_clause_relation(arity: int, rng: random.Random) -> BooleanRelation:
    """Models of a random conjunction of at most two 2-clauses (bijunctive)."""
    clauses = []
    for _ in range(rng.randint(1, 2)):
        i, j = rng.randrange(arity), rng.randrange(arity)
        si, sj = rng.randint(0, 1), rng.randint(0, 1)
        clauses.append((i, si, j, sj))
    tuples = frozenset(
        t
        for t in product((0, 1), repeat=arity)
        if all(t[i] == si or t[j] == sj for i, si, j, sj in clauses)
    )
    return BooleanRelation(arity, tuples)


def random_formula(
    n: int,
    n_constraints: int,
    seed: int,
    relation_maker,
    max_arity: int = 3,
) -> GammaFormula:
    """Random Gamma-formula whose relations come from ``relation_maker``."""
    rng = random.Random(seed)
    constraints = []
    for i in range(n_constraints):
        arity = rng.randint(1, max_arity)
        rel = relation_maker(arity, rng)
        vars_ = tuple(rng.randrange(n) for _ in range(arity))
        constraints.append(Constraint(f"R{i}", rel, vars_))
    return GammaFormula(n, tuple(constraints))
