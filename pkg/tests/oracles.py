"""Independent brute-force oracles used to check the enumeration paths.

Everything here recomputes answers from first principles (subset scans,
truth tables, canonical clause sets) and deliberately avoids the
package's own algorithms.
"""

from __future__ import annotations

from itertools import combinations, product


# ---------------------------------------------------------------- vertex cover

def brute_vertex_covers(g, k: int) -> set[tuple[int, ...]]:
    """All vertex covers of size <= k by scanning every subset."""
    incident = [0] * g.vertex_count
    full = 0
    for idx, (u, v) in enumerate(sorted(g.edges)):
        incident[u] |= 1 << idx
        incident[v] |= 1 << idx
        full |= 1 << idx
    covers = set()
    for size in range(k + 1):
        for subset in combinations(range(g.vertex_count), size):
            mask = 0
            for v in subset:
                mask |= incident[v]
            if mask == full:
                covers.add(subset)
    return covers


# ------------------------------------------------------------------- formulas

def all_models(phi) -> set[tuple[int, ...]]:
    """Truth-table evaluation of a GammaFormula, independent of brute_models."""
    if phi.unsat:
        return set()
    models = set()
    for m in product((0, 1), repeat=phi.var_count):
        ok = True
        for c in phi.constraints:
            if tuple(m[v] for v in c.vars) not in c.relation.tuples:
                ok = False
                break
        if ok:
            models.add(m)
    return models


def max_model_weight(phi):
    """Maximum model weight or None when unsatisfiable."""
    models = all_models(phi)
    return max((sum(m) for m in models), default=None)


def heavy_model_sets(phi, k: int) -> set[tuple[int, ...]]:
    """Models of weight >= k as sorted tuples of true-variable indices."""
    return {
        tuple(i for i, b in enumerate(m) if b)
        for m in all_models(phi)
        if sum(m) >= k
    }


# ------------------------------------------------------------------ backdoors

def brute_backdoors(clauses, n: int, k: int) -> set[tuple[int, ...]]:
    """All size-k strong Horn-backdoor sets by scanning every C(n,k) subset.

    ``clauses`` is an iterable of literal collections (signed 1-based ints).
    """
    out = set()
    for subset in combinations(range(1, n + 1), k):
        chosen = set(subset)
        if all(
            sum(1 for lit in clause if lit > 0 and lit not in chosen) <= 1
            for clause in clauses
        ):
            out.add(subset)
    return out


# ------------------------------------------------- definability of relations

def _models_of_clauses(arity: int, clauses) -> frozenset[tuple[int, ...]]:
    return frozenset(
        t for t in product((0, 1), repeat=arity) if all(c(t) for c in clauses)
    )


def _entailed(relation, clause) -> bool:
    return all(clause(t) for t in relation.tuples)


def horn_definable(relation) -> bool:
    """Is there a Horn CNF whose model set is exactly the relation?

    Uses the canonical construction: conjoin every Horn clause the
    relation entails and compare model sets.
    """
    return _cnf_definable(relation, max_positive=1, max_negative=None)


def dual_horn_definable(relation) -> bool:
    return _cnf_definable(relation, max_positive=None, max_negative=1)


def bijunctive_definable(relation) -> bool:
    return _cnf_definable(relation, max_positive=None, max_negative=None, max_width=2)


def _cnf_definable(relation, max_positive, max_negative, max_width=None) -> bool:
    n = relation.arity
    clauses = []
    for pattern in product((0, 1, None), repeat=n):  # None = absent, 1 = positive
        lits = [(i, p) for i, p in enumerate(pattern) if p is not None]
        if not lits:
            continue
        if max_width is not None and len(lits) > max_width:
            continue
        pos = sum(1 for _, p in lits if p == 1)
        neg = len(lits) - pos
        if max_positive is not None and pos > max_positive:
            continue
        if max_negative is not None and neg > max_negative:
            continue
        clause = lambda t, lits=lits: any(t[i] == p for i, p in lits)
        if _entailed(relation, clause):
            clauses.append(clause)
    return _models_of_clauses(n, clauses) == relation.tuples


def affine_definable(relation) -> bool:
    """Is the relation the solution set of a GF(2) linear system?"""
    n = relation.arity
    checks = []
    for mask in product((0, 1), repeat=n):
        if not any(mask):
            continue
        for rhs in (0, 1):
            check = lambda t, mask=mask, rhs=rhs: (
                sum(a & b for a, b in zip(mask, t)) % 2 == rhs
            )
            if _entailed(relation, check):
                checks.append(check)
    if not relation.tuples:
        # the empty relation needs an inconsistent system, e.g. 0 = 1
        return True
    return _models_of_clauses(n, checks) == relation.tuples
