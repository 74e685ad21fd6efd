"""Enumeration of all models of weight >= k by self-reduction.

The enumerator branches on the highest remaining variable, true first,
and guards every branch with an exact weight-decision oracle on the
substituted formula, so entered branches always lead to an emission.
Solutions are emitted only when no variable remains; the weight budget is
clamped at zero so models heavier than k are not cut off.

Four interchangeable oracles decide "is there a model of weight >= w":
brute force, minimal-model propagation for OR-closed (dual-Horn)
relations, GF(2) elimination for affine relations, and a depth-first
branch and bound that accepts any formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .relations import (
    BRUTE_VAR_GUARD,
    BooleanRelation,
    GammaFormula,
    VariableGuardError,
    classify_relation,
    substitute,
)

FREE_VAR_GUARD = 22


class OracleClassError(ValueError):
    """The formula is outside the class an oracle requires."""


@dataclass(frozen=True)
class WeightOracle:
    kind: str
    decide: Callable[[GammaFormula, int], bool]


@dataclass
class BranchStats:
    """Counters for the guarded-branch liveness audit."""

    branches_entered: int = 0
    dead_branches: int = 0
    emissions: int = 0


def _or_closed(r: BooleanRelation) -> bool:
    return all(
        tuple(x | y for x, y in zip(a, b)) in r.tuples
        for a in r.tuples
        for b in r.tuples
    )


def _consistent_tuples(c) -> list[tuple[int, ...]]:
    """Tuples of a constraint's relation consistent with repeated variables."""
    out = []
    for t in c.relation.tuples:
        ok = True
        seen: dict[int, int] = {}
        for v, b in zip(c.vars, t):
            if seen.setdefault(v, b) != b:
                ok = False
                break
        if ok:
            out.append(t)
    return out


def max_weight_dual_horn(phi: GammaFormula) -> int | str:
    """Maximum model weight of an all-OR-closed formula, or "unsat".

    Complement every relation (bit-flip all tuples), making each
    AND-closed; the complemented formula then has a unique minimal model
    found by raising a lower bound through the constraints to a fixed
    point. The answer is n minus that minimal weight.
    """
    for c in phi.constraints:
        if not _or_closed(c.relation):
            raise OracleClassError(f"relation {c.name} is not OR-closed")
    if phi.unsat:
        return "unsat"

    comp = [
        (c.vars, [tuple(1 - b for b in t) for t in _consistent_tuples(c)])
        for c in phi.constraints
    ]
    bound = [0] * phi.var_count
    changed = True
    while changed:
        changed = False
        for vs, tuples in comp:
            dominating = [
                t for t in tuples if all(b >= bound[v] for v, b in zip(vs, t))
            ]
            if not dominating:
                return "unsat"
            meet = [min(t[i] for t in dominating) for i in range(len(vs))]
            for v, b in zip(vs, meet):
                if b > bound[v]:
                    bound[v] = b
                    changed = True
    return phi.var_count - sum(bound)


def _relation_parity_checks(r: BooleanRelation) -> list[tuple[int, int]]:
    """All GF(2) parity checks (mask, rhs) satisfied by every tuple of r.

    For an affine (XOR-closed) nonempty r the checks define exactly r.
    """
    if not r.tuples:
        raise OracleClassError("empty relation has no affine description")
    tuples = sorted(r.tuples)
    t0 = tuples[0]
    # null space of the difference vectors t xor t0
    diffs = [
        sum((a ^ b) << i for i, (a, b) in enumerate(zip(t, t0))) for t in tuples[1:]
    ]
    n = r.arity
    # eliminate to find all masks orthogonal to every diff
    basis: list[tuple[int, int]] = []
    for mask in range(1, 1 << n):
        if all(bin(mask & d).count("1") % 2 == 0 for d in diffs):
            rhs = bin(mask & sum(b << i for i, b in enumerate(t0))).count("1") % 2
            basis.append((mask, rhs))
    return basis


def _gf2_solve_max_weight(rows: list[tuple[int, int]], n: int) -> int | str:
    """Maximum weight over solutions of a GF(2) system, or "unsat".

    Rows are (coefficient bitmask over n variables, rhs bit). Free
    variables are exhausted (guarded), pivots back-substituted.
    """
    work = [list(row) for row in rows]
    pivots: list[tuple[int, int]] = []  # (column, row index)
    row_idx = 0
    for col in range(n):
        pivot = next(
            (r for r in range(row_idx, len(work)) if (work[r][0] >> col) & 1), None
        )
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r][0] >> col) & 1):
                work[r][0] ^= work[row_idx][0]
                work[r][1] ^= work[row_idx][1]
        pivots.append((col, row_idx))
        row_idx += 1
    if any(mask == 0 and rhs == 1 for mask, rhs in work):
        return "unsat"

    pivot_cols = {col for col, _ in pivots}
    free_cols = [c for c in range(n) if c not in pivot_cols]
    if len(free_cols) > FREE_VAR_GUARD:
        raise VariableGuardError(
            f"{len(free_cols)} free variables exceed the guard {FREE_VAR_GUARD}"
        )
    best = -1
    for bits in product((0, 1), repeat=len(free_cols)):
        x = 0
        for c, b in zip(free_cols, bits):
            x |= b << c
        for col, r in pivots:
            rest = work[r][0] & ~(1 << col)
            val = work[r][1] ^ (bin(rest & x).count("1") % 2)
            x |= val << col
        best = max(best, bin(x).count("1"))
    return best


def max_weight_affine(phi: GammaFormula) -> int | str:
    """Maximum model weight of an all-affine formula, or "unsat"."""
    if phi.unsat:
        return "unsat"
    rows: list[tuple[int, int]] = []
    for c in phi.constraints:
        flags = classify_relation(c.relation)
        if not flags.affine:
            raise OracleClassError(f"relation {c.name} is not affine")
        if not c.relation.tuples:
            return "unsat"
        for mask, rhs in _relation_parity_checks(c.relation):
            # map local coordinates to global variables; repeats XOR out
            gmask = 0
            for i, v in enumerate(c.vars):
                if (mask >> i) & 1:
                    gmask ^= 1 << v
            rows.append((gmask, rhs))
    return _gf2_solve_max_weight(rows, phi.var_count)


def _decide_bruteforce(phi: GammaFormula, w: int) -> bool:
    if phi.var_count > BRUTE_VAR_GUARD:
        raise VariableGuardError(f"var_count {phi.var_count} exceeds {BRUTE_VAR_GUARD}")
    if phi.unsat:
        return False
    for m in product((0, 1), repeat=phi.var_count):
        if sum(m) >= w and all(c.satisfied_by(m) for c in phi.constraints):
            return True
    return False


def _decide_dual_horn(phi: GammaFormula, w: int) -> bool:
    mw = max_weight_dual_horn(phi)
    return mw != "unsat" and mw >= w


def _decide_affine(phi: GammaFormula, w: int) -> bool:
    mw = max_weight_affine(phi)
    return mw != "unsat" and mw >= w


def _decide_branch_and_bound(phi: GammaFormula, w: int) -> bool:
    """Depth-first search for a model of weight >= w, true branch first.

    Prunes when the optimistic weight (trues so far plus unassigned
    variables) falls below w or some constraint has no tuple consistent
    with the partial assignment.
    """
    if phi.unsat:
        return False
    n = phi.var_count
    assignment: list[int | None] = [None] * n

    def consistent() -> bool:
        for c in phi.constraints:
            ok = False
            for t in c.relation.tuples:
                if all(
                    assignment[v] is None or assignment[v] == b
                    for v, b in zip(c.vars, t)
                ):
                    ok = True
                    break
            if not ok:
                return False
        return True

    def dfs(i: int, trues: int) -> bool:
        if trues + (n - i) < w:
            return False
        if not consistent():
            return False
        if i == n:
            return True
        for val in (1, 0):
            assignment[i] = val
            if dfs(i + 1, trues + val):
                assignment[i] = None
                return True
        assignment[i] = None
        return False

    return dfs(0, 0)


ORACLES: dict[str, WeightOracle] = {
    "bruteforce": WeightOracle("bruteforce", _decide_bruteforce),
    "dual_horn_propagation": WeightOracle("dual_horn_propagation", _decide_dual_horn),
    "affine_gauss": WeightOracle("affine_gauss", _decide_affine),
    "branch_and_bound": WeightOracle("branch_and_bound", _decide_branch_and_bound),
}


def has_maxones(oracle: WeightOracle, phi: GammaFormula, w: int) -> bool:
    """True iff phi has a model of weight >= max(w, 0)."""
    if phi.unsat:
        return False
    return oracle.decide(phi, max(w, 0))


def select_oracle(phi: GammaFormula) -> WeightOracle:
    """Pick the strongest applicable oracle for phi's relation classes."""
    flags = [classify_relation(c.relation) for c in phi.constraints]
    if all(f.dual_horn for f in flags):
        return ORACLES["dual_horn_propagation"]
    if all(f.affine for f in flags):
        return ORACLES["affine_gauss"]
    return ORACLES["branch_and_bound"]


def enumerate_maxones(
    oracle: WeightOracle,
    phi: GammaFormula,
    k: int,
    stats: BranchStats | None = None,
) -> Iterator[tuple[int, ...]]:
    """Emit every model of phi of weight >= k exactly once.

    Models are emitted as sorted tuples of true-variable indices, in the
    order induced by branching true-first on descending variable indices.
    """

    def gen(sub: GammaFormula, trues: tuple[int, ...], w: int, p: int) -> Iterator[tuple[int, ...]]:
        if p == 0:
            if stats:
                stats.emissions += 1
            yield tuple(sorted(trues))
            return
        var = p - 1
        for val, budget in ((1, w - 1), (0, w)):
            branch = substitute(sub, var, val)
            if has_maxones(oracle, branch, budget):
                if stats:
                    stats.branches_entered += 1
                count = 0
                new_trues = trues + (var,) if val else trues
                for sol in gen(branch, new_trues, max(budget, 0), p - 1):
                    count += 1
                    yield sol
                if stats and count == 0:
                    stats.dead_branches += 1

    if has_maxones(oracle, phi, k):
        yield from gen(phi, (), k, phi.var_count)
