"""Enumeration of all strong Horn-backdoor sets of size exactly k.

A variable set S is a strong Horn-backdoor set when deleting every
occurrence of its variables leaves a formula whose clauses each have at
most one positive literal. Deleting more occurrences can only shrink
clauses, so backdoor sets are upward closed; the exactly-k padding test
below relies on that monotonicity.

Enumeration branches on the smallest still-eligible variable, include
before exclude, so sets come out in lexicographic order; every branch is
guarded by an exact existence check, which is what bounds the delay.

Variables are 1-based; a literal is a signed 1-based integer as in DIMACS.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Clause = frozenset[int]
Backdoor = tuple[int, ...]


@dataclass
class BranchStats:
    """Counters for the guarded-branch liveness audit."""

    branches_entered: int = 0
    dead_branches: int = 0
    emissions: int = 0


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables 1..var_count; clauses are literal sets."""

    var_count: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.var_count:
                    raise ValueError(f"literal {lit} out of range")
            if any(-lit in clause for lit in clause):
                raise ValueError(f"tautological clause {sorted(clause)}")

    def variables(self) -> tuple[int, ...]:
        return tuple(range(1, self.var_count + 1))


def is_horn(phi: CnfFormula) -> bool:
    """True iff every clause has at most one positive literal."""
    return all(sum(1 for lit in c if lit > 0) <= 1 for c in phi.clauses)


def restrict(phi: CnfFormula, vars: set[int] | frozenset[int]) -> CnfFormula:
    """Delete every occurrence of the given variables; keep emptied clauses."""
    return CnfFormula(
        phi.var_count,
        tuple(frozenset(l for l in c if abs(l) not in vars) for c in phi.clauses),
    )


def _first_non_horn_positives(phi: CnfFormula) -> tuple[int, int] | None:
    """Two lowest positive literals of the first clause with >= 2 of them."""
    for clause in phi.clauses:
        positives = sorted(lit for lit in clause if lit > 0)
        if len(positives) >= 2:
            return positives[0], positives[1]
    return None


def exists_sbds(phi: CnfFormula, k: int, pool: frozenset[int]) -> bool:
    """Is there S within pool, |S| = k, with phi restricted by S Horn?

    phi must already be restricted by any committed variables. A Horn phi
    succeeds iff the pool can pad S up to exactly k (monotonicity); a
    non-Horn clause with two positive literals forces one of them into S,
    giving the two-way branching that keeps this fixed-parameter tractable.
    """
    if is_horn(phi):
        return len(pool) >= k
    if k == 0 or not pool:
        return False
    p1, p2 = _first_non_horn_positives(phi)
    return any(
        p in pool and exists_sbds(restrict(phi, {p}), k - 1, pool - {p})
        for p in (p1, p2)
    )


def generate_sbds(
    phi: CnfFormula, k: int, stats: BranchStats | None = None
) -> Iterator[Backdoor]:
    """Emit every strong Horn-backdoor set of size exactly k, once each,
    in lexicographic order of sorted variable sequences."""
    if k < 0:
        raise ValueError("k must be non-negative")

    def gen(chosen: tuple[int, ...], budget: int, pool: tuple[int, ...]) -> Iterator[Backdoor]:
        if budget == 0:
            if stats:
                stats.emissions += 1
            yield chosen
            return
        if not pool:
            return
        v = pool[0]
        rest = pool[1:]
        for take in (True, False):
            new_chosen = chosen + (v,) if take else chosen
            new_budget = budget - 1 if take else budget
            if exists_sbds(restrict(phi, set(new_chosen)), new_budget, frozenset(rest)):
                if stats:
                    stats.branches_entered += 1
                count = 0
                for s in gen(new_chosen, new_budget, rest):
                    count += 1
                    yield s
                if stats and count == 0:
                    stats.dead_branches += 1

    variables = phi.variables()
    if exists_sbds(phi, k, frozenset(variables)):
        yield from gen((), k, variables)
