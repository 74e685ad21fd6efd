"""Boolean relations as explicit tables, Gamma-formulas, and class flags.

Relation classes are decided by closure tests: Horn = closed under
bitwise AND, dual-Horn = OR, affine = triple XOR, bijunctive =
componentwise majority, complementive = bitwise complement. The
strongly-bijunctive flag is a tri-state because the sufficient test used
here does not search definitions with auxiliary frozen variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

BitTuple = tuple[int, ...]

MAX_ARITY = 16
BRUTE_VAR_GUARD = 24


class VariableGuardError(RuntimeError):
    """A brute-force evaluation was requested beyond the variable guard."""


@dataclass(frozen=True)
class BooleanRelation:
    """A logical relation: a set of bit tuples of a fixed arity.

    Arity 0 is allowed as the result of conditioning; it holds either the
    empty tuple (tautology) or nothing (contradiction).
    """

    arity: int
    tuples: frozenset[BitTuple]

    def __post_init__(self) -> None:
        if not (0 <= self.arity <= MAX_ARITY):
            raise ValueError(f"arity must be in 0..{MAX_ARITY}")
        for t in self.tuples:
            if len(t) != self.arity or any(b not in (0, 1) for b in t):
                raise ValueError(f"bad tuple {t!r} for arity {self.arity}")

    @staticmethod
    def from_strings(rows: Iterable[str]) -> "BooleanRelation":
        tups = frozenset(tuple(int(c) for c in row) for row in rows)
        arity = len(next(iter(tups))) if tups else 0
        return BooleanRelation(arity, tups)

    def is_empty(self) -> bool:
        return not self.tuples


@dataclass(frozen=True)
class Constraint:
    """A relation applied to an ordered list of (possibly repeated) variables."""

    name: str
    relation: BooleanRelation
    vars: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vars) != self.relation.arity:
            raise ValueError("variable list length must equal relation arity")

    def satisfied_by(self, assignment: BitTuple) -> bool:
        return tuple(assignment[v] for v in self.vars) in self.relation.tuples


@dataclass(frozen=True)
class ConstraintLanguage:
    """A finite named set of relations."""

    relations: dict[str, BooleanRelation] = field(default_factory=dict)

    def __getitem__(self, name: str) -> BooleanRelation:
        return self.relations[name]


@dataclass(frozen=True)
class GammaFormula:
    """A conjunction of constraints over variables 0..var_count-1.

    ``unsat`` marks a formula where substitution emptied some relation;
    such a formula has no models regardless of its remaining constraints.
    """

    var_count: int
    constraints: tuple[Constraint, ...]
    unsat: bool = False

    def __post_init__(self) -> None:
        for c in self.constraints:
            if any(not (0 <= v < self.var_count) for v in c.vars):
                raise ValueError("constraint variable out of range")


@dataclass(frozen=True)
class ClassFlags:
    zero_valid: bool
    one_valid: bool
    horn: bool
    dual_horn: bool
    bijunctive: bool
    affine: bool
    complementive: bool
    strongly_bijunctive: str  # "yes" | "no" | "unknown"


def _closed_under_pairs(tuples, op) -> bool:
    return all(
        tuple(op(x, y) for x, y in zip(a, b)) in tuples
        for a in tuples
        for b in tuples
    )


def _closed_under_triples(tuples, op) -> bool:
    return all(
        tuple(op(x, y, z) for x, y, z in zip(a, b, c)) in tuples
        for a in tuples
        for b in tuples
        for c in tuples
    )


def _two_clause_models(r: BooleanRelation) -> frozenset[BitTuple]:
    """Models of the conjunction of every (u or v), (u != v), (u -> v)
    clause over r's coordinates that all tuples of r satisfy."""
    n = r.arity
    clauses = []
    for i in range(n):
        for j in range(n):
            or_ij = lambda t, i=i, j=j: t[i] or t[j]
            neq_ij = lambda t, i=i, j=j: t[i] != t[j]
            imp_ij = lambda t, i=i, j=j: (not t[i]) or t[j]
            for pred in (or_ij, neq_ij, imp_ij):
                if all(pred(t) for t in r.tuples):
                    clauses.append(pred)
    return frozenset(
        t for t in product((0, 1), repeat=n) if all(c(t) for c in clauses)
    )


def classify_relation(r: BooleanRelation) -> ClassFlags:
    """Compute the Schaefer-style class flags of a relation by closure tests."""
    tuples = r.tuples
    horn = _closed_under_pairs(tuples, lambda a, b: a & b)
    dual_horn = _closed_under_pairs(tuples, lambda a, b: a | b)
    affine = _closed_under_triples(tuples, lambda a, b, c: a ^ b ^ c)
    bijunctive = _closed_under_triples(tuples, lambda a, b, c: (a & b) | (a & c) | (b & c))
    complementive = all(tuple(1 - b for b in t) in tuples for t in tuples)
    zero_valid = tuple([0] * r.arity) in tuples
    one_valid = tuple([1] * r.arity) in tuples

    if _two_clause_models(r) == tuples:
        strongly = "yes"
    elif not bijunctive:
        strongly = "no"
    else:
        strongly = "unknown"

    return ClassFlags(
        zero_valid=zero_valid,
        one_valid=one_valid,
        horn=horn,
        dual_horn=dual_horn,
        bijunctive=bijunctive,
        affine=affine,
        complementive=complementive,
        strongly_bijunctive=strongly,
    )


def condition_relation(r: BooleanRelation, pos: int, val: int) -> BooleanRelation:
    """Fix coordinate ``pos`` to ``val`` and drop it; arity decreases by one."""
    if not (0 <= pos < r.arity):
        raise ValueError("position out of range")
    kept = frozenset(t[:pos] + t[pos + 1 :] for t in r.tuples if t[pos] == val)
    return BooleanRelation(r.arity - 1, kept)


def substitute(phi: GammaFormula, var: int, val: int) -> GammaFormula:
    """Fix ``var`` to ``val`` in every constraint and drop it from the universe.

    Variables above ``var`` shift down by one. Repeated occurrences are
    conditioned sequentially, so inconsistent repeats empty the relation
    and mark the result unsatisfiable. Constraints reduced to the
    always-true arity-0 relation are dropped.
    """
    if not (0 <= var < phi.var_count):
        raise ValueError("variable out of range")
    new_constraints = []
    unsat = phi.unsat
    for c in phi.constraints:
        rel = c.relation
        if var in c.vars:
            positions = [i for i, v in enumerate(c.vars) if v == var]
            for shift, p in enumerate(positions):
                rel = condition_relation(rel, p - shift, val)
            new_vars = tuple(v if v < var else v - 1 for v in c.vars if v != var)
            if rel.is_empty():
                unsat = True
            if rel.arity == 0:
                continue  # tautology or recorded contradiction
            new_constraints.append(Constraint(c.name, rel, new_vars))
        else:
            new_vars = tuple(v if v < var else v - 1 for v in c.vars)
            new_constraints.append(Constraint(c.name, c.relation, new_vars))
    return GammaFormula(phi.var_count - 1, tuple(new_constraints), unsat)


def brute_models(phi: GammaFormula) -> set[BitTuple]:
    """All models of phi by exhaustive evaluation (guard: <= 24 variables)."""
    if phi.var_count > BRUTE_VAR_GUARD:
        raise VariableGuardError(f"var_count {phi.var_count} exceeds {BRUTE_VAR_GUARD}")
    if phi.unsat:
        return set()
    return {
        m
        for m in product((0, 1), repeat=phi.var_count)
        if all(c.satisfied_by(m) for c in phi.constraints)
    }


def weight(model: BitTuple) -> int:
    return sum(model)
