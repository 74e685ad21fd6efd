"""Text formats: DIMACS CNF, `p graph` edge lists, and Gamma-formula files.

Parsers raise ParseError with a 1-based line number; serializers produce
the canonical form, so serialize(parse(text)) is idempotent up to
whitespace and comments.
"""

from __future__ import annotations

from .backdoor import CnfFormula
from .relations import (
    BooleanRelation,
    Constraint,
    ConstraintLanguage,
    GammaFormula,
)
from .vertexcover import Graph


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF: comments, one `p cnf n m` header, m clause lines.

    Duplicate literals within a clause are collapsed; tautological clauses
    are rejected.
    """
    n = m = None
    clauses: list[frozenset[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n is not None:
                raise ParseError(line_no, "duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(line_no, f"malformed header: {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(line_no, f"malformed header: {line!r}") from None
            if n < 0 or m < 0:
                raise ParseError(line_no, "negative counts in header")
            continue
        if n is None:
            raise ParseError(line_no, "clause before header")
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(line_no, f"non-integer literal in {line!r}") from None
        if not lits or lits[-1] != 0:
            raise ParseError(line_no, "clause line must end with 0")
        clause = frozenset(lits[:-1])
        if 0 in clause:
            raise ParseError(line_no, "literal 0 inside clause")
        for lit in clause:
            if abs(lit) > n:
                raise ParseError(line_no, f"literal {lit} out of range 1..{n}")
            if -lit in clause:
                raise ParseError(line_no, f"tautological clause: {sorted(clause)}")
        clauses.append(clause)
    if n is None:
        raise ParseError(1, "missing `p cnf` header")
    if len(clauses) != m:
        raise ParseError(1, f"header declares {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def format_dimacs_cnf(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.var_count} {len(phi.clauses)}"]
    for clause in phi.clauses:
        lines.append(" ".join(str(l) for l in sorted(clause, key=abs)) + " 0")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse `p graph <n> <m>` followed by m `e <u> <v>` lines, 0-based."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n is not None:
                raise ParseError(line_no, "duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "graph":
                raise ParseError(line_no, f"malformed header: {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(line_no, f"malformed header: {line!r}") from None
            continue
        if line.startswith("e"):
            if n is None:
                raise ParseError(line_no, "edge before header")
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(line_no, f"malformed edge line: {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(line_no, f"malformed edge line: {line!r}") from None
            if u == v:
                raise ParseError(line_no, f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(line_no, f"vertex out of range in ({u}, {v})")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ParseError(line_no, f"duplicate edge {e}")
            seen.add(e)
            edges.append(e)
            continue
        raise ParseError(line_no, f"unrecognized line: {line!r}")
    if n is None:
        raise ParseError(1, "missing `p graph` header")
    if len(edges) != m:
        raise ParseError(1, f"header declares {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"p graph {g.vertex_count} {len(g.edges)}"]
    for u, v in sorted(g.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def parse_gamma_formula(text: str) -> tuple[ConstraintLanguage, GammaFormula]:
    """Parse the Gamma-formula format:

        nvars 3
        relation OR 2 { 01 10 11 }
        constraint OR 0 1
    """
    nvars = None
    relations: dict[str, BooleanRelation] = {}
    constraints: list[Constraint] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "nvars":
            if nvars is not None:
                raise ParseError(line_no, "duplicate nvars line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(line_no, f"malformed nvars line: {line!r}")
            nvars = int(parts[1])
        elif parts[0] == "relation":
            if len(parts) < 5 or parts[3] != "{" or parts[-1] != "}":
                raise ParseError(line_no, f"malformed relation line: {line!r}")
            name = parts[1]
            if name in relations:
                raise ParseError(line_no, f"duplicate relation {name}")
            if not parts[2].isdigit():
                raise ParseError(line_no, f"bad arity: {parts[2]!r}")
            arity = int(parts[2])
            rows = parts[4:-1]
            tuples = set()
            for row in rows:
                if len(row) != arity or any(ch not in "01" for ch in row):
                    raise ParseError(line_no, f"tuple {row!r} does not match arity {arity}")
                tuples.add(tuple(int(ch) for ch in row))
            relations[name] = BooleanRelation(arity, frozenset(tuples))
        elif parts[0] == "constraint":
            if nvars is None:
                raise ParseError(line_no, "constraint before nvars")
            if len(parts) < 2:
                raise ParseError(line_no, "constraint needs a relation name")
            name = parts[1]
            if name not in relations:
                raise ParseError(line_no, f"unknown relation {name!r}")
            rel = relations[name]
            try:
                vars_ = tuple(int(tok) for tok in parts[2:])
            except ValueError:
                raise ParseError(line_no, f"non-integer variable in {line!r}") from None
            if len(vars_) != rel.arity:
                raise ParseError(
                    line_no, f"{name} has arity {rel.arity}, got {len(vars_)} variables"
                )
            if any(not (0 <= v < nvars) for v in vars_):
                raise ParseError(line_no, "variable out of range")
            constraints.append(Constraint(name, rel, vars_))
        else:
            raise ParseError(line_no, f"unrecognized line: {line!r}")
    if nvars is None:
        raise ParseError(1, "missing nvars line")
    language = ConstraintLanguage(dict(relations))
    return language, GammaFormula(nvars, tuple(constraints))


def format_gamma_formula(language: ConstraintLanguage, phi: GammaFormula) -> str:
    lines = [f"nvars {phi.var_count}"]
    for name in sorted(language.relations):
        rel = language.relations[name]
        rows = " ".join("".join(str(b) for b in t) for t in sorted(rel.tuples))
        lines.append(f"relation {name} {rel.arity} {{ {rows} }}".replace("{  }", "{ }"))
    for c in phi.constraints:
        lines.append("constraint " + c.name + " " + " ".join(str(v) for v in c.vars))
    return "\n".join(lines) + "\n"
