"""All-vertex-covers enumeration with FPT delay via Buss kernelization.

Reduction rules, applied to a fixed point:
  1. a vertex whose current degree exceeds the current budget is forced
     into every small cover: remove it, decrement the budget;
  2. an isolated vertex is in no minimal cover: remove it.

The reduced graph is the kernel; covers of the original graph are exactly
the kernel covers completed by the forced vertices and padded with
isolated vertices up to size k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .streams import EnumKernelizer, ParamInstance, kernel_enumerate

Edge = tuple[int, int]
Cover = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge ({u}, {v})")

    @staticmethod
    def from_edges(vertex_count: int, edges) -> "Graph":
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            e = (min(u, v), max(u, v))
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        return Graph(vertex_count, frozenset(canon))

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.vertex_count)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class BussReduction:
    """Result of the Buss reduction: kernel plus removed vertex sets.

    The kernel keeps the original vertex labels. ``infeasible`` means no
    cover of size <= k exists (budget exhausted or too many kernel edges).
    """

    kernel_vertices: frozenset[int]
    kernel_edges: frozenset[Edge]
    high_degree_removed: frozenset[int]
    isolated_removed: frozenset[int]
    residual_budget: int
    infeasible: bool


def buss_kernelize(g: Graph, k: int, rng: random.Random | None = None) -> BussReduction:
    """Apply the two reduction rules to a fixed point.

    With ``rng`` given, each step picks a uniformly random applicable rule
    application; the result is rule-order independent (the kernel is
    unique), which tests assert rather than assume. On budget overflow the
    reduction stops immediately with ``infeasible`` set; the partial
    removed-sets of an infeasible reduction are not canonical.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    adj = g.adjacency()
    alive = set(range(g.vertex_count))
    budget = k
    high: set[int] = set()
    isolated: set[int] = set()

    def remove(v: int) -> None:
        for u in adj[v]:
            adj[u].discard(v)
        adj[v] = set()
        alive.discard(v)

    while True:
        rule1 = [v for v in alive if len(adj[v]) > budget]
        rule2 = [v for v in alive if not adj[v]]
        if not rule1 and not rule2:
            break
        if rng is None:
            if rule1:
                choice = (1, min(rule1))
            else:
                choice = (2, min(rule2))
        else:
            moves = [(1, v) for v in rule1] + [(2, v) for v in rule2]
            choice = moves[rng.randrange(len(moves))]
        rule, v = choice
        if rule == 1:
            if budget == 0:
                return BussReduction(
                    frozenset(alive),
                    frozenset(e for e in g.edges if e[0] in alive and e[1] in alive),
                    frozenset(high),
                    frozenset(isolated),
                    -1,
                    True,
                )
            remove(v)
            high.add(v)
            budget -= 1
        else:
            remove(v)
            isolated.add(v)

    kernel_edges = frozenset(e for e in g.edges if e[0] in alive and e[1] in alive)
    infeasible = len(kernel_edges) > budget * budget
    return BussReduction(
        frozenset(alive), kernel_edges, frozenset(high), frozenset(isolated), budget, infeasible
    )


def _is_cover(edges: frozenset[Edge], vertices: set[int]) -> bool:
    return all(u in vertices or v in vertices for u, v in edges)


def kernel_covers(red: BussReduction) -> list[Cover]:
    """All vertex covers of the kernel of size <= residual budget.

    Include/exclude depth-first search over kernel vertices in ascending
    order; a branch dies when the budget runs out or an edge has both
    endpoints excluded. Each cover is found exactly once.
    """
    if red.infeasible:
        return []
    verts = sorted(red.kernel_vertices)
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in red.kernel_edges:
        adj[u].add(v)
        adj[v].add(u)
    out: list[Cover] = []

    def dfs(i: int, included: list[int], excluded: set[int], budget: int) -> None:
        if i == len(verts):
            out.append(tuple(included))
            return
        v = verts[i]
        if budget > 0:
            included.append(v)
            dfs(i + 1, included, excluded, budget - 1)
            included.pop()
        if not any(u in excluded for u in adj[v] if u < v):
            # v may only be excluded if no already-excluded neighbour shares
            # an edge with it; later neighbours get checked at their turn
            excluded.add(v)
            dfs(i + 1, included, excluded, budget)
            excluded.discard(v)

    dfs(0, [], set(), red.residual_budget)
    return out


def expand_cover(red: BussReduction, k: int, w: Cover) -> Iterator[Cover]:
    """Expand one kernel cover to original-graph covers.

    Emits w union the forced high-degree vertices, then every augmentation
    by a nonempty subset of the removed isolated vertices, subsets ordered
    by increasing size and lexicographically within each size.
    """
    wset = set(w)
    if len(wset) != len(w):
        raise ValueError("kernel cover has repeated vertices")
    if not wset <= red.kernel_vertices:
        raise ValueError("not a subset of the kernel vertex set")
    if not _is_cover(red.kernel_edges, wset):
        raise ValueError("not a vertex cover of the kernel")
    if len(wset) > red.residual_budget:
        raise ValueError("kernel cover exceeds the residual budget")

    base = tuple(sorted(wset | red.high_degree_removed))
    slack = k - len(base)
    yield base
    pool = sorted(red.isolated_removed)
    for size in range(1, slack + 1):
        for extra in combinations(pool, size):
            yield tuple(sorted(base + extra))


def vc_kernelizer(g: Graph, k: int) -> EnumKernelizer:
    """Buss enum-kernelizer for all vertex covers of size <= k."""
    return EnumKernelizer(
        kernelize=lambda inst: buss_kernelize(inst.payload, inst.parameter),
        solve_kernel=kernel_covers,
        expand=lambda inst, red, w: expand_cover(red, inst.parameter, w),
        kernel_size=lambda red: 0 if red.infeasible else len(red.kernel_vertices),
        size_bound=lambda k: 2 * k * k,
    )


def enumerate_all_vcs(g: Graph, k: int) -> Iterator[Cover]:
    """Enumerate every vertex cover of g of size <= k exactly once.

    Covers are emitted as sorted ascending vertex tuples, grouped by
    kernel cover in lexicographic kernel-cover order.
    """
    inst = ParamInstance(payload=g, parameter=k, size=g.vertex_count)
    return kernel_enumerate(vc_kernelizer(g, k), inst)
