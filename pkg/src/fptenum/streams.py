"""Enumeration streams, delay profiling, and the kernel-to-stream combinator.

An enumerator is any callable producing an iterator of canonical solution
values. Streams are pull-based and single-consumer; delays are measured as
the wall time between successive pulls on a monotonic nanosecond clock.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator


class DuplicateSolutionError(RuntimeError):
    """An enumerator emitted the same solution twice."""


class KernelBudgetError(RuntimeError):
    """A kernelizer produced a kernel larger than its declared size bound."""


@dataclass(frozen=True)
class ParamInstance:
    """A problem instance together with its parameter and size measure."""

    payload: Any
    parameter: int
    size: int

    def __post_init__(self) -> None:
        if self.parameter < 0:
            raise ValueError("parameter must be non-negative")
        if self.size < 0:
            raise ValueError("size must be non-negative")


class SolutionStream:
    """Single-consumer iterator wrapper that records emissions and rejects
    duplicates."""

    def __init__(self, source: Iterable[Any]):
        self._source = iter(source)
        self._seen: set[Any] = set()
        self.emitted: list[Any] = []

    def __iter__(self) -> "SolutionStream":
        return self

    def __next__(self) -> Any:
        value = next(self._source)
        if value in self._seen:
            raise DuplicateSolutionError(f"duplicate solution: {value!r}")
        self._seen.add(value)
        self.emitted.append(value)
        return value


@dataclass(frozen=True)
class DelayProfile:
    """Delays of one enumeration run, in nanoseconds.

    For n emitted solutions the profile holds n+1 durations: the
    precalculation time (0-th delay), the n-1 gaps between consecutive
    outputs, and the postcalculation time (n-th delay). With n=0 the
    pre- and postcalculation collapse into a single duration and
    ``postcalc_ns`` is None.
    """

    precalc_ns: int
    gaps_ns: tuple[int, ...]
    postcalc_ns: int | None
    solution_count: int

    def __post_init__(self) -> None:
        if len(self.durations()) != self.solution_count + 1:
            raise ValueError("duration count must equal solution_count + 1")
        if any(d < 0 for d in self.durations()):
            raise ValueError("durations must be non-negative")

    def durations(self) -> tuple[int, ...]:
        if self.postcalc_ns is None:
            return (self.precalc_ns,)
        return (self.precalc_ns, *self.gaps_ns, self.postcalc_ns)

    def max_gap_ns(self) -> int | None:
        """Largest inter-solution gap, excluding pre/postcalculation."""
        return max(self.gaps_ns) if self.gaps_ns else None

    def to_json(self) -> str:
        return json.dumps(
            {
                "precalc_ns": self.precalc_ns,
                "gaps_ns": list(self.gaps_ns),
                "postcalc_ns": self.postcalc_ns,
                "count": self.solution_count,
            }
        )

    def to_csv(self) -> str:
        lines = ["index,delay_ns"]
        for i, d in enumerate(self.durations()):
            lines.append(f"{i},{d}")
        return "\n".join(lines) + "\n"


def run_with_profile(
    enumerator: Callable[[ParamInstance], Iterable[Any]],
    instance: ParamInstance,
) -> tuple[list[Any], DelayProfile]:
    """Drain an enumerator and record its delay profile.

    Timestamps are taken immediately when each solution is received, so the
    consumer-side cost (storing the value) is excluded from the gaps.
    """
    start = time.monotonic_ns()
    stamps: list[int] = []
    solutions: list[Any] = []
    for sol in enumerator(instance):
        stamps.append(time.monotonic_ns())
        solutions.append(sol)
    end = time.monotonic_ns()

    if not solutions:
        profile = DelayProfile(end - start, (), None, 0)
    else:
        gaps = tuple(b - a for a, b in zip(stamps, stamps[1:]))
        profile = DelayProfile(stamps[0] - start, gaps, end - stamps[-1], len(solutions))
    return solutions, profile


@dataclass(frozen=True)
class EnumKernelizer:
    """Pluggable (kernelize, kernel solver, expander) triple.

    ``kernelize`` maps an instance to its kernel; ``solve_kernel``
    exhaustively lists the kernel's solutions; ``expand`` maps a kernel
    solution back to a sub-stream of original solutions. The expander
    streams for distinct kernel solutions must be disjoint and jointly
    cover the original solution set.

    ``kernel_size`` / ``size_bound`` optionally declare the h-bound on the
    kernel; when both are present kernel_enumerate enforces it.
    """

    kernelize: Callable[[ParamInstance], Any]
    solve_kernel: Callable[[Any], Iterable[Any]]
    expand: Callable[[ParamInstance, Any, Any], Iterable[Any]]
    kernel_size: Callable[[Any], int] | None = None
    size_bound: Callable[[int], int] | None = None


def kernel_enumerate(kz: EnumKernelizer, instance: ParamInstance) -> Iterator[Any]:
    """Enumerate all solutions of ``instance`` through an enum-kernelizer.

    Computes the kernel, exhaustively solves it, then runs the expander
    once per kernel solution, in lexicographic order of the kernel
    solutions' canonical encodings.
    """
    kernel = kz.kernelize(instance)
    if kz.kernel_size is not None and kz.size_bound is not None:
        size = kz.kernel_size(kernel)
        bound = kz.size_bound(instance.parameter)
        if size > bound:
            raise KernelBudgetError(f"kernel size {size} exceeds bound {bound}")
    for w in sorted(kz.solve_kernel(kernel)):
        yield from kz.expand(instance, kernel, w)
