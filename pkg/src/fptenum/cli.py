"""Command-line surface.

Exit codes: 0 on success with at least one solution (or a pure report),
1 when an enumeration finds no solutions, 2 on input errors.
"""

from __future__ import annotations

import argparse
import gc
import json
import sys
from pathlib import Path

from . import backdoor, formats, maxones
from .generators import vc_delay_family
from .relations import classify_relation
from .streams import ParamInstance, run_with_profile
from .vertexcover import enumerate_all_vcs

ORACLE_NAMES = {
    "brute": "bruteforce",
    "dualhorn": "dual_horn_propagation",
    "affine": "affine_gauss",
    "bb": "branch_and_bound",
}


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise formats.ParseError(0, f"cannot read {path}: {exc}") from None


def _cmd_vc(args) -> int:
    g = formats.parse_graph(_read(args.graph))
    count = 0
    for cover in enumerate_all_vcs(g, args.k):
        count += 1
        if not args.count:
            print(" ".join(str(v) for v in cover))
    if args.count:
        print(count)
    return 0 if count else 1


def _cmd_maxones(args) -> int:
    _, phi = formats.parse_gamma_formula(_read(args.formula))
    if args.oracle == "auto":
        oracle = maxones.select_oracle(phi)
    else:
        oracle = maxones.ORACLES[ORACLE_NAMES[args.oracle]]
    count = 0
    for model in maxones.enumerate_maxones(oracle, phi, args.k):
        count += 1
        print(" ".join(str(v) for v in model))
    return 0 if count else 1


def _cmd_backdoor(args) -> int:
    phi = formats.parse_dimacs_cnf(_read(args.cnf))
    count = 0
    for s in backdoor.generate_sbds(phi, args.k):
        count += 1
        print(" ".join(str(v) for v in s))
    return 0 if count else 1


def _cmd_classify(args) -> int:
    language, _ = formats.parse_gamma_formula(_read(args.language))
    for name in sorted(language.relations):
        flags = classify_relation(language.relations[name])
        parts = [
            f"zero_valid={flags.zero_valid}",
            f"one_valid={flags.one_valid}",
            f"horn={flags.horn}",
            f"dual_horn={flags.dual_horn}",
            f"bijunctive={flags.bijunctive}",
            f"affine={flags.affine}",
            f"complementive={flags.complementive}",
            f"strongly_bijunctive={flags.strongly_bijunctive}",
        ]
        print(f"{name}: " + " ".join(parts))
    return 0


def profile_vc_family(k: int, sizes: list[int], seed: int, repeats: int = 3) -> dict:
    """Run the vertex-cover delay family and compute the growth report.

    Each size is run ``repeats`` times sequentially and the smallest
    observed maximum gap is kept, damping scheduler noise. Garbage
    collection is paused during the timed runs.
    """
    runs = []
    for n in sizes:
        g = vc_delay_family(n, k, seed)
        inst = ParamInstance(payload=g, parameter=k, size=n)
        best = None
        gc_was_enabled = gc.isenabled()
        gc.disable()
        try:
            for _ in range(repeats):
                _, profile = run_with_profile(
                    lambda inst: enumerate_all_vcs(inst.payload, inst.parameter), inst
                )
                if best is None or (profile.max_gap_ns() or 0) < (best.max_gap_ns() or 0):
                    best = profile
        finally:
            if gc_was_enabled:
                gc.enable()
        runs.append(
            {
                "n": n,
                "k": k,
                "count": best.solution_count,
                "precalc_ns": best.precalc_ns,
                "max_gap_ns": best.max_gap_ns(),
                "profile": json.loads(best.to_json()),
            }
        )
    ratios = []
    for a, b in zip(runs, runs[1:]):
        if a["max_gap_ns"] and b["max_gap_ns"]:
            ratios.append(
                {
                    "n_small": a["n"],
                    "n_large": b["n"],
                    "ratio": b["max_gap_ns"] / a["max_gap_ns"],
                }
            )
    return {"family": "vc-star", "k": k, "runs": runs, "ratios": ratios}


def _cmd_profile(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    report = profile_vc_family(args.k, sizes, args.seed, args.repeats)
    out = json.dumps(report, indent=2)
    if args.json:
        Path(args.json).write_text(out + "\n")
    else:
        print(out)
    if args.csv:
        for run in report["runs"]:
            p = run["profile"]
            lines = ["index,delay_ns"]
            durations = [p["precalc_ns"], *p["gaps_ns"]]
            if p["postcalc_ns"] is not None:
                durations.append(p["postcalc_ns"])
            for i, d in enumerate(durations):
                lines.append(f"{i},{d}")
            Path(f"{args.csv}.{run['n']}.csv").write_text("\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fptenum",
        description="Parameterized enumeration: vertex covers, heavy models, Horn backdoors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vc", help="enumerate vertex covers of size <= k")
    p.add_argument("--graph", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the number of covers")
    p.set_defaults(func=_cmd_vc)

    p = sub.add_parser("maxones", help="enumerate models of weight >= k")
    p.add_argument("--formula", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument(
        "--oracle", choices=["auto", "brute", "dualhorn", "affine", "bb"], default="auto"
    )
    p.set_defaults(func=_cmd_maxones)

    p = sub.add_parser("backdoor", help="enumerate strong Horn-backdoor sets of size k")
    p.add_argument("--cnf", required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_backdoor)

    p = sub.add_parser("classify", help="print class flags for a relation file")
    p.add_argument("--language", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("profile", help="delay profiles and growth report for the vc family")
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--sizes", required=True, help="comma-separated instance sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--json", help="write the report to this path instead of stdout")
    p.add_argument("--csv", help="write per-run delay CSVs with this path prefix")
    p.set_defaults(func=_cmd_profile)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except formats.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
