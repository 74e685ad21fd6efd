"""Parameterized enumeration toolkit: bounded vertex covers, heavy models
of constraint formulas, and strong Horn-backdoor sets, all with
per-solution delay instrumentation."""

from .backdoor import CnfFormula, exists_sbds, generate_sbds, is_horn, restrict
from .maxones import (
    ORACLES,
    WeightOracle,
    enumerate_maxones,
    has_maxones,
    max_weight_affine,
    max_weight_dual_horn,
    select_oracle,
)
from .relations import (
    BooleanRelation,
    ClassFlags,
    Constraint,
    ConstraintLanguage,
    GammaFormula,
    brute_models,
    classify_relation,
    condition_relation,
    substitute,
)
from .streams import (
    DelayProfile,
    DuplicateSolutionError,
    EnumKernelizer,
    KernelBudgetError,
    ParamInstance,
    SolutionStream,
    kernel_enumerate,
    run_with_profile,
)
from .vertexcover import (
    BussReduction,
    Graph,
    buss_kernelize,
    enumerate_all_vcs,
    expand_cover,
    kernel_covers,
    vc_kernelizer,
)

__all__ = [
    "BooleanRelation",
    "BussReduction",
    "ClassFlags",
    "CnfFormula",
    "Constraint",
    "ConstraintLanguage",
    "DelayProfile",
    "DuplicateSolutionError",
    "EnumKernelizer",
    "GammaFormula",
    "Graph",
    "KernelBudgetError",
    "ORACLES",
    "ParamInstance",
    "SolutionStream",
    "WeightOracle",
    "brute_models",
    "buss_kernelize",
    "classify_relation",
    "condition_relation",
    "enumerate_all_vcs",
    "enumerate_maxones",
    "exists_sbds",
    "expand_cover",
    "generate_sbds",
    "has_maxones",
    "is_horn",
    "kernel_covers",
    "kernel_enumerate",
    "max_weight_affine",
    "max_weight_dual_horn",
    "restrict",
    "run_with_profile",
    "select_oracle",
    "substitute",
    "vc_kernelizer",
]
