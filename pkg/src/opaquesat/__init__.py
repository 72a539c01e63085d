"""opaquesat: structural analysis for Boolean satisfiability.

Set-semantics CNF formulas and general formula trees, a unit propagation
subsolver, strong backdoor verification and search, backbone extraction,
and the padded formula families whose structure is easy to find even
when their satisfiability is not.
"""

__version__ = "0.1.0"

from .backbone import (
    BackboneReport,
    backbone_fixed_variables,
    has_large_backbone,
    has_nontrivial_backbone,
    is_backbone,
)
from .backdoor import (
    BackdoorCertificate,
    BackdoorFailure,
    find_smallest_strong_backdoor,
    search_smallest_strong_backdoor,
    solve_via_backdoor,
    solve_via_bounded_backdoors,
    verify_strong_backdoor,
)
from .constructions import (
    BackboneFamily,
    BackboneFamilyInstance,
    BackdoorFamily,
    BackdoorFamilyInstance,
    LengthReport,
    compose_padded_reduction,
    extract_backdoor,
    pad_backbone_family,
    pad_backdoor_family,
    recognize_backbone_family,
    recognize_backdoor_family,
    reduce_sat_to_large_backbone,
    tail_length,
)
from .core import (
    CnfFormula,
    assign_and_simplify,
    cnf_to_prop,
    fresh_variables,
    is_trivially_false,
    is_trivially_true,
    satisfies,
    variables,
)
from .dimacs import emit_dimacs, parse_dimacs
from .enumeration import DEFAULT_VARIABLE_CAP, model_count, models
from .errors import (
    DimacsWarning,
    DuplicateInputWarning,
    EmptyBackdoorSet,
    HeaderMismatchWarning,
    InvalidBeta,
    InvalidParameters,
    NotAStrongBackdoor,
    OpaqueSatError,
    ParseError,
    ReductionHookFailure,
    TooManyVariables,
    UnboundVariable,
    UnknownVariable,
    VariableNotInFormula,
    ZeroVariableFormula,
)
from .generator import random_cnf
from .prop import (
    FALSE,
    TRUE,
    And,
    Atom,
    Const,
    Iff,
    Implies,
    Not,
    Or,
    PropFormula,
    evaluate,
    substitute,
)
from .proptext import emit_formula, parse_formula
from .solver import SolveStats, brute_force_model_count, brute_force_solve, dpll_solve
from .subsolver import SatResult, SubsolverOutcome, TraceStep, up_decided, up_subsolve

__all__ = [
    "__version__",
    # formulas
    "CnfFormula",
    "PropFormula",
    "Const",
    "Atom",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "TRUE",
    "FALSE",
    "variables",
    "assign_and_simplify",
    "satisfies",
    "substitute",
    "evaluate",
    "is_trivially_true",
    "is_trivially_false",
    "fresh_variables",
    "cnf_to_prop",
    # formats
    "parse_dimacs",
    "emit_dimacs",
    "parse_formula",
    "emit_formula",
    # enumeration and solving
    "DEFAULT_VARIABLE_CAP",
    "models",
    "model_count",
    "SatResult",
    "SubsolverOutcome",
    "TraceStep",
    "up_subsolve",
    "up_decided",
    "SolveStats",
    "dpll_solve",
    "brute_force_solve",
    "brute_force_model_count",
    # backdoors
    "BackdoorCertificate",
    "BackdoorFailure",
    "verify_strong_backdoor",
    "find_smallest_strong_backdoor",
    "search_smallest_strong_backdoor",
    "solve_via_backdoor",
    "solve_via_bounded_backdoors",
    # backbones
    "BackboneReport",
    "is_backbone",
    "backbone_fixed_variables",
    "has_nontrivial_backbone",
    "has_large_backbone",
    # constructions
    "tail_length",
    "BackdoorFamilyInstance",
    "BackboneFamilyInstance",
    "BackdoorFamily",
    "BackboneFamily",
    "LengthReport",
    "pad_backdoor_family",
    "recognize_backdoor_family",
    "extract_backdoor",
    "pad_backbone_family",
    "recognize_backbone_family",
    "reduce_sat_to_large_backbone",
    "compose_padded_reduction",
    # generation
    "random_cnf",
    # errors
    "OpaqueSatError",
    "UnknownVariable",
    "UnboundVariable",
    "TooManyVariables",
    "ParseError",
    "EmptyBackdoorSet",
    "VariableNotInFormula",
    "NotAStrongBackdoor",
    "InvalidBeta",
    "ZeroVariableFormula",
    "ReductionHookFailure",
    "InvalidParameters",
    "DimacsWarning",
    "HeaderMismatchWarning",
    "DuplicateInputWarning",
]
