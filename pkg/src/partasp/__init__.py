"""Graph-based partial answer set solving with topic neighborhoods."""

from .errors import (
    GroundError,
    InvalidProgramError,
    NoIntentError,
    NoModelError,
    NoTalkingPointError,
    OddLoopError,
    ParseError,
    PartaspError,
    SizeLimitError,
    UnknownAtomError,
    UnreachableError,
)
from .grounding import NonGroundRule, ground
from .graph import (
    attach_query,
    atom_distances,
    build_cnr_graph,
    classify_loop,
    cnr_to_dependency_graph,
    dependency_graph,
    DepGraph,
    LoopClass,
    LoopKind,
)
from .neighborhood import (
    ExplanationPath,
    NeighborhoodResult,
    extract_path,
    relevant_concepts,
    render_explanation,
)
from .oracle import (
    enumerate_stable_models,
    gl_reduct,
    is_subset_of_some_stable,
    least_model,
)
from .parser import parse_program, parse_schematic
from .solver import (
    CONFLICT,
    Conflict,
    PartialModel,
    Solver,
    SolverState,
    conjunctive_merge,
    disjunctive_merge,
    forward_propagate,
    solve,
)
from .syntax import Atom, Literal, Program, ProgramBuilder, Rule
from .validate import ValidationIssue, ensure_valid, validate_grounded

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "CONFLICT",
    "Conflict",
    "DepGraph",
    "ExplanationPath",
    "GroundError",
    "InvalidProgramError",
    "Literal",
    "LoopClass",
    "LoopKind",
    "NeighborhoodResult",
    "NoIntentError",
    "NoModelError",
    "NoTalkingPointError",
    "NonGroundRule",
    "OddLoopError",
    "ParseError",
    "PartaspError",
    "PartialModel",
    "Program",
    "ProgramBuilder",
    "Rule",
    "SizeLimitError",
    "Solver",
    "SolverState",
    "UnknownAtomError",
    "UnreachableError",
    "ValidationIssue",
    "attach_query",
    "atom_distances",
    "build_cnr_graph",
    "classify_loop",
    "cnr_to_dependency_graph",
    "conjunctive_merge",
    "dependency_graph",
    "disjunctive_merge",
    "ensure_valid",
    "enumerate_stable_models",
    "extract_path",
    "forward_propagate",
    "gl_reduct",
    "ground",
    "is_subset_of_some_stable",
    "least_model",
    "parse_program",
    "parse_schematic",
    "relevant_concepts",
    "render_explanation",
    "solve",
    "validate_grounded",
]
