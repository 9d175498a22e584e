"""Towers of Hanoi as a formal language.

The package builds, for any disc count N, a context-free grammar and a
one-state pushdown automaton whose single generated word is the optimal
2^N - 1 move solution, alongside independent reference solvers (the
classic recursion and an exhaustive breadth-first oracle) and a replay
validator for arbitrary move sequences.
"""

from .constructions import (
    BFS_MAX_DISCS,
    PEG_PAIRS,
    BfsResult,
    CapExceeded,
    HanoiInstance,
    bfs_optimal,
    build_hanoi_grammar,
    build_hanoi_pda,
    grammar_step_limit,
    pda_step_limit,
    recursive_solve,
    spare_peg,
)
from .grammar import (
    Derivation,
    FormTooLarge,
    Grammar,
    GrammarError,
    NoApplicableProduction,
    Production,
    StepLimitExceeded,
    Symbol,
    derive_full,
    derive_step,
    derive_streaming,
    enumerate_language,
    format_form,
    nonterminal,
    terminal,
)
from .hanoi import (
    DiscCountMismatch,
    EmptySource,
    HanoiNonterminal,
    HanoiState,
    IllegalMove,
    InvalidDiscCount,
    LargerOnSmaller,
    MoveParseError,
    MoveSymbol,
    ValidationReport,
    apply_move,
    initial_state,
    is_solved,
    validate_sequence,
)
from .pda import (
    AcceptanceResult,
    DeterminismReport,
    EmptyStack,
    NondeterministicPda,
    Pda,
    PdaConfiguration,
    PdaError,
    RunOutcome,
    RunTrace,
    StackSymbol,
    accepts_by_final_state,
    is_deterministic,
    run_to_empty_stack,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "AcceptanceResult",
    "BFS_MAX_DISCS",
    "BfsResult",
    "CapExceeded",
    "Derivation",
    "DeterminismReport",
    "DiscCountMismatch",
    "EmptySource",
    "EmptyStack",
    "FormTooLarge",
    "Grammar",
    "GrammarError",
    "HanoiInstance",
    "HanoiNonterminal",
    "HanoiState",
    "IllegalMove",
    "InvalidDiscCount",
    "LargerOnSmaller",
    "MoveParseError",
    "MoveSymbol",
    "NoApplicableProduction",
    "NondeterministicPda",
    "PEG_PAIRS",
    "Pda",
    "PdaConfiguration",
    "PdaError",
    "Production",
    "RunOutcome",
    "RunTrace",
    "StackSymbol",
    "StepLimitExceeded",
    "Symbol",
    "ValidationReport",
    "accepts_by_final_state",
    "apply_move",
    "bfs_optimal",
    "build_hanoi_grammar",
    "build_hanoi_pda",
    "derive_full",
    "derive_step",
    "derive_streaming",
    "enumerate_language",
    "format_form",
    "grammar_step_limit",
    "initial_state",
    "is_deterministic",
    "is_solved",
    "nonterminal",
    "pda_step_limit",
    "recursive_solve",
    "run_to_empty_stack",
    "spare_peg",
    "step",
    "terminal",
    "validate_sequence",
]
