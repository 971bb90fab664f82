"""Turing-machine workbench: simulation under selectable transition-cost
models, measure-function bound checking, certificate-based nondeterminism,
and lookup-trie machine synthesis for language-sequence convergence."""

from tmbench.machine import (
    BLANK,
    LEFT,
    RIGHT,
    Configuration,
    Machine,
    RunResult,
    StepRecord,
    Verdict,
    InvalidInputError,
    initial_configuration,
    run,
    run_configuration,
    step,
    validate_machine,
)
from tmbench.cost import (
    COUNT_ALL,
    FREE_BLIND,
    CostModel,
    counted_length,
    counted_set,
    is_blind_state,
    parse_cost_model,
)
from tmbench.measures import (
    BoundReport,
    BoundSpec,
    MeasureFunction,
    check_bound,
    check_monotone_sample,
    evaluate,
    parse_measure,
)
from tmbench.nondet import (
    CertificateBudgetError,
    CertificateSearchReport,
    CheckingRelation,
    build_demo_machines,
    decide_nc,
    decide_nt,
)
from tmbench.convergence import (
    BUILTIN_LANGUAGES,
    ConvergenceReport,
    LanguageOracle,
    TrieMachineReport,
    TrieSizeError,
    build_trie_machine,
    find_convergence_index,
    verify_restriction,
    verify_step_count,
)
from tmbench.textfmt import MachineParseError, emit_machine, parse_machine_file

__all__ = [
    "BLANK",
    "LEFT",
    "RIGHT",
    "Machine",
    "Configuration",
    "RunResult",
    "StepRecord",
    "Verdict",
    "InvalidInputError",
    "validate_machine",
    "initial_configuration",
    "step",
    "run",
    "run_configuration",
    "CostModel",
    "COUNT_ALL",
    "FREE_BLIND",
    "is_blind_state",
    "counted_set",
    "counted_length",
    "parse_cost_model",
    "MeasureFunction",
    "BoundSpec",
    "BoundReport",
    "evaluate",
    "check_monotone_sample",
    "check_bound",
    "parse_measure",
    "CheckingRelation",
    "CertificateSearchReport",
    "CertificateBudgetError",
    "decide_nc",
    "decide_nt",
    "build_demo_machines",
    "LanguageOracle",
    "BUILTIN_LANGUAGES",
    "TrieMachineReport",
    "TrieSizeError",
    "ConvergenceReport",
    "build_trie_machine",
    "verify_restriction",
    "verify_step_count",
    "find_convergence_index",
    "MachineParseError",
    "parse_machine_file",
    "emit_machine",
]
