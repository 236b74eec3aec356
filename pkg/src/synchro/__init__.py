"""synchro: synchronizing-automata toolkit and the 3-SAT to Eulerian
binary automaton reduction compiler."""

from .automaton import (
    Dfa,
    StateSet,
    apply_word,
    cerny,
    export_dot,
    image_trace,
    is_eulerian,
    is_reset_word,
    is_synchronizing,
    pair_merge_bound,
    parse_automaton,
    serialize_automaton,
)
from .cnf import (
    Formula,
    Literal,
    brute_force_sat,
    evaluate,
    kappa,
    mu,
    mu_inverse,
    parse_dimacs,
)
from .reduction import ReductionOutput, build_template, constants, reduce_formula
from .solver import SolveResult, decide_reset_leq, greedy_reset, shortest_reset_exact
from .witness import (
    TraceReport,
    build_witness,
    check_word_structure,
    extract_assignment,
    verify_forward,
)

__all__ = [
    "Dfa",
    "StateSet",
    "apply_word",
    "cerny",
    "export_dot",
    "image_trace",
    "is_eulerian",
    "is_reset_word",
    "is_synchronizing",
    "pair_merge_bound",
    "parse_automaton",
    "serialize_automaton",
    "Formula",
    "Literal",
    "brute_force_sat",
    "evaluate",
    "kappa",
    "mu",
    "mu_inverse",
    "parse_dimacs",
    "ReductionOutput",
    "build_template",
    "constants",
    "reduce_formula",
    "SolveResult",
    "decide_reset_leq",
    "greedy_reset",
    "shortest_reset_exact",
    "TraceReport",
    "build_witness",
    "check_word_structure",
    "extract_assignment",
    "verify_forward",
]

__version__ = "0.1.0"
