"""Colored Jones polynomials of plat closures via a quantum automaton over q-deformed SU(2) recoupling."""

from .automaton import (
    Automaton,
    RunReport,
    acceptance_probability,
    build_automaton,
    calibrated_jones,
    complexity_ledger,
    extended_jones,
    run_word,
)
from .braid import BraidWord, PlatSpec, build_diagram, free_reduce, parse_word, writhe
from .oracle import LaurentPoly, eval_at_root, jones_polynomial, kauffman_bracket
from .qtensor import QContext, f_matrix, q_dim, q_int, q_six_j

__version__ = "0.1.0"

__all__ = [
    "Automaton",
    "BraidWord",
    "LaurentPoly",
    "PlatSpec",
    "QContext",
    "RunReport",
    "acceptance_probability",
    "build_automaton",
    "build_diagram",
    "calibrated_jones",
    "complexity_ledger",
    "eval_at_root",
    "extended_jones",
    "f_matrix",
    "free_reduce",
    "jones_polynomial",
    "kauffman_bracket",
    "parse_word",
    "q_dim",
    "q_int",
    "q_six_j",
    "run_word",
    "writhe",
]
