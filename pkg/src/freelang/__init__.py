"""Quotient complexity of operations on free regular languages."""

from .automata import (Alphabet, AlphabetMismatch, BoolOp, Dfa, Nfa, accepts, boolean_combine,
                       complete, determinize, enumerate_language, equivalent, minimize, product,
                       quotient_complexity, reverse, star)
from .bounds import ComplexityReport, bound_formula, expected_bound
from .enumeration import (SearchResult, SearchSpec, enumerate_minimal_free_dfas,
                          impossibility_check, max_complexity_search, reversal_witness_search)
from .freeness import (FreeClass, adjoin, check_second_quotient_letter_reachability, classify,
                       is_bifix_free, is_factor_free, is_finite, is_prefix_free, is_subword_free,
                       is_suffix_free, topological_quotient_order)
from .regex import parse_regex, print_regex, regex_to_dfa
from .textformat import dumps_dfa, loads_dfa, read_dfa, write_dfa
from .witnesses import Family, make_witness, verify_witness

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "AlphabetMismatch", "BoolOp", "ComplexityReport", "Dfa", "Family", "FreeClass",
    "Nfa", "SearchResult", "SearchSpec", "accepts", "adjoin", "boolean_combine", "bound_formula",
    "check_second_quotient_letter_reachability", "classify", "complete", "determinize",
    "dumps_dfa", "enumerate_language", "enumerate_minimal_free_dfas", "equivalent",
    "expected_bound", "impossibility_check", "is_bifix_free", "is_factor_free", "is_finite",
    "is_prefix_free", "is_subword_free", "is_suffix_free", "loads_dfa", "make_witness",
    "max_complexity_search", "minimize", "parse_regex", "print_regex", "product",
    "quotient_complexity", "read_dfa", "regex_to_dfa", "reversal_witness_search", "reverse",
    "star", "topological_quotient_order", "verify_witness", "write_dfa",
]
