"""State complexity of multiple catenation of DFAs."""

from .automata import (AutomatonError, Dfa, Nfa, Transformation, accessible_states,
                       dfa_from_transformations, make_transformation, run_word)
from .bounds import (brute_force_count, compositions, formula_count, r_expanded, r_poly,
                     recurrence_count)
from .constructions import (ChainLayout, ValidSequence, catenate, chain_catenate, decode_state,
                            determinize, equivalent, minimize)
from .poly import MPoly
from .witnesses import (WitnessFamily, build_table1, build_table2, build_three_letter,
                        build_two_letter)

__version__ = "0.1.0"
