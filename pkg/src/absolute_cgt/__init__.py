"""Game comparison in absolute universes through the Left Provisional Game."""

from ._memo import clear_caches, set_cache_size
from .compare import Relation, distinguish, explain, geq, geq_cnp_oracle, relation
from .game import (RATIONAL, TRIVIAL, Atom, Game, OutcomePair, atomic, conjugate,
                   disjunctive_sum, is_dicot, is_left_atomic, is_purely_atomic,
                   is_right_atomic, normalize, outcome, rank)
from .lpg import LpgPosition, lpg_left_options, lpg_right_options, maintain, unfold
from .normal import NormalGame, canonical_form, np_geq, np_geq_zero_second_player
from .notation import format_game, parse_game, parse_value
from .universes import (DICOT_MISERE, DICOT_SCORING, FREE_MISERE, NORMAL, NotAMember,
                        UniverseSpec, get_universe, membership, proviso,
                        proviso_bruteforce)

__version__ = "0.1.0"

__all__ = ["clear_caches", "set_cache_size", "Relation", "distinguish", "explain", "geq",
           "geq_cnp_oracle", "relation", "RATIONAL", "TRIVIAL", "Atom", "Game", "OutcomePair",
           "atomic", "conjugate", "disjunctive_sum", "is_dicot", "is_left_atomic",
           "is_purely_atomic", "is_right_atomic", "normalize", "outcome", "rank",
           "LpgPosition", "lpg_left_options", "lpg_right_options", "maintain", "unfold",
           "NormalGame", "canonical_form", "np_geq", "np_geq_zero_second_player",
           "format_game", "parse_game", "parse_value", "DICOT_MISERE", "DICOT_SCORING",
           "FREE_MISERE", "NORMAL", "NotAMember", "UniverseSpec", "get_universe",
           "membership", "proviso", "proviso_bruteforce"]
