"""Pattern classes of permutations as regular languages of rank encodings."""

from .automata import (FORWARD, REVERSED, Automaton, Direction, accepts, complement,
                       determinize, intersect, is_empty, is_finite, is_subset,
                       language_equal, minimize, reverse)
from .bounded import (BoundedClass, basis_from_closed, closed_from_basis,
                      is_closed_language, is_finitely_based, member, omega_acceptor)
from .enumeration import (RationalGF, count_words, expand, generating_function,
                          linear_recurrence)
from .monotone import (MonotoneClass, closed_subset_acceptor, decode_word, encodings,
                       gf_monotone, greedy_automaton, greedy_encoding, member_monotone)
from .perms import (brute_basis, delete_at, involves, inverse, max_rank, rank_decode,
                    rank_encode)
from .transducers import (deletion_transducer, derivative_languages, image,
                          involvement_transducer, transpose)

__version__ = "0.1.0"
