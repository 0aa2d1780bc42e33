"""Closed subsets of Omega_k, the permutations whose rank encodings use only
the letters 1..k.

A closed class X inside Omega_k is represented by a minimal DFA for the
encodings E(X).  From it we can decide closedness, compute the basis,
decide finite-basedness and test membership in linear time; conversely a
class can be built from (an acceptor for the encodings of) its basis.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .automata import (FORWARD, REVERSED, Automaton, all_words, as_direction,
                       complement, determinize, explore, finite_acceptor, intersect,
                       is_empty, is_finite, is_subset, minimize, widen)
from .perms import first_violation, max_rank, rank_encode, rank_encode_bounded
from .transducers import (deletion_transducer, image, involvement_transducer,
                          transpose)

log = logging.getLogger(__name__)


class NotClosedError(ValueError):
    pass


def violating_suffixes(k: int) -> list[tuple]:
    """Words of length <= k-1 over [k] that are not encodings."""
    return [w for m in range(1, k) for w in itertools.product(range(1, k + 1), repeat=m)
            if first_violation(w) is not None]


@lru_cache(maxsize=None)
def omega_acceptor(k: int) -> Automaton:
    """Minimal forward DFA for E(Omega_k) = [k]* minus [k]* F."""
    if k < 1:
        raise ValueError("k must be at least 1")
    bad = violating_suffixes(k)
    prefixes = {w[:i] for w in bad for i in range(1, len(w) + 1)}
    # NFA: state 0 loops on every letter, then guesses where a bad suffix starts
    names = {(): 0}
    for p in sorted(prefixes, key=lambda w: (len(w), w)):
        names[p] = len(names)
    transitions = {(0, e, 0) for e in range(1, k + 1)}
    for p in prefixes:
        transitions.add((names[p[:-1]], p[-1], names[p]))
    finals = {names[w] for w in bad}
    contains_bad = Automaton(k, len(names), frozenset(transitions), 0, frozenset(finals))
    return minimize(complement(contains_bad))


def omega_counter_acceptor(k: int) -> Automaton:
    """Right-to-left DFA for E(Omega_k) that counts letters read, capped at k-1.

    Independent of ``omega_acceptor``; used to cross-check it.
    """
    return explore(k, 0, lambda c, e: min(c + 1, k - 1) if e <= c + 1 else None,
                   lambda c: True, REVERSED)


def _at_alphabet(a: Automaton, k: int) -> Automaton:
    return widen(a, k) if a.k < k else a


def is_closed_language(lang: Automaton, k: int) -> bool:
    """Whether L = E(X) for some closed X inside Omega_k."""
    big = max(k, lang.k)
    rev = as_direction(_at_alphabet(lang, big), REVERSED)
    omega = as_direction(_at_alphabet(omega_acceptor(k), big), REVERSED)
    if not is_subset(rev, omega):
        return False
    return is_subset(image(rev, deletion_transducer(big)), rev)


@dataclass(frozen=True)
class BoundedClass:
    """A closed class inside Omega_k, stored as minimal DFAs in both directions."""

    k: int
    acceptor: Automaton  # reversed reading direction
    forward: Automaton = field(repr=False)

    @classmethod
    def from_language(cls, lang: Automaton, k: int | None = None,
                      check: bool = True) -> "BoundedClass":
        k = lang.k if k is None else k
        if lang.k > k:
            raise ValueError(f"language alphabet [{lang.k}] exceeds k={k}")
        lang = _at_alphabet(lang, k)
        if check and not is_closed_language(lang, k):
            raise NotClosedError("language is not the encoding of a closed class in Omega_%d" % k)
        rev = minimize(as_direction(lang, REVERSED))
        fwd = minimize(as_direction(rev, FORWARD))
        return cls(k, rev, fwd)

    def contains(self, p: Sequence[int]) -> bool:
        return member(self, p)

    def __contains__(self, p):
        return member(self, p)


def omega_class(k: int) -> BoundedClass:
    return BoundedClass.from_language(omega_acceptor(k), k, check=False)


def encode_basis(perms: Iterable[Sequence[int]], k: int,
                 direction=FORWARD) -> tuple[Automaton, list]:
    """Acceptor for the encodings of the given permutations that lie in Omega_k.

    Permutations with max rank above k are returned separately: no member of
    Omega_k can contain them, so they never constrain a subclass of Omega_k.
    """
    kept, dropped = [], []
    for p in perms:
        (kept if max_rank(p) <= k else dropped).append(tuple(p))
    if dropped:
        log.info("basis elements outside Omega_%d impose no restriction: %s", k, dropped)
    return finite_acceptor([rank_encode(p) for p in kept], k, direction), dropped


def closed_from_basis(basis, k: int) -> BoundedClass:
    """The class of Omega_k members avoiding everything encoded by `basis`.

    `basis` is an automaton over [k] whose words are encodings (any
    generating set works, not only an antichain), or an iterable of
    permutations.
    """
    if not isinstance(basis, Automaton):
        basis, _ = encode_basis(basis, k)
    if basis.k > k:
        raise ValueError(f"basis alphabet [{basis.k}] exceeds k={k}")
    b = as_direction(_at_alphabet(basis, k), REVERSED)
    omega = as_direction(omega_acceptor(k), REVERSED)
    if not is_subset(b, omega):
        raise ValueError("basis language contains words that are not encodings")
    above = image(b, transpose(involvement_transducer(k)))
    lang = complement(determinize(above), within=omega)
    return BoundedClass.from_language(lang, k, check=False)


def basis_from_closed(x: BoundedClass, within_omega: bool = False) -> Automaton:
    """Forward minimal DFA for the encodings of the basis of x.

    Every basis element of a class inside Omega_k lies in Omega_{k+1} (a
    letter above k+1 survives any other deletion), so the whole basis is
    computed over [k+1].  With `within_omega` only the basis elements that
    are themselves in Omega_k are kept, over [k].
    """
    k = x.k if within_omega else x.k + 1
    from .transducers import derivative_languages

    lang = as_direction(_at_alphabet(x.acceptor, k), REVERSED)
    every = derivative_languages(lang, k)[2]
    basis = complement(lang, within=every)
    return minimize(as_direction(minimize(basis), FORWARD))


def is_finitely_based(x: BoundedClass) -> bool:
    return is_finite(basis_from_closed(x))


def member(x: BoundedClass, p: Sequence[int]) -> bool:
    """Linear time: bounded rank encoding, then one pass of the forward DFA."""
    word = rank_encode_bounded(p, x.k)
    if word is None:
        return False
    a = x.forward
    delta = a.delta
    s = a.initial
    for e in word:
        row = delta[s].get(e)
        if row is None:
            return False
        s = row[0]
    return s in a.finals


def is_omega_restriction(x: BoundedClass) -> bool:
    """True when x is all of Omega_k."""
    omega = as_direction(omega_acceptor(x.k), REVERSED)
    return is_empty(intersect(omega, complement(x.acceptor)))
