"""Permutations made of consecutive monotone segments.

A sign sequence phi = f_1 ... f_k describes a machine making k scans over
the input 1..n, forwards for '+' and backwards for '-'.  A computation word
c of length n over [k] says on which scan each input value is output, and
``decode_word`` recovers the output permutation.  The set W_phi of all such
outputs is a closed class; each member has finitely many computation words
("encodings") and exactly one greedy one.

Throughout, "subword" means scattered subsequence: letters deleted, order
kept.  A closed subclass of W_phi with a finite basis is the set of decoded
words avoiding every encoding of every basis element as a subword.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .automata import Automaton, accepts, explore, intersect, minimize
from .enumeration import RationalGF, generating_function


class SignError(ValueError):
    pass


class NotInClassError(ValueError):
    def __init__(self, perm, position):
        self.perm = tuple(perm)
        self.position = position
        super().__init__(f"{''.join(map(str, self.perm)) or 'ε'} is not in W_phi: "
                         f"position {position} cannot be placed in any segment")


def parse_signs(phi) -> tuple:
    """Accept '+--' style strings or sequences of +1/-1 / '+'/'-'."""
    out = []
    for f in phi:
        if f in ("+", 1, "1"):
            out.append(1)
        elif f in ("-", -1, "−"):
            out.append(-1)
        else:
            raise SignError(f"bad sign {f!r}")
    if not out:
        raise SignError("sign sequence must be nonempty")
    return tuple(out)


def format_signs(phi) -> str:
    return "".join("+" if f > 0 else "-" for f in parse_signs(phi))


def decode_word(phi, c: Sequence[int]) -> tuple:
    """The permutation produced by computation word c."""
    phi = parse_signs(phi)
    k = len(phi)
    groups: list[list[int]] = [[] for _ in range(k)]
    for value, letter in enumerate(c, 1):
        if not 1 <= letter <= k:
            raise ValueError(f"letter {letter} outside [1..{k}]")
        groups[letter - 1].append(value)
    out = []
    for sign, g in zip(phi, groups):
        out.extend(g if sign > 0 else reversed(g))
    return tuple(out)


def _run_ends(p, sign) -> list[int]:
    """ends[s] = end (exclusive) of the longest monotone run starting at s."""
    n = len(p)
    ends = [n] * (n + 1)
    for s in range(n - 2, -1, -1):
        ends[s] = ends[s + 1] if (p[s] < p[s + 1]) == (sign > 0) else s + 1
    return ends


def _word_for(p, segments) -> tuple:
    c = [0] * len(p)
    for letter, (a, b) in enumerate(segments, 1):
        for v in p[a:b]:
            c[v - 1] = letter
    return tuple(c)


def encodings(phi, p: Sequence[int]) -> set:
    """All computation words decoding to p (empty iff p is not in W_phi).

    Segment boundaries are enumerated with a table of which (segment, start)
    pairs can still finish, so only successful segmentations are built.
    """
    phi = parse_signs(phi)
    p = tuple(p)
    n, k = len(p), len(phi)
    ends = {f: _run_ends(p, f) for f in set(phi)}

    @lru_cache(maxsize=None)
    def finishes(j, s):
        if j == k:
            return s == n
        if s == n:
            return finishes(j + 1, s)
        return any(finishes(j + 1, e) for e in range(s, ends[phi[j]][s] + 1))

    out = set()

    def build(j, s, segs):
        if j == k:
            out.add(_word_for(p, segs))
            return
        top = ends[phi[j]][s] if s < n else n
        for e in range(s, top + 1):
            if finishes(j + 1, e):
                build(j + 1, e, segs + [(s, e)])

    if finishes(0, 0):
        build(0, 0, [])
    return out


def greedy_encoding(phi, p: Sequence[int]) -> tuple:
    """The encoding whose segments are each taken as long as possible."""
    phi = parse_signs(phi)
    p = tuple(p)
    n = len(p)
    s = 0
    segs = []
    for f in phi:
        e = s
        if s < n:
            e = s + 1
            while e < n and (p[e - 1] < p[e]) == (f > 0):
                e += 1
        segs.append((s, e))
        s = e
    if s < n:
        raise NotInClassError(p, s + 1)
    return _word_for(p, segs)


def in_w(phi, p) -> bool:
    try:
        greedy_encoding(phi, p)
    except NotInClassError:
        return False
    return True


def _pair_step(kind, p, q, st, e):
    seen_p, seen_q, flag = st
    if e == p:
        if kind == "++":       # some p after the first q
            flag = flag or seen_q
        elif kind == "+-":     # the last of p, q seen is p
            flag = True
        elif kind == "-+":     # first p before first q
            flag = flag if seen_p else not seen_q
        seen_p = True
    elif e == q:
        if kind == "+-":
            flag = False
        elif kind == "--":     # some q after the first p
            flag = flag or seen_p
        seen_q = True
    return seen_p, seen_q, flag


def greedy_automaton(phi) -> Automaton:
    """Minimal DFA for the set of greedy encodings.

    A word is greedy iff its letters are exactly {1..m} for some m and, for
    every consecutive pair p, p+1 of used letters, the segment for p could
    not be extended by the first entry of the segment for p+1:
      ++ : the last p comes after the first p+1
      +- : the last p comes after the last p+1
      -+ : the first p comes before the first p+1
      -- : the first p comes before the last p+1
    """
    phi = parse_signs(phi)
    k = len(phi)
    kinds = tuple(("+" if phi[i] > 0 else "-") + ("+" if phi[i + 1] > 0 else "-")
                  for i in range(k - 1))
    start = (frozenset(), ((False, False, False),) * (k - 1))

    def step(state, e):
        seen, pairs = state
        pairs = tuple(_pair_step(kind, i + 1, i + 2, st, e) if e in (i + 1, i + 2) else st
                      for i, (kind, st) in enumerate(zip(kinds, pairs)))
        return seen | {e}, pairs

    def final(state):
        seen, pairs = state
        if seen != set(range(1, len(seen) + 1)):
            return False
        return all(flag for sp, sq, flag in pairs if sp and sq)

    return minimize(explore(k, start, step, final))


def subword_free_acceptor(k: int, patterns: Iterable[Sequence[int]]) -> Automaton:
    """Minimal DFA for the words over [k] containing none of `patterns` as a
    scattered subword.  The state records the greedy (leftmost) progress
    through each pattern, which is optimal for subsequence matching."""
    patterns = sorted({tuple(s) for s in patterns}, key=lambda s: (len(s), s))
    start = tuple(0 for _ in patterns)

    def step(state, e):
        if any(i == len(s) for i, s in zip(state, patterns)):
            return state
        return tuple(i + 1 if i < len(s) and s[i] == e else i
                     for i, s in zip(state, patterns))

    return minimize(explore(k, start, step,
                            lambda st: all(i < len(s) for i, s in zip(st, patterns))))


def closed_subset_acceptor(phi, basis: Iterable[Sequence[int]]) -> Automaton:
    """DFA for every computation word whose permutation avoids the basis."""
    phi = parse_signs(phi)
    patterns = set()
    for b in basis:
        patterns |= encodings(phi, b)
    return subword_free_acceptor(len(phi), patterns)


@dataclass(frozen=True)
class MonotoneClass:
    """The members of W_phi avoiding a finite basis."""

    phi: tuple
    basis: tuple

    def __init__(self, phi, basis=()):
        object.__setattr__(self, "phi", parse_signs(phi))
        object.__setattr__(self, "basis", tuple(sorted({tuple(b) for b in basis},
                                                       key=lambda b: (len(b), b))))

    @cached_property
    def acceptor(self) -> Automaton:
        return closed_subset_acceptor(self.phi, self.basis)

    @cached_property
    def greedy_acceptor(self) -> Automaton:
        return minimize(intersect(self.acceptor, greedy_automaton(self.phi)))

    def contains(self, p: Sequence[int]) -> bool:
        try:
            word = greedy_encoding(self.phi, p)
        except NotInClassError:
            return False
        return accepts(self.acceptor, word)

    __contains__ = contains

    def generating_function(self) -> RationalGF:
        return generating_function(self.greedy_acceptor)


def member_monotone(phi, basis, p: Sequence[int]) -> bool:
    return MonotoneClass(phi, basis).contains(p)


def gf_monotone(phi, basis=()) -> RationalGF:
    return MonotoneClass(phi, basis).generating_function()
