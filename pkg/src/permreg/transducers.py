"""Letter-to-letter transducers on rank encodings.

A transducer relates input words to output words; label 0 is epsilon on
either tape.  Like automata, transducers carry a reading direction, and the
two built here (single deletion and arbitrary deletion) read right to left,
because that is the order in which a deletion's effect on the remaining
letters can be computed with finite memory.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .automata import (EPS, REVERSED, AlphabetError, Automaton, Direction,
                       DirectionError, as_direction, complement, intersect, minimize)


@dataclass(frozen=True)
class Transducer:
    k: int
    state_count: int
    transitions: frozenset  # (src, input, output, dst)
    initial: int
    finals: frozenset
    direction: Direction = REVERSED

    def __post_init__(self):
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "direction", Direction(self.direction))
        if not 0 <= self.initial < self.state_count:
            raise ValueError(f"initial state {self.initial} out of range")
        for f in self.finals:
            if not 0 <= f < self.state_count:
                raise ValueError(f"final state {f} out of range")
        for src, a, b, dst in self.transitions:
            if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
                raise ValueError(f"transition {src} -{a}:{b}-> {dst} uses a missing state")
            if not (0 <= a <= self.k and 0 <= b <= self.k):
                raise AlphabetError(f"label {a}:{b} outside alphabet [{self.k}]")

    @cached_property
    def by_input(self) -> list[dict[int, list[tuple[int, int]]]]:
        """by_input[state][input] -> [(output, target), ...]"""
        table: list[dict] = [{} for _ in range(self.state_count)]
        for src, a, b, dst in sorted(self.transitions):
            table[src].setdefault(a, []).append((b, dst))
        return table


def transpose(t: Transducer) -> Transducer:
    return Transducer(t.k, t.state_count,
                      frozenset((s, b, a, d) for s, a, b, d in t.transitions),
                      t.initial, t.finals, t.direction)


def identity_transducer(k: int, direction: Direction = REVERSED) -> Transducer:
    return Transducer(k, 1, frozenset((0, e, e, 0) for e in range(1, k + 1)), 0,
                      frozenset({0}), direction)


def relates(t: Transducer, x: Sequence[int], y: Sequence[int]) -> bool:
    """Whether (x, y) is in the relation, by search over (state, i, j)."""
    if t.direction is REVERSED:
        x, y = tuple(x)[::-1], tuple(y)[::-1]
    start = (t.initial, 0, 0)
    seen = {start}
    queue = deque([start])
    while queue:
        s, i, j = queue.popleft()
        if s in t.finals and i == len(x) and j == len(y):
            return True
        for a, moves in t.by_input[s].items():
            if a != EPS and (i == len(x) or x[i] != a):
                continue
            i2 = i if a == EPS else i + 1
            for b, d in moves:
                if b != EPS and (j == len(y) or y[j] != b):
                    continue
                nxt = (d, i2, j if b == EPS else j + 1)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return False


def image(lang: Automaton, t: Transducer) -> Automaton:
    """Automaton for {y : (x, y) in t for some x in L(lang)}.

    States are pairs (transducer state, automaton state).  A transducer move
    p1 -d:g-> p2 combines with an automaton move q1 -d-> q2, where an epsilon
    input may also be matched by staying put in the automaton.  The pair
    machine emits g.  Epsilon moves of `lang` itself run on their own.
    """
    if lang.k != t.k:
        raise AlphabetError(f"alphabets differ: [{lang.k}] vs [{t.k}]")
    if lang.direction != t.direction:
        raise DirectionError(
            f"directions differ: {lang.direction.value} vs {t.direction.value}")
    start = (t.initial, lang.initial)
    index = {start: 0}
    order = [start]
    transitions = set()
    queue = deque([start])

    def target(pair):
        if pair not in index:
            index[pair] = len(order)
            order.append(pair)
            queue.append(pair)
        return index[pair]

    while queue:
        p, q = pair = queue.popleft()
        src = index[pair]
        for q2 in lang.delta[q].get(EPS, ()):
            transitions.add((src, EPS, target((p, q2))))
        for d, moves in t.by_input[p].items():
            qs = [q] if d == EPS else lang.delta[q].get(d, ())
            for q2 in qs:
                for g, p2 in moves:
                    transitions.add((src, g, target((p2, q2))))
    finals = [i for i, (p, q) in enumerate(order) if p in t.finals and q in lang.finals]
    return Automaton(lang.k, len(order), frozenset(transitions), 0, frozenset(finals),
                     lang.direction)


def deletion_transducer(k: int) -> Transducer:
    """Relation {(p, p') : p' is p with one letter deleted, as encodings}.

    Read right to left.  State 0 copies letters until it picks the letter to
    delete; state r >= 1 then tracks the rank of the deleted entry among the
    entries to the right of the current position, frozen at k.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    transitions = set()
    for e in range(1, k + 1):
        transitions.add((0, e, e, 0))
        transitions.add((0, e, EPS, e))
    for r in range(1, k + 1):
        for e in range(1, k + 1):
            if e > r:
                transitions.add((r, e, e - 1, r))
            else:
                transitions.add((r, e, e, min(r + 1, k)))
    return Transducer(k, k + 1, frozenset(transitions), 0, frozenset(range(1, k + 1)),
                      REVERSED)


def vector_step(s: tuple, e: int, delete: bool, k: int) -> tuple[tuple, int]:
    """One step of the multi-deletion scan on a 0/1 state vector.

    Returns the new vector and the output letter (0 when deleting).
    Entry t of the vector records whether a pending deleted entry currently
    has rank t; ranks reaching k fall off the right end.
    """
    bit = 1 if delete else 0
    new = (s[:e - 1] + (bit,) + s[e - 1:])[:k - 1]
    out = EPS if delete else e - sum(s[:e - 1])
    return new, out


def involvement_transducer(k: int) -> Transducer:
    """Relation {(p, p') : p' is p with any number (possibly zero) of letters
    deleted}.  Only vectors reachable from all-zeros are materialized."""
    if k < 1:
        raise ValueError("k must be at least 1")
    start = (0,) * (k - 1)
    index = {start: 0}
    order = [start]
    transitions = set()
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for e in range(1, k + 1):
            for delete in (False, True):
                new, out = vector_step(s, e, delete, k)
                if new not in index:
                    index[new] = len(order)
                    order.append(new)
                    queue.append(new)
                transitions.add((index[s], e, out, index[new]))
    return Transducer(k, len(order), frozenset(transitions), 0,
                      frozenset(range(len(order))), REVERSED)


def delete_letter(p: Sequence[int], i: int, k: int | None = None) -> tuple:
    """Word-level single deletion: the i-th derivative of an encoding.

    Direct transcription of the right-to-left scan with a frozen counter.
    """
    if not 1 <= i <= len(p):
        raise IndexError(f"position {i} out of range for length {len(p)}")
    if k is None:
        k = max(p)
    out = list(p)
    r = p[i - 1]
    for j in range(i - 2, -1, -1):
        if p[j] > r:
            out[j] = p[j] - 1
        elif r < k:
            r += 1
    del out[i - 1]
    return tuple(out)


def derivative_languages(lang: Automaton, k: int | None = None):
    """The three derivative sets of a regular L inside the encodings over [k].

    Returns minimized automata, in the direction of `lang`, for
      1. all single-letter deletions of words of L,
      2. encodings with some deletion in L,
      3. encodings with every deletion in L.
    """
    from .bounded import omega_acceptor  # circular at import time

    k = lang.k if k is None else k
    if lang.k != k:
        from .automata import widen
        lang = widen(lang, k)
    direction = lang.direction
    rev = as_direction(lang, REVERSED)
    omega = as_direction(omega_acceptor(k), REVERSED)
    d = deletion_transducer(k)
    dt = transpose(d)
    first = image(rev, d)
    some = intersect(image(rev, dt), omega)
    every = complement(image(complement(rev), dt), within=omega)
    return tuple(minimize(as_direction(minimize(m), direction)) for m in (first, some, every))
