"""Finite automata over the alphabet [k] = {1, ..., k}.

Label 0 stands for an epsilon move.  Every automaton carries a reading
direction.  Its language is always a set of words written in their natural
left-to-right order; a ``REVERSED`` machine simply consumes a word starting
from its last letter.  ``reverse`` therefore flips the machine and the flag
together and leaves the language alone.  Binary operations refuse to combine
machines with different directions.

Operations that build a new machine from scratch (``determinize``,
``minimize``, ``complement``) number states in breadth-first discovery order
from the initial state, taking letters in ascending order, so equal inputs
give identical outputs.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

EPS = 0


class Direction(str, enum.Enum):
    FORWARD = "forward"
    REVERSED = "reversed"

    def flipped(self) -> "Direction":
        return Direction.REVERSED if self is Direction.FORWARD else Direction.FORWARD


FORWARD = Direction.FORWARD
REVERSED = Direction.REVERSED


class AlphabetError(ValueError):
    pass


class DirectionError(ValueError):
    pass


@dataclass(frozen=True)
class Automaton:
    k: int
    state_count: int
    transitions: frozenset
    initial: int
    finals: frozenset
    direction: Direction = FORWARD

    def __post_init__(self):
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "direction", Direction(self.direction))
        if self.k < 0:
            raise ValueError("alphabet size must be non-negative")
        if not 0 <= self.initial < self.state_count:
            raise ValueError(f"initial state {self.initial} out of range")
        for f in self.finals:
            if not 0 <= f < self.state_count:
                raise ValueError(f"final state {f} out of range")
        for src, label, dst in self.transitions:
            if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
                raise ValueError(f"transition {src} -{label}-> {dst} uses a missing state")
            if not 0 <= label <= self.k:
                raise AlphabetError(f"label {label} outside alphabet [{self.k}]")

    @cached_property
    def delta(self) -> list[dict[int, list[int]]]:
        """Adjacency: delta[state][label] -> sorted target list."""
        table: list[dict[int, list[int]]] = [{} for _ in range(self.state_count)]
        for src, label, dst in sorted(self.transitions):
            table[src].setdefault(label, []).append(dst)
        return table

    @property
    def is_deterministic(self) -> bool:
        return all(EPS not in row and all(len(t) == 1 for t in row.values())
                   for row in self.delta)

    def epsilon_closure(self, states: Iterable[int]) -> frozenset:
        seen = set(states)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in self.delta[s].get(EPS, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def __repr__(self):
        return (f"Automaton(k={self.k}, states={self.state_count}, "
                f"transitions={len(self.transitions)}, direction={self.direction.value})")


def explore(k: int, start: Hashable, step: Callable, is_final: Callable,
            direction: Direction = FORWARD) -> Automaton:
    """Build a DFA from an implicit one by breadth-first search.

    `step(state, letter)` returns the next state or None for no move.
    States are numbered in discovery order, letters tried in ascending order.
    """
    index = {start: 0}
    order = [start]
    transitions = []
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for e in range(1, k + 1):
            t = step(s, e)
            if t is None:
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            transitions.append((index[s], e, index[t]))
    finals = [i for i, s in enumerate(order) if is_final(s)]
    return Automaton(k, len(order), frozenset(transitions), 0, frozenset(finals), direction)


def _check_pair(a: Automaton, b: Automaton):
    if a.k != b.k:
        raise AlphabetError(f"alphabets differ: [{a.k}] vs [{b.k}]")
    if a.direction != b.direction:
        raise DirectionError(f"directions differ: {a.direction.value} vs {b.direction.value}")


def empty_language(k: int, direction: Direction = FORWARD) -> Automaton:
    return Automaton(k, 1, frozenset(), 0, frozenset(), direction)


def all_words(k: int, direction: Direction = FORWARD) -> Automaton:
    return Automaton(k, 1, frozenset((0, e, 0) for e in range(1, k + 1)), 0,
                     frozenset({0}), direction)


def finite_acceptor(words: Iterable[Sequence[int]], k: int,
                    direction: Direction = FORWARD) -> Automaton:
    """Trie acceptor for an explicit finite set of words."""
    words = {tuple(w) for w in words}
    for w in words:
        for e in w:
            if not 1 <= e <= k:
                raise AlphabetError(f"letter {e} outside alphabet [{k}] in word {w}")
    if direction is REVERSED:
        words = {w[::-1] for w in words}
    prefixes = {w[:i] for w in words for i in range(len(w) + 1)}
    return explore(k, (), lambda s, e: s + (e,) if s + (e,) in prefixes else None,
                   lambda s: s in words, direction)


def widen(a: Automaton, k: int) -> Automaton:
    """The same machine viewed over a larger alphabet [k]."""
    if k < a.k:
        raise AlphabetError(f"cannot shrink alphabet [{a.k}] to [{k}]")
    return Automaton(k, a.state_count, a.transitions, a.initial, a.finals, a.direction)


def determinize(a: Automaton) -> Automaton:
    """Subset construction.  The result is partial: no dead state is added."""
    start = a.epsilon_closure([a.initial])

    def step(subset, e):
        targets = {t for s in subset for t in a.delta[s].get(e, ())}
        return a.epsilon_closure(targets) if targets else None

    return explore(a.k, start, step, lambda s: not s.isdisjoint(a.finals), a.direction)


def complete(a: Automaton) -> Automaton:
    """Add a rejecting sink so every state has a move on every letter."""
    a = a if a.is_deterministic else determinize(a)
    missing = [(s, e) for s in range(a.state_count) for e in range(1, a.k + 1)
               if e not in a.delta[s]]
    if not missing:
        return a
    sink = a.state_count
    extra = {(s, e, sink) for s, e in missing} | {(sink, e, sink) for e in range(1, a.k + 1)}
    return Automaton(a.k, sink + 1, a.transitions | extra, a.initial, a.finals, a.direction)


def complement(a: Automaton, within: Automaton | None = None) -> Automaton:
    """[k]* minus L(a), or L(within) minus L(a)."""
    if within is not None:
        _check_pair(a, within)
    d = complete(determinize(a))
    flipped = Automaton(d.k, d.state_count, d.transitions, d.initial,
                        frozenset(range(d.state_count)) - d.finals, d.direction)
    if within is None:
        return flipped
    return intersect(within, flipped)


def intersect(a: Automaton, b: Automaton) -> Automaton:
    """Product construction over the reachable part; epsilon moves interleave."""
    _check_pair(a, b)
    start = (a.initial, b.initial)
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
        for p2 in a.delta[p].get(EPS, ()):
            transitions.add((src, EPS, target((p2, q))))
        for q2 in b.delta[q].get(EPS, ()):
            transitions.add((src, EPS, target((p, q2))))
        for e in range(1, a.k + 1):
            for p2 in a.delta[p].get(e, ()):
                for q2 in b.delta[q].get(e, ()):
                    transitions.add((src, e, target((p2, q2))))
    finals = [i for i, (p, q) in enumerate(order) if p in a.finals and q in b.finals]
    return Automaton(a.k, len(order), frozenset(transitions), 0, frozenset(finals), a.direction)


def union(a: Automaton, b: Automaton) -> Automaton:
    _check_pair(a, b)
    shift = a.state_count + 1
    transitions = {(s + 1, e, t + 1) for s, e, t in a.transitions}
    transitions |= {(s + shift, e, t + shift) for s, e, t in b.transitions}
    transitions |= {(0, EPS, a.initial + 1), (0, EPS, b.initial + shift)}
    finals = {f + 1 for f in a.finals} | {f + shift for f in b.finals}
    return Automaton(a.k, a.state_count + b.state_count + 1, frozenset(transitions), 0,
                     frozenset(finals), a.direction)


def reverse(a: Automaton) -> Automaton:
    """Flip every transition and the direction flag; the language is unchanged."""
    transitions = {(t, e, s) for s, e, t in a.transitions}
    if len(a.finals) == 1:
        (initial,) = a.finals
        return Automaton(a.k, a.state_count, frozenset(transitions), initial,
                         frozenset({a.initial}), a.direction.flipped())
    fresh = a.state_count
    transitions |= {(fresh, EPS, f) for f in a.finals}
    return Automaton(a.k, fresh + 1, frozenset(transitions), fresh,
                     frozenset({a.initial}), a.direction.flipped())


def as_direction(a: Automaton, direction: Direction) -> Automaton:
    return a if a.direction is Direction(direction) else reverse(a)


def _reachable(a: Automaton) -> set[int]:
    seen = {a.initial}
    stack = [a.initial]
    while stack:
        s = stack.pop()
        for targets in a.delta[s].values():
            for t in targets:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return seen


def _coreachable(a: Automaton) -> set[int]:
    back: dict[int, list[int]] = {}
    for s, _, t in a.transitions:
        back.setdefault(t, []).append(s)
    seen = set(a.finals)
    stack = list(seen)
    while stack:
        t = stack.pop()
        for s in back.get(t, ()):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return seen


def is_empty(a: Automaton) -> bool:
    return a.finals.isdisjoint(_reachable(a))


def is_finite(a: Automaton) -> bool:
    """No cycle through a useful state of the determinized machine."""
    d = determinize(a)
    useful = _reachable(d) & _coreachable(d)
    # iterative three-colour DFS restricted to useful states
    colour = dict.fromkeys(useful, 0)
    for root in useful:
        if colour[root]:
            continue
        colour[root] = 1
        stack = [(root, iter(d.delta[root].values()))]
        while stack:
            s, it = stack[-1]
            advanced = False
            for targets in it:
                t = targets[0]
                if t not in colour:
                    continue
                if colour[t] == 1:
                    return False
                if colour[t] == 0:
                    colour[t] = 1
                    stack.append((t, iter(d.delta[t].values())))
                    advanced = True
                    break
            if not advanced:
                colour[s] = 2
                stack.pop()
    return True


def is_subset(a: Automaton, b: Automaton) -> bool:
    _check_pair(a, b)
    return is_empty(intersect(a, complement(b)))


def language_equal(a: Automaton, b: Automaton) -> bool:
    return is_subset(a, b) and is_subset(b, a)


def accepts(a: Automaton, word: Sequence[int]) -> bool:
    """Membership; linear in len(word) for deterministic machines."""
    for e in word:
        if not 1 <= e <= a.k:
            raise AlphabetError(f"letter {e} outside alphabet [{a.k}]")
    letters = reversed(word) if a.direction is REVERSED else word
    delta = a.delta
    if a.is_deterministic:
        s = a.initial
        for e in letters:
            row = delta[s].get(e)
            if row is None:
                return False
            s = row[0]
        return s in a.finals
    current = a.epsilon_closure([a.initial])
    for e in letters:
        current = a.epsilon_closure({t for s in current for t in delta[s].get(e, ())})
        if not current:
            return False
    return not current.isdisjoint(a.finals)


def minimize(a: Automaton) -> Automaton:
    """Minimal DFA by partition refinement; the dead class is dropped
    unless it contains the initial state."""
    d = complete(determinize(a))
    n, k = d.state_count, d.k
    table = [[d.delta[s][e][0] for e in range(1, k + 1)] for s in range(n)]
    block = [1 if s in d.finals else 0 for s in range(n)]
    count = len(set(block))
    while True:
        signature = [(block[s], tuple(block[t] for t in table[s])) for s in range(n)]
        ids: dict = {}
        block = [ids.setdefault(sig, len(ids)) for sig in signature]
        if len(ids) == count:
            break
        count = len(ids)
    reps: dict[int, int] = {}
    for s in range(n):
        reps.setdefault(block[s], s)
    live = _coreachable(d)
    dead = {block[s] for s in range(n) if s not in live}
    final_blocks = {block[f] for f in d.finals}

    def step(b, e):
        t = block[table[reps[b]][e - 1]]
        return None if t in dead else t

    return explore(k, block[d.initial], step, lambda b: b in final_blocks, d.direction)


def enumerate_words(a: Automaton, maxlen: int | None = None):
    """Accepted words in length-lexicographic order of the machine's path.

    With maxlen None the language must be finite.
    """
    d = determinize(a)
    useful = _reachable(d) & _coreachable(d)
    if maxlen is None:
        if not is_finite(d):
            raise ValueError("language is infinite; give maxlen")
        maxlen = d.state_count
    out = []
    layer = [((), d.initial)] if d.initial in useful else []
    for _ in range(maxlen + 1):
        nxt = []
        for path, s in layer:
            if s in d.finals:
                out.append(path[::-1] if d.direction is REVERSED else path)
            for e in sorted(d.delta[s]):
                t = d.delta[s][e][0]
                if t in useful:
                    nxt.append((path + (e,), t))
        layer = nxt
    return sorted(out, key=lambda w: (len(w), w))


def words_upto(a: Automaton, n: int):
    """All accepted words of length <= n, by brute force over [k]^m."""
    for m in range(n + 1):
        for w in itertools.product(range(1, a.k + 1), repeat=m):
            if accepts(a, w):
                yield w
