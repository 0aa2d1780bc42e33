"""Simulators for two permuting machines: a stack and a riffle shuffler.

The input is always 1, 2, ..., n in that order.  A machine *generates* the
permutations it can output, and *sorts* p exactly when it generates p^-1.
These are exhaustive simulations meant as independent oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .perms import inverse


@lru_cache(maxsize=None)
def _stack_runs(remaining: int, depth: int, capacity: int | None) -> frozenset:
    """Outputs from a state with `depth` tokens stacked and `remaining` still
    to come, in relative values: stack holds 1..depth (top = depth), input
    holds depth+1..depth+remaining.  The stack is always increasing upwards,
    so its depth is the whole state."""
    if remaining == 0 and depth == 0:
        return frozenset({()})
    out = set()
    if depth:
        for rest in _stack_runs(remaining, depth - 1, capacity):
            out.add((depth,) + tuple(v + 1 if v >= depth else v for v in rest))
    if remaining and (capacity is None or depth < capacity):
        out |= _stack_runs(remaining - 1, depth + 1, capacity)
    return frozenset(out)


def stack_outputs(capacity: int | None, n: int) -> set:
    """Every permutation of length n a stack holding at most `capacity`
    tokens can produce (None = unbounded)."""
    if capacity is not None and capacity < 1 and n > 0:
        return set()
    return set(_stack_runs(n, 0, capacity))


def stack_generates(p: Sequence[int], capacity: int | None = None) -> bool:
    """Direct simulation: push inputs until the wanted value is on top."""
    stack: list[int] = []
    nxt = 1
    for v in p:
        while nxt <= v:
            stack.append(nxt)
            nxt += 1
            if capacity is not None and len(stack) > capacity:
                return False
        if not stack or stack[-1] != v:
            return False
        stack.pop()
    return True


def riffle_member(p: Sequence[int]) -> bool:
    """True iff a riffle shuffle of 1..n can produce p.

    The input is cut into 1..t and t+1..n and the two halves interleaved, so
    each half appears in increasing order; equivalently p^-1 has at most one
    descent.
    """
    q = inverse(p)
    return sum(a > b for a, b in zip(q, q[1:])) <= 1


def riffle_outputs(n: int) -> set:
    """All riffle shuffles of 1..n, by trying every cut and interleaving."""
    out = set()
    for t in range(n + 1):
        low, high = list(range(1, t + 1)), list(range(t + 1, n + 1))
        for spots in itertools.combinations(range(n), t):
            perm = [0] * n
            lo, hi = iter(low), iter(high)
            chosen = set(spots)
            for i in range(n):
                perm[i] = next(lo) if i in chosen else next(hi)
            out.add(tuple(perm))
    return out


def riffle_member_exhaustive(p: Sequence[int]) -> bool:
    return tuple(p) in riffle_outputs(len(p))


@dataclass(frozen=True)
class Stack:
    capacity: int | None = None

    def generates(self, p) -> bool:
        return stack_generates(p, self.capacity)

    def outputs(self, n) -> set:
        return stack_outputs(self.capacity, n)


@dataclass(frozen=True)
class Riffle:
    def generates(self, p) -> bool:
        return riffle_member(p)

    def outputs(self, n) -> set:
        return riffle_outputs(n)


def generates(machine, p: Sequence[int]) -> bool:
    return machine.generates(tuple(p))


def sorts(machine, p: Sequence[int]) -> bool:
    return machine.generates(inverse(p))
