import itertools
import random

import pytest

from permreg.automata import Automaton, Direction, finite_acceptor
from permreg.bounded import closed_from_basis

FIB_BASIS = [(3, 1, 2), (3, 2, 1), (2, 3, 1)]


def words(k, n):
    """All words over [k] of length exactly n."""
    return itertools.product(range(1, k + 1), repeat=n)


def words_upto(k, n):
    for m in range(n + 1):
        yield from words(k, m)


def no_consecutive_twos(w):
    return all(not (a == 2 and b == 2) for a, b in zip(w, w[1:]))


def random_nfa(rng, k=None, max_states=5, eps=True, direction=Direction.FORWARD):
    k = k or rng.randint(1, 3)
    n = rng.randint(1, max_states)
    labels = range(0 if eps else 1, k + 1)
    transitions = {(rng.randrange(n), rng.choice(labels), rng.randrange(n))
                   for _ in range(rng.randint(0, 3 * n))}
    finals = {s for s in range(n) if rng.random() < 0.4}
    return Automaton(k, n, frozenset(transitions), rng.randrange(n), frozenset(finals),
                     direction)


@pytest.fixture(scope="session")
def fib_class():
    return closed_from_basis(FIB_BASIS, 2)


@pytest.fixture(scope="session")
def fib_language():
    """The words over [2] ending in 1 with no two consecutive 2s, up to length 9."""
    ws = [w for w in words_upto(2, 9) if (not w or w[-1] == 1) and no_consecutive_twos(w)]
    return ws


@pytest.fixture
def rng():
    return random.Random(20240611)
