"""Permutations, pattern involvement and the rank encoding.

Permutations are plain tuples of the integers ``1..n`` in one-line notation.
Rank words are tuples of positive integers.  Everything here is a pure
function; the brute-force searches (``involves``, ``avoidance_class``,
``brute_basis``) are deliberately simple because they serve as ground truth
for the automata constructions elsewhere in the package.
"""

from __future__ import annotations

import bisect
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

log = logging.getLogger(__name__)

Perm = tuple  # tuple[int, ...], values 1..n
Word = tuple  # tuple[int, ...], letters >= 1


class EncodingError(ValueError):
    """A word that is not the rank encoding of any permutation."""

    def __init__(self, word, position):
        self.word = tuple(word)
        self.position = position
        n = len(self.word)
        super().__init__(
            f"letter {self.word[position - 1]} at position {position} exceeds "
            f"{n - position + 1}, the number of letters from there to the end"
        )


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def check_permutation(seq: Iterable[int]) -> Perm:
    p = tuple(seq)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def standardize(seq: Sequence[int]) -> Perm:
    """The permutation order-isomorphic to a sequence of distinct numbers."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def inverse(p: Sequence[int]) -> Perm:
    q = [0] * len(p)
    for i, v in enumerate(p, 1):
        q[v - 1] = i
    return tuple(q)


def involves(pattern: Sequence[int], host: Sequence[int]) -> bool:
    """True if some subsequence of `host` is order-isomorphic to `pattern`.

    Backtracking search.  When placing pattern entry ``t`` the already placed
    entries with the nearest smaller and nearest larger pattern values give
    an open interval the host value has to fall in.
    """
    m, n = len(pattern), len(host)
    if m == 0:
        return True
    if m > n:
        return False

    # for each t: index of the earlier entry with the next smaller / next
    # larger value, or -1
    below, above = [], []
    for t in range(m):
        lo = hi = -1
        for s in range(t):
            if pattern[s] < pattern[t] and (lo < 0 or pattern[s] > pattern[lo]):
                lo = s
            if pattern[s] > pattern[t] and (hi < 0 or pattern[s] < pattern[hi]):
                hi = s
        below.append(lo)
        above.append(hi)

    chosen = [0] * m

    def place(t, start):
        if t == m:
            return True
        lo = host[chosen[below[t]]] if below[t] >= 0 else 0
        hi = host[chosen[above[t]]] if above[t] >= 0 else n + 1
        # leave room for the m - t - 1 entries still to place
        for j in range(start, n - (m - t) + 1):
            if lo < host[j] < hi:
                chosen[t] = j
                if place(t + 1, j + 1):
                    return True
        return False

    return place(0, 0)


def avoids(host: Sequence[int], basis: Iterable[Sequence[int]]) -> bool:
    return not any(involves(b, host) for b in basis)


class _Fenwick:
    """Counts over 1..n with prefix sums and k-th smallest lookup."""

    def __init__(self, n):
        self.n = n
        self.tree = [0] * (n + 1)
        self.top = 1 << n.bit_length() if n else 0

    def add(self, i, delta):
        while i <= self.n:
            self.tree[i] += delta
            i += i & -i

    def prefix(self, i):
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & -i
        return s

    def kth(self, k):
        pos, step = 0, self.top
        while step:
            nxt = pos + step
            if nxt <= self.n and self.tree[nxt] < k:
                pos = nxt
                k -= self.tree[nxt]
            step >>= 1
        return pos + 1


def rank_encode(p: Sequence[int]) -> Word:
    """Letter i is the rank of p[i] among p[i], p[i+1], ..., p[n]."""
    n = len(p)
    fen = _Fenwick(n)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        fen.add(p[i], 1)
        out[i] = fen.prefix(p[i])
    return tuple(out)


def rank_encode_bounded(p: Sequence[int], k: int) -> Word | None:
    """Rank encoding in O(nk) time, or None as soon as a letter exceeds k.

    Scanning from the right it suffices to remember the k smallest values
    seen so far: a value's rank is at most k exactly when it lands among them.
    """
    smallest: list[int] = []
    out = [0] * len(p)
    for i in range(len(p) - 1, -1, -1):
        v = p[i]
        pos = bisect.bisect_left(smallest, v)
        if pos >= k:
            return None
        out[i] = pos + 1
        smallest.insert(pos, v)
        if len(smallest) > k:
            smallest.pop()
    return tuple(out)


def first_violation(word: Sequence[int]) -> int | None:
    """1-based position whose letter is too large to be decodable, or None."""
    n = len(word)
    for pos in range(n, 0, -1):
        if not 1 <= word[pos - 1] <= n - pos + 1:
            return pos
    return None


def is_encoding(word: Sequence[int]) -> bool:
    return first_violation(word) is None


def rank_decode(word: Sequence[int]) -> Perm:
    """Inverse of ``rank_encode``.

    The suffix starting at i holds exactly the values not yet used, so
    p[i] is the word[i]-th smallest unused value.
    """
    bad = first_violation(word)
    if bad is not None:
        raise EncodingError(word, bad)
    n = len(word)
    fen = _Fenwick(n)
    for v in range(1, n + 1):
        fen.add(v, 1)
    out = []
    for letter in word:
        v = fen.kth(letter)
        fen.add(v, -1)
        out.append(v)
    return tuple(out)


def max_rank(p: Sequence[int]) -> int:
    """Least k with p in the class of permutations whose encoding fits in [k]."""
    return max(rank_encode(p), default=0)


def delete_at(p: Sequence[int], i: int) -> Perm:
    """Remove the entry at 1-based position i and relabel."""
    if not 1 <= i <= len(p):
        raise IndexError(f"position {i} out of range for length {len(p)}")
    v = p[i - 1]
    return tuple(x - (x > v) for j, x in enumerate(p, 1) if j != i)


def permutations_of(n: int):
    return itertools.permutations(range(1, n + 1))


def avoidance_class(basis: Iterable[Sequence[int]], maxlen: int) -> list[list[Perm]]:
    """All permutations of length 0..maxlen avoiding every basis element."""
    basis = [tuple(b) for b in basis]
    return [[p for p in permutations_of(n) if avoids(p, basis)] for n in range(maxlen + 1)]


def is_antichain(perms: Iterable[Sequence[int]]) -> bool:
    perms = list(perms)
    for a, b in itertools.permutations(perms, 2):
        if len(a) <= len(b) and involves(a, b):
            return False
    return True


@dataclass(frozen=True)
class Basis:
    """Basis elements found by exhaustive search, restricted to length <= maxlen."""

    elements: tuple
    maxlen: int | None = None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p):
        return tuple(p) in self.elements

    @property
    def antichain(self) -> bool:
        return is_antichain(self.elements)

    def __str__(self):
        body = ", ".join("".join(map(str, b)) if len(b) < 10 else " ".join(map(str, b))
                         for b in self.elements)
        if self.maxlen is None:
            return "{" + body + "}"
        return "{" + body + "} (basis restricted to length <= %d)" % self.maxlen


def brute_basis(member: Callable[[Perm], bool], maxlen: int) -> Basis:
    """Minimal non-members up to length maxlen, for a closed-set predicate.

    A non-closed predicate can produce elements that are not pairwise
    incomparable; this is logged as a warning and visible through
    ``Basis.antichain``.
    """
    found = []
    prev = None
    for n in range(maxlen + 1):
        current = {p for p in permutations_of(n) if member(p)}
        for p in permutations_of(n):
            if p in current:
                continue
            if n == 0 or all(delete_at(p, i) in prev for i in range(1, n + 1)):
                found.append(p)
        prev = current
    result = Basis(tuple(found), maxlen)
    if not result.antichain:
        log.warning("membership predicate is not closed: basis candidates %s "
                    "are not an antichain", result)
    return result
