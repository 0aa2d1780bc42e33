"""Exact counting and rational generating functions of regular languages.

Polynomials are tuples of Python ints, constant term first, with no
trailing zeros (the zero polynomial is the empty tuple).  No floating point
is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .automata import Automaton, determinize, minimize


# -- integer polynomial arithmetic ------------------------------------------

def trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def pneg(p):
    return tuple(-c for c in p)


def psub(p, q):
    return padd(p, pneg(q))


def pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def pdivexact(p, q):
    """p / q for integer polynomials when the quotient is known to be integral."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    dq, lead = len(q) - 1, q[-1]
    if len(p) - 1 < dq:
        if any(p):
            raise ArithmeticError("inexact polynomial division")
        return ()
    quot = [0] * (len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        c, r = divmod(p[i], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[i - dq] = c
        if c:
            for j, b in enumerate(q):
                p[i - dq + j] -= c * b
    if any(p[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return trim(quot)


def content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p):
    g = content(p)
    return tuple(c // g for c in p) if g else ()


def _qdivmod(p, q):
    p = [Fraction(c) for c in p]
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and any(p):
        shift = len(p) - len(q)
        c = p[-1] / q[-1]
        quot[shift] = c
        for j, b in enumerate(q):
            p[shift + j] -= c * b
        p.pop()
        while p and p[-1] == 0:
            p.pop()
    return quot, p


def pgcd(p, q):
    """Primitive integer gcd (positive leading coefficient) via Euclid over Q."""
    a, b = [Fraction(c) for c in trim(p)], [Fraction(c) for c in trim(q)]
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    if not a:
        return ()
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    g = primitive(trim(int(c * den) for c in a))
    return g if g[-1] > 0 else pneg(g)


def bareiss_det(matrix) -> tuple:
    """Fraction-free determinant of a square matrix of integer polynomials.

    Pivots are taken on the diagonal in index order; the caller must ensure
    the leading principal minors are nonzero (true for I - xA and matrices
    bordered from it).
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return (1,)
    prev = (1,)
    for k in range(n - 1):
        pivot = m[k][k]
        if not pivot:
            raise ArithmeticError(f"zero pivot at {k}")
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = pmul(m[i][j], pivot)
                if mik and m[k][j]:
                    num = psub(num, pmul(mik, m[k][j]))
                m[i][j] = pdivexact(num, prev) if prev != (1,) else num
            m[i][k] = ()
        prev = pivot
    return m[n - 1][n - 1]


# -- generating functions ----------------------------------------------------

@dataclass(frozen=True)
class RationalGF:
    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        if not self.denominator or self.denominator[0] != 1:
            raise ValueError("denominator must have constant term 1")

    def __str__(self):
        return f"({format_poly(self.numerator)}) / ({format_poly(self.denominator)})"


def format_poly(p, var="x") -> str:
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        terms.append(("-" if c < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def reduce_fraction(num, den) -> RationalGF:
    """Lowest terms with denominator constant term +1."""
    num, den = trim(num), trim(den)
    if not num:
        return RationalGF((), (1,))
    g = pgcd(num, den)
    if len(g) > 1:
        num, den = pdivexact(num, g), pdivexact(den, g)
    c = den[0]
    if c not in (1, -1):
        # can only happen if den was not 1 at x = 0 to begin with
        raise ArithmeticError("denominator constant term is not a unit")
    if c == -1:
        num, den = pneg(num), pneg(den)
    return RationalGF(num, den)


def transfer_matrix(a: Automaton):
    """Deterministic trimmed machine and its letter-count matrix."""
    d = minimize(a)
    n = d.state_count
    A = [[0] * n for _ in range(n)]
    for s, _, t in d.transitions:
        A[s][t] += 1
    return d, A


def generating_function(a: Automaton) -> RationalGF:
    """Length-counting series of L(a) as a reduced rational function.

    With A the transfer matrix of the minimal DFA, u the initial indicator
    and v the final indicator, the series is u (I - xA)^{-1} v.  The
    numerator u adj(I - xA) v is the determinant of the matrix bordered by
    v on the right and -u below; the denominator is det(I - xA).
    """
    d, A = transfer_matrix(a)
    n = d.state_count
    if not d.finals:
        return RationalGF((), (1,))
    M = [[trim(((1 if i == j else 0), -A[i][j])) for j in range(n)] for i in range(n)]
    den = bareiss_det(M)
    bordered = [row + [(1,) if i in d.finals else ()] for i, row in enumerate(M)]
    bordered.append([(-1,) if j == d.initial else () for j in range(n)] + [()])
    num = bareiss_det(bordered)
    return reduce_fraction(num, den)


def count_words(a: Automaton, upto: int) -> list[int]:
    """counts[n] = number of accepted words of length n, for n = 0..upto."""
    d = determinize(a)
    vec = {d.initial: 1}
    counts = []
    for _ in range(upto + 1):
        counts.append(sum(c for s, c in vec.items() if s in d.finals))
        nxt: dict[int, int] = {}
        for s, c in vec.items():
            for targets in d.delta[s].values():
                t = targets[0]
                nxt[t] = nxt.get(t, 0) + c
        vec = nxt
    return counts


def expand(gf: RationalGF, upto: int) -> list[int]:
    num, den = gf.numerator, gf.denominator
    out = []
    for n in range(upto + 1):
        v = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            v -= den[i] * out[n - i]
        out.append(v)
    return out


@dataclass(frozen=True)
class Recurrence:
    """a_n = c_1 a_{n-1} + ... + c_d a_{n-d} for n >= len(initial)."""

    order: int
    coefficients: tuple
    initial: tuple

    def terms(self, upto: int) -> list[int]:
        out = list(self.initial[:upto + 1])
        for n in range(len(out), upto + 1):
            out.append(sum(c * out[n - i] for i, c in enumerate(self.coefficients, 1)
                           if n - i >= 0))
        return out

    def __str__(self):
        if self.order == 0:
            rhs = "0"
        else:
            parts = []
            for i, c in enumerate(self.coefficients, 1):
                if c:
                    parts.append(f"{c}*a(n-{i})" if c != 1 else f"a(n-{i})")
            rhs = " + ".join(parts).replace("+ -", "- ") or "0"
        init = ", ".join(f"a({i})={v}" for i, v in enumerate(self.initial))
        return f"a(n) = {rhs}; {init}"


def linear_recurrence(gf: RationalGF) -> Recurrence:
    den = gf.denominator
    d = len(den) - 1
    coeffs = tuple(-c for c in den[1:])
    count = max(d, len(gf.numerator))
    return Recurrence(d, coeffs, tuple(expand(gf, count - 1)) if count else ())
