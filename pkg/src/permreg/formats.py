"""Plain-text formats for automata and permutation lists.

Automaton file::

    # comment
    alphabet 2
    states 3
    initial 0
    final 0 1
    direction forward
    t 0 1 0
    t 0 2 1

One ``t <src> <label> <dst>`` line per transition, label 0 meaning epsilon.
``serialize_automaton`` writes the header in this order and the transitions
sorted, so serialize(parse(text)) == text for any serialized text.

Permutation (and word) files hold one item per line as whitespace-separated
integers; an empty line is the empty permutation.  A single token of two or
more digits is also accepted and read digit by digit ("2331211").
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .automata import Automaton, Direction
from .perms import is_permutation


class FormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def serialize_automaton(a: Automaton) -> str:
    lines = [
        f"alphabet {a.k}",
        f"states {a.state_count}",
        f"initial {a.initial}",
        " ".join(["final"] + [str(f) for f in sorted(a.finals)]),
        f"direction {a.direction.value}",
    ]
    lines += [f"t {s} {e} {t}" for s, e, t in sorted(a.transitions)]
    return "\n".join(lines) + "\n"


_HEADERS = ("alphabet", "states", "initial", "final", "direction")


def parse_automaton(text: str) -> Automaton:
    header: dict = {}
    transitions = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "t":
            if len(rest) != 3:
                raise FormatError("transition needs: t <src> <label> <dst>", lineno)
            try:
                transitions.append(tuple(int(v) for v in rest))
            except ValueError:
                raise FormatError(f"non-integer in transition {line!r}", lineno) from None
            continue
        if key not in _HEADERS:
            raise FormatError(f"unknown keyword {key!r}", lineno)
        if key in header:
            raise FormatError(f"duplicate {key!r} line", lineno)
        if key == "direction":
            if rest not in (["forward"], ["reversed"]):
                raise FormatError("direction must be 'forward' or 'reversed'", lineno)
            header[key] = (Direction(rest[0]), lineno)
            continue
        try:
            values = [int(v) for v in rest]
        except ValueError:
            raise FormatError(f"non-integer value in {line!r}", lineno) from None
        if key != "final" and len(values) != 1:
            raise FormatError(f"{key!r} takes exactly one integer", lineno)
        header[key] = (values if key == "final" else values[0], lineno)
    for key in ("alphabet", "states", "initial", "final"):
        if key not in header:
            raise FormatError(f"missing {key!r} line")
    direction = header.get("direction", (Direction.FORWARD, None))[0]
    try:
        return Automaton(header["alphabet"][0], header["states"][0], frozenset(transitions),
                         header["initial"][0], frozenset(header["final"][0]), direction)
    except ValueError as exc:
        raise FormatError(f"invalid automaton: {exc}") from None


def parse_sequence_line(line: str, lineno: int | None = None) -> tuple:
    tokens = line.split("#", 1)[0].split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        return tuple(int(ch) for ch in tokens[0])
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise FormatError(f"expected integers, got {line.strip()!r}", lineno) from None


def parse_words(text: str) -> list[tuple]:
    return [parse_sequence_line(line, n) for n, line in enumerate(text.splitlines(), 1)
            if not line.lstrip().startswith("#")]


def parse_permutations(text: str) -> list[tuple]:
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        if line.lstrip().startswith("#"):
            continue
        p = parse_sequence_line(line, n)
        if not is_permutation(p):
            raise FormatError(f"not a permutation: {line.strip()!r}", n)
        out.append(p)
    return out


def format_sequence(seq: Sequence[int]) -> str:
    return " ".join(map(str, seq))


def format_lines(items: Iterable[Sequence[int]]) -> str:
    return "".join(format_sequence(s) + "\n" for s in items)
