"""Command-line interface.

Exit status: 0 for success or a "true"/"yes" answer, 1 for a "false"
answer, 2 for any error (with a one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import itertools
import sys

from . import automata, bounded, enumeration, machines, monotone, perms
from .formats import (FormatError, format_lines, format_sequence, parse_automaton,
                      parse_permutations, parse_words, serialize_automaton)


class CommandError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(f"{path}: {exc.strerror}") from None


def _automaton(path: str):
    try:
        return parse_automaton(_read(path))
    except FormatError as exc:
        raise CommandError(f"{path}: {exc}") from None


def _class(path: str, k: int | None):
    lang = _automaton(path)
    try:
        return bounded.BoundedClass.from_language(lang, k)
    except bounded.NotClosedError as exc:
        raise CommandError(f"{path}: {exc}") from None


def _answer(value: bool) -> int:
    print("true" if value else "false")
    return 0 if value else 1


# -- subcommands -------------------------------------------------------------

def cmd_encode(args):
    out = []
    for p in parse_permutations(sys.stdin.read()):
        out.append(perms.rank_encode(p))
    sys.stdout.write(format_lines(out))


def cmd_decode(args):
    out = []
    for n, w in enumerate(parse_words(sys.stdin.read()), 1):
        try:
            out.append(perms.rank_decode(w))
        except perms.EncodingError as exc:
            raise CommandError(f"line {n}: {exc}") from None
    sys.stdout.write(format_lines(out))


def cmd_omega(args):
    sys.stdout.write(serialize_automaton(bounded.omega_acceptor(args.k)))


def cmd_closure(args):
    basis = parse_permutations(_read(args.basis))
    acceptor, dropped = bounded.encode_basis(basis, args.k)
    for p in dropped:
        print(f"note: {format_sequence(p)} lies outside Omega_{args.k} and imposes "
              f"no restriction", file=sys.stderr)
    x = bounded.closed_from_basis(acceptor, args.k)
    sys.stdout.write(serialize_automaton(x.forward))


def cmd_basis(args):
    x = _class(args.cls, args.k)
    b = bounded.basis_from_closed(x, within_omega=args.within_omega)
    sys.stdout.write(serialize_automaton(b))
    if args.within_omega and bounded.is_omega_restriction(x):
        print(f"# the class is all of Omega_{x.k}; its full basis is the {x.k}! "
              f"permutations starting with {x.k + 1}")
    if args.list:
        for w in automata.enumerate_words(b, args.maxlen):
            print("# basis " + format_sequence(perms.rank_decode(w)))


def cmd_is_closed(args):
    return _answer(bounded.is_closed_language(_automaton(args.lang), args.k))


def cmd_is_finitely_based(args):
    return _answer(bounded.is_finitely_based(_class(args.cls, args.k)))


def cmd_member(args):
    x = _class(args.cls, args.k)
    for p in parse_permutations(sys.stdin.read()):
        print("in" if bounded.member(x, p) else "out")


def cmd_count(args):
    print(format_sequence(enumeration.count_words(_automaton(args.lang), args.upto)))


def _print_gf(gf):
    print(format_sequence(gf.numerator) if gf.numerator else "0")
    print(format_sequence(gf.denominator))


def cmd_gf(args):
    _print_gf(enumeration.generating_function(_automaton(args.lang)))


def cmd_recurrence(args):
    rec = enumeration.linear_recurrence(
        enumeration.generating_function(_automaton(args.lang)))
    print(f"order {rec.order}")
    print(" ".join(["coefficients"] + [str(c) for c in rec.coefficients]))
    print(" ".join(["initial"] + [str(a) for a in rec.initial]))


def _monotone_basis(args):
    return parse_permutations(_read(args.basis)) if args.basis else []


def cmd_monotone(args):
    phi = monotone.parse_signs(args.phi)
    action = args.action
    if action == "gf":
        _print_gf(monotone.gf_monotone(phi, _monotone_basis(args)))
        return 0
    if action == "decode":
        for n, w in enumerate(parse_words(sys.stdin.read()), 1):
            try:
                print(format_sequence(monotone.decode_word(phi, w)))
            except ValueError as exc:
                raise CommandError(f"line {n}: {exc}") from None
        return 0
    items = parse_permutations(sys.stdin.read())
    if action == "greedy":
        for n, p in enumerate(items, 1):
            try:
                print(format_sequence(monotone.greedy_encoding(phi, p)))
            except monotone.NotInClassError as exc:
                raise CommandError(f"line {n}: {exc}") from None
    elif action == "encodings":
        for p in items:
            found = sorted(monotone.encodings(phi, p))
            print(" | ".join(format_sequence(c) for c in found) if found else "none")
    elif action == "member":
        cls = monotone.MonotoneClass(phi, _monotone_basis(args))
        for p in items:
            print("in" if cls.contains(p) else "out")
    return 0


def cmd_simulate(args):
    if args.machine == "stack":
        outs = machines.stack_outputs(args.capacity, args.n)
    else:
        outs = machines.riffle_outputs(args.n)
    sys.stdout.write(format_lines(sorted(outs)))


def _oracle(name: str):
    if name == "riffle":
        return machines.riffle_member
    if name == "stack":
        return machines.Stack().generates
    if name == "stack2":
        return machines.Stack(2).generates
    if name.startswith("avoid:"):
        basis = parse_permutations(_read(name[len("avoid:"):]))
        return lambda p: perms.avoids(p, basis)
    raise CommandError(f"unknown oracle {name!r}")


def cmd_brute_basis(args):
    basis = perms.brute_basis(_oracle(args.oracle), args.maxlen)
    print(f"# basis restricted to length <= {args.maxlen}")
    sys.stdout.write(format_lines(basis))
    if not basis.antichain:
        print("warning: result is not an antichain; the oracle is not closed",
              file=sys.stderr)


# -- argument parsing --------------------------------------------------------

def _capacity(text: str):
    if text in ("inf", "unbounded"):
        return None
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("capacity must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permreg",
        description="Regular languages of encoded permutation classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("encode", help="rank-encode permutations from stdin").set_defaults(
        func=cmd_encode)
    sub.add_parser("decode", help="decode rank words from stdin").set_defaults(
        func=cmd_decode)

    p = sub.add_parser("omega", help="acceptor for the encodings of Omega_k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("closure", help="class acceptor from a basis file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--basis", required=True, help="permutation file ('-' for stdin)")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("basis", help="basis acceptor of a class")
    p.add_argument("--class", dest="cls", default="-")
    p.add_argument("--k", type=int)
    p.add_argument("--within-omega", action="store_true",
                   help="keep only basis elements inside Omega_k")
    p.add_argument("--list", action="store_true", help="also list basis permutations")
    p.add_argument("--maxlen", type=int, default=None)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("is-closed", help="is the language E(X) for a closed X?")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lang", default="-")
    p.set_defaults(func=cmd_is_closed)

    p = sub.add_parser("is-finitely-based")
    p.add_argument("--class", dest="cls", default="-")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_is_finitely_based)

    p = sub.add_parser("member", help="membership for permutations on stdin")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("count", help="number of accepted words of each length")
    p.add_argument("--lang", default="-")
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gf", help="rational generating function")
    p.add_argument("--lang", default="-")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("recurrence", help="linear recurrence of the counts")
    p.add_argument("--lang", default="-")
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("monotone", help="monotone segment classes W_phi")
    p.add_argument("action", choices=["decode", "greedy", "encodings", "gf", "member"])
    p.add_argument("--phi", required=True, help="sign string such as +-- (use --phi=-+ "
                   "when it starts with '-')")
    p.add_argument("--basis", help="permutation file for gf/member")
    p.set_defaults(func=cmd_monotone)

    p = sub.add_parser("simulate", help="enumerate machine outputs")
    p.add_argument("machine", choices=["stack", "riffle"])
    p.add_argument("--capacity", type=_capacity, default=None)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("brute-basis", help="basis by exhaustive search")
    p.add_argument("--oracle", required=True,
                   help="riffle | stack | stack2 | avoid:FILE")
    p.add_argument("--maxlen", type=int, required=True)
    p.set_defaults(func=cmd_brute_basis)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (CommandError, FormatError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
