import itertools

import pytest

from permreg.automata import (FORWARD, REVERSED, AlphabetError, DirectionError,
                              accepts, empty_language, enumerate_words, finite_acceptor,
                              is_empty, is_subset, language_equal, reverse)
from permreg.bounded import omega_acceptor
from permreg.perms import delete_at, involves, rank_decode, rank_encode
from permreg.transducers import (Transducer, delete_letter, deletion_transducer,
                                 derivative_languages, identity_transducer, image,
                                 involvement_transducer, relates, transpose, vector_step)

from conftest import no_consecutive_twos, words_upto


def encodings_upto(k, n):
    return [w for w in words_upto(k, n) if rank_decode_ok(w)]


def rank_decode_ok(w):
    try:
        rank_decode(w)
    except ValueError:
        return False
    return True


def derivatives(w):
    """Brute force: encode every single-entry deletion of the decoded permutation."""
    p = rank_decode(w)
    return {rank_encode(delete_at(p, i)) for i in range(1, len(p) + 1)}


def patterns(w):
    """Encodings of every pattern of the decoded permutation (including itself)."""
    p = rank_decode(w)
    n = len(p)
    out = set()
    for m in range(n + 1):
        for idx in itertools.combinations(range(n), m):
            sub = [p[i] for i in idx]
            out.add(rank_encode(tuple(sorted(sub).index(v) + 1 for v in sub)))
    return out


def rev(words, k):
    return finite_acceptor(words, k, REVERSED)


class TestTranspose:
    def test_involution(self):
        d = deletion_transducer(3)
        assert transpose(transpose(d)) == d

    def test_worked_pair(self):
        d = deletion_transducer(3)
        assert relates(d, (2, 3, 3, 1, 2, 1, 1), (2, 2, 2, 1, 1, 1))
        assert relates(transpose(d), (2, 2, 2, 1, 1, 1), (2, 3, 3, 1, 2, 1, 1))

    def test_transpose_inserts_one_letter(self):
        dt = transpose(deletion_transducer(2))
        for q in encodings_upto(2, 4):
            for p in encodings_upto(2, 5):
                expected = len(p) == len(q) + 1 and q in derivatives(p)
                assert relates(dt, q, p) == expected


class TestDeletion:
    def test_worked_example(self):
        d = deletion_transducer(3)
        assert relates(d, (2, 3, 3, 1, 2, 1, 1), (2, 2, 2, 1, 1, 1))
        assert delete_letter((2, 3, 3, 1, 2, 1, 1), 6) == (2, 2, 2, 1, 1, 1)
        assert delete_letter((2, 3, 3, 1, 2, 1, 1), 6, k=3) == (2, 2, 2, 1, 1, 1)

    def test_single_letter(self):
        d = deletion_transducer(1)
        assert relates(d, (1,), ())
        assert not relates(d, (), ())

    def test_shape(self):
        d = deletion_transducer(3)
        assert d.state_count == 4
        assert d.finals == frozenset({1, 2, 3})
        assert d.direction is REVERSED

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_word_algorithm_matches_permutations(self, k):
        for w in encodings_upto(k, 6):
            p = rank_decode(w)
            for i in range(1, len(w) + 1):
                expected = rank_encode(delete_at(p, i))
                assert delete_letter(w, i) == expected
                assert delete_letter(w, i, k) == expected

    @pytest.mark.parametrize("k", [1, 2])
    def test_relation_exhaustive(self, k):
        for p in encodings_upto(k, 5):
            wanted = derivatives(p)
            for q in words_upto(k, len(p)):
                assert relates(deletion_transducer(k), p, q) == (q in wanted)


class TestInvolvement:
    def test_vector_updates(self):
        s = (0, 0)
        s, out = vector_step(s, 1, False, 3)
        assert (s, out) == ((0, 0), 1)
        s, out = vector_step((0, 0), 2, True, 3)
        assert (s, out) == ((0, 1), 0)
        # a pending deletion of rank 1 lowers a kept 3 by one
        s, out = vector_step((1, 0), 3, False, 3)
        assert (s, out) == ((1, 0), 2)

    def test_reflexive(self):
        h = involvement_transducer(3)
        for p in encodings_upto(3, 5):
            assert relates(h, p, p)

    def test_worked_pair(self):
        assert relates(involvement_transducer(3), (2, 3, 3, 1, 2, 1, 1), (2, 2, 2, 1, 1, 1))

    def test_states_are_reachable_vectors(self):
        assert involvement_transducer(1).state_count == 1
        assert involvement_transducer(2).state_count == 2
        assert involvement_transducer(3).state_count == 4
        assert all(s in involvement_transducer(3).finals for s in range(4))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_relation_exhaustive(self, k):
        h = involvement_transducer(k)
        for p in encodings_upto(k, 5):
            wanted = patterns(p)
            for q in words_upto(k, len(p)):
                ok = relates(h, p, q)
                assert ok == (q in wanted)
                if len(q) == len(p):
                    assert ok == (q == p)


class TestImage:
    def test_worked_example(self):
        out = image(rev([(2, 3, 3, 1, 2, 1, 1)], 3), deletion_transducer(3))
        assert accepts(out, (2, 2, 2, 1, 1, 1))
        assert set(enumerate_words(out)) == derivatives((2, 3, 3, 1, 2, 1, 1))

    def test_empty(self):
        assert is_empty(image(empty_language(2, REVERSED), deletion_transducer(2)))

    def test_identity(self):
        lang = reverse(omega_acceptor(3))
        assert language_equal(image(lang, identity_transducer(3)), lang)

    def test_mismatch(self):
        with pytest.raises(DirectionError):
            image(omega_acceptor(2), deletion_transducer(2))
        with pytest.raises(AlphabetError):
            image(reverse(omega_acceptor(2)), deletion_transducer(3))

    @pytest.mark.parametrize("make", [deletion_transducer, involvement_transducer,
                                      lambda k: transpose(deletion_transducer(k))])
    def test_against_relation_search(self, make):
        k = 2
        t = make(k)
        words = [w for w in encodings_upto(k, 4) if no_consecutive_twos(w)]
        out = image(rev(words, k), t)
        for q in words_upto(k, 5):
            assert accepts(out, q) == any(relates(t, p, q) for p in words)

    def test_two_deletions_inside_involvement(self):
        lang = rev(encodings_upto(3, 5), 3)
        d, h = deletion_transducer(3), involvement_transducer(3)
        assert is_subset(image(image(lang, d), d), image(lang, h))


class TestDerivativeLanguages:
    def test_single_word(self):
        first, some, every = derivative_languages(finite_acceptor([(1, 1)], 1))
        assert enumerate_words(first) == [(1,)]
        assert first.direction is FORWARD
        # encodings with a deletion equal to 11: only 111
        assert enumerate_words(some) == [(1, 1, 1)]
        # all deletions in {11}: 111 and the empty word
        assert enumerate_words(every) == [(), (1, 1, 1)]

    def test_empty(self):
        first, some, every = derivative_languages(empty_language(2, REVERSED))
        assert is_empty(first) and is_empty(some)
        assert every.direction is REVERSED

    def test_against_brute_force(self):
        k = 2
        lang_words = {w for w in encodings_upto(k, 6) if no_consecutive_twos(w)}
        first, some, every = derivative_languages(finite_acceptor(lang_words, k))
        for w in encodings_upto(k, 6):
            ders = derivatives(w)
            assert accepts(some, w) == bool(ders & lang_words)
            if len(w) <= 6:
                assert accepts(first, w) == any(w in derivatives(p) for p in lang_words)

    def test_every_contains_closed_language(self, fib_class):
        every = derivative_languages(fib_class.forward)[2]
        assert is_subset(fib_class.forward, every)
        for w in encodings_upto(2, 7):
            assert accepts(every, w) == all(
                accepts(fib_class.forward, d) for d in derivatives(w))
