import itertools

import pytest
from hypothesis import given, strategies as st

from permreg.perms import (EncodingError, avoidance_class, brute_basis, delete_at,
                           first_violation, involves, inverse, is_antichain,
                           max_rank, permutations_of, rank_decode, rank_encode,
                           rank_encode_bounded, standardize)

perm_st = st.integers(0, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def involves_naive(pattern, host):
    m = len(pattern)
    return any(standardize([host[i] for i in idx]) == tuple(pattern)
               for idx in itertools.combinations(range(len(host)), m))


def encode_naive(p):
    return tuple(sum(1 for j in range(i, len(p)) if p[j] <= p[i]) for i in range(len(p)))


class TestInvolvement:
    def test_worked_example(self):
        assert involves((2, 3, 1), (3, 1, 5, 4, 2))

    def test_empty_pattern(self):
        assert involves((), ())
        assert involves((), (2, 1, 3))

    def test_increasing_host(self):
        assert not involves((3, 2, 1), (1, 2, 3, 4))

    @pytest.mark.parametrize("m,n", [(2, 4), (3, 5), (4, 6)])
    def test_matches_naive(self, m, n):
        for pattern in permutations_of(m):
            for host in permutations_of(n):
                assert involves(pattern, host) == involves_naive(pattern, host)

    @given(perm_st)
    def test_reflexive(self, p):
        assert involves(p, p)

    def test_transitive(self):
        perms = [p for n in range(5) for p in permutations_of(n)]
        for a in perms[:10]:
            for b in perms:
                if involves(a, b):
                    for c in permutations_of(5):
                        if involves(b, c):
                            assert involves(a, c)


class TestInverse:
    def test_small(self):
        assert inverse((2, 3, 1)) == (3, 1, 2)
        assert inverse((1, 2, 3, 4)) == (1, 2, 3, 4)

    def test_composition_is_identity(self):
        p = (2, 4, 5, 1, 6, 3, 7)
        q = inverse(p)
        assert q == (4, 1, 6, 2, 3, 5, 7)
        assert tuple(p[q[i] - 1] for i in range(7)) == tuple(range(1, 8))
        assert tuple(q[p[i] - 1] for i in range(7)) == tuple(range(1, 8))


class TestRankEncoding:
    def test_worked_example(self):
        assert rank_encode((2, 4, 5, 1, 6, 3, 7)) == (2, 3, 3, 1, 2, 1, 1)
        assert rank_decode((2, 3, 3, 1, 2, 1, 1)) == (2, 4, 5, 1, 6, 3, 7)

    def test_identity_and_reversal(self):
        assert rank_encode((1, 2, 3, 4, 5)) == (1,) * 5
        assert rank_encode((5, 4, 3, 2, 1)) == (5, 4, 3, 2, 1)
        assert rank_decode((1, 1, 1)) == (1, 2, 3)

    def test_rejects_undecodable(self):
        with pytest.raises(EncodingError) as info:
            rank_decode((2,))
        assert info.value.position == 1
        with pytest.raises(EncodingError) as info:
            rank_decode((1, 1, 3, 1))
        assert info.value.position == 3

    def test_matches_definition(self):
        for n in range(7):
            for p in permutations_of(n):
                assert rank_encode(p) == encode_naive(p)

    @pytest.mark.parametrize("n", range(9))
    def test_round_trip_and_injective(self, n):
        seen = set()
        for p in permutations_of(n):
            w = rank_encode(p)
            assert len(w) == n
            assert rank_decode(w) == p
            seen.add(w)
        assert len(seen) == len(list(permutations_of(n)))

    def test_decodable_words_are_exactly_encodings(self):
        for n in range(6):
            codes = {rank_encode(p) for p in permutations_of(n)}
            for w in itertools.product(range(1, n + 2), repeat=n):
                assert (first_violation(w) is None) == (w in codes)

    @given(perm_st, st.integers(1, 5))
    def test_bounded_encoding(self, p, k):
        w = rank_encode(p)
        bounded = rank_encode_bounded(p, k)
        if max(w, default=0) <= k:
            assert bounded == w
        else:
            assert bounded is None

    def test_max_rank(self):
        assert max_rank((2, 4, 5, 1, 6, 3, 7)) == 3
        assert max_rank((1, 2, 3, 4, 5, 6)) == 1
        assert max_rank((3, 2, 1)) == 3
        assert max_rank(()) == 0


class TestDeletion:
    def test_worked_example(self):
        assert delete_at((2, 4, 5, 1, 6, 3, 7), 6) == (2, 3, 4, 1, 5, 6)

    def test_singleton(self):
        assert delete_at((1,), 1) == ()

    def test_middle(self):
        # remove the 5 from 31542, leaving 3 1 4 2
        assert delete_at((3, 1, 5, 4, 2), 3) == standardize((3, 1, 4, 2)) == (3, 1, 4, 2)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            delete_at((1, 2), 3)
        with pytest.raises(IndexError):
            delete_at((1, 2), 0)

    @given(perm_st.filter(bool), st.data())
    def test_deletion_is_involved(self, p, data):
        i = data.draw(st.integers(1, len(p)))
        assert involves(delete_at(p, i), p)


class TestClasses:
    def test_fibonacci_counts(self):
        cls = avoidance_class([(3, 1, 2), (3, 2, 1), (2, 3, 1)], 5)
        assert [len(c) for c in cls] == [1, 1, 2, 3, 5, 8]

    def test_everything_avoids_nothing(self):
        assert [len(c) for c in avoidance_class([], 4)] == [1, 1, 2, 6, 24]

    def test_avoiding_one(self):
        assert avoidance_class([(1,)], 4) == [[()], [], [], [], []]

    def test_basis_of_avoiding_12(self):
        b = brute_basis(lambda p: not involves((1, 2), p), 3)
        assert set(b) == {(1, 2)}
        assert b.antichain
        assert b.maxlen == 3

    def test_basis_of_two_increasing(self):
        def two_increasing(p):
            # longest decreasing subsequence at most 2
            return not involves((3, 2, 1), p)

        assert set(brute_basis(two_increasing, 5)) == {(3, 2, 1)}

    def test_non_closed_predicate_reported(self, caplog):
        b = brute_basis(lambda p: len(p) != 2, 3)
        # 12 and 21 are minimal non-members; 123 is a member, nothing else found
        assert set(b) == {(1, 2), (2, 1)}
        b = brute_basis(lambda p: p != (1, 2) and len(p) < 4 or p == (1, 2, 3, 4), 4)
        assert not b.antichain
        assert "not closed" in caplog.text

    def test_is_antichain(self):
        assert is_antichain([(3, 2, 1), (2, 4, 1, 3), (2, 1, 4, 3)])
        assert not is_antichain([(2, 1), (3, 2, 1)])
