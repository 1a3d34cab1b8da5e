import pytest
from hypothesis import given, strategies as st

from twingroups import words
from twingroups.words import GroupSpec, conjugate, invert, normal_form, parse_word

from oracle_bfs import bfs_equal, closure, equivalence_classes


T3 = GroupSpec(3)
T4 = GroupSpec(4)


def word_strategy(n, max_len=12):
    return st.lists(
        st.integers(min_value=1, max_value=n - 1), max_size=max_len
    ).map(tuple)


class TestReduce:
    def test_involution_cancels(self):
        assert words.reduce((1, 1), T3) == ()

    def test_cancel_through_commuting_letter(self):
        assert words.reduce((1, 3, 1), T4) == (3,)

    def test_hexagon_word_is_geodesic(self):
        w = parse_word("(s1 s2)^3")
        assert words.reduce(w, T3) == w
        # brute force: nothing shorter in the closure of the word
        assert min(len(x) for x in closure(w, 3)) == 6

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            words.reduce((3,), T3)
        with pytest.raises(ValueError):
            words.reduce((-1,), T3)

    def test_rank_must_be_at_least_two(self):
        with pytest.raises(ValueError):
            GroupSpec(1)

    @given(st.integers(min_value=2, max_value=7).flatmap(
        lambda n: st.tuples(st.just(n), word_strategy(n))))
    def test_idempotent(self, case):
        n, w = case
        spec = GroupSpec(n)
        once = words.reduce(w, spec)
        assert words.reduce(once, spec) == once

    @given(st.integers(min_value=2, max_value=7).flatmap(
        lambda n: st.tuples(st.just(n), word_strategy(n))))
    def test_output_has_no_deletable_pair(self, case):
        n, w = case
        assert words.is_reduced(words.reduce(w, GroupSpec(n)), GroupSpec(n))


class TestNormalForm:
    def test_sorts_commuting_pair(self):
        assert normal_form((3, 1), T4) == (1, 3)

    def test_rigid_word_unchanged(self):
        assert normal_form((2, 1, 2), T3) == (2, 1, 2)

    def test_commuting_square_vanishes(self):
        assert normal_form((1, 3, 1, 3), T4) == ()
        assert bfs_equal((1, 3, 1, 3), (), 4)

    @given(st.integers(min_value=2, max_value=6).flatmap(
        lambda n: st.tuples(st.just(n), word_strategy(n, 10))))
    def test_same_element_as_input(self, case):
        n, w = case
        assert bfs_equal(normal_form(w, GroupSpec(n)), w, n, cap=len(w) + 2)


class TestEqual:
    def test_far_commutation(self):
        assert words.equal((1, 3), (3, 1), T4)

    def test_mutually_inverse_hexagons_differ(self):
        u = parse_word("(s1 s2)^3")
        v = parse_word("(s2 s1)^3")
        assert not words.equal(u, v, T3)
        assert not bfs_equal(u, v, 3)

    def test_involution(self):
        assert words.equal((), (1, 1), T3)

    @given(st.integers(min_value=2, max_value=7).flatmap(
        lambda n: st.tuples(st.just(n), word_strategy(n))))
    def test_word_times_inverse_is_trivial(self, case):
        n, w = case
        assert words.equal(w + invert(w), (), GroupSpec(n))


class TestInvertConjugate:
    def test_invert_reverses(self):
        assert invert((1, 2, 3)) == (3, 2, 1)
        assert invert(()) == ()
        assert invert((2,)) == (2,)

    def test_conjugate_layout(self):
        w = parse_word("(s1 s2)^3")
        assert conjugate(w, (3,)) == (3,) + w + (3,)

    def test_trivial_conjugator(self):
        w = (1, 2, 1)
        assert conjugate(w, ()) == w

    def test_conjugated_identity_normalizes_away(self):
        g = (2, 1, 3)
        assert normal_form(conjugate((), g), T4) == ()


class TestAgainstBruteForce:
    """Normal-form equality must induce the same partition as the
    move-closure oracle on every word pair of bounded length."""

    @pytest.mark.parametrize("n,max_len", [(4, 6), (5, 6)])
    def test_partitions_agree(self, n, max_len):
        spec = GroupSpec(n)
        oracle = equivalence_classes(n, max_len)
        by_root = {}
        for w, root in oracle.items():
            nf = normal_form(w, spec)
            by_root.setdefault(root, set()).add(nf)
        # oracle classes map onto single normal forms...
        assert all(len(nfs) == 1 for nfs in by_root.values())
        # ...and distinct classes onto distinct normal forms
        all_nfs = [next(iter(nfs)) for nfs in by_root.values()]
        assert len(set(all_nfs)) == len(all_nfs)


class TestGrammar:
    def test_examples(self):
        assert parse_word("(s1 s2)^3 s3") == (1, 2, 1, 2, 1, 2, 3)
        assert parse_word("(s1 s2 s1)^-1") == (1, 2, 1)
        assert parse_word("r1 s2 r3") == (-1, 2, -3)
        assert parse_word("") == ()
        assert parse_word("((s1 s2)^2 s3)^2") == (1, 2, 1, 2, 3, 1, 2, 1, 2, 3)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            parse_word("(s1")
        with pytest.raises(ValueError):
            parse_word("s1)")
        with pytest.raises(ValueError):
            parse_word("x1")
        with pytest.raises(ValueError):
            parse_word("s0")

    @given(st.lists(st.integers(min_value=1, max_value=9), max_size=8))
    def test_roundtrip(self, letters):
        w = tuple(x if i % 2 else -x for i, x in enumerate(letters))
        assert parse_word(words.format_word(w)) == w

    def test_pow_word(self):
        assert words.pow_word((1, 2), 3) == (1, 2, 1, 2, 1, 2)
        assert words.pow_word((1, 2), -2) == (2, 1, 2, 1)
        assert words.pow_word((1, 2), 0) == ()
