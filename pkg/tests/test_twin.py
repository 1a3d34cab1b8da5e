import pytest
from hypothesis import given, strategies as st

from twingroups import twin, words
from twingroups.words import conjugate, invert, parse_word, pow_word


def word_strategy(n, max_len=10):
    return st.lists(
        st.integers(min_value=1, max_value=n - 1), max_size=max_len
    ).map(tuple)


class TestPermImage:
    def test_generator_is_adjacent_transposition(self):
        assert twin.perm_image((1,), 3) == (2, 1, 3)

    def test_hexagon_is_pure(self):
        assert twin.perm_image(parse_word("(s1 s2)^3"), 3) == (1, 2, 3)

    def test_conjugated_transposition(self):
        # (23)(12)(23) = (13)
        assert twin.perm_image((2, 1, 2), 3) == (3, 2, 1)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            twin.perm_image((3,), 3)

    @given(st.integers(min_value=3, max_value=7).flatmap(
        lambda n: st.tuples(st.just(n), word_strategy(n), word_strategy(n))))
    def test_homomorphism(self, case):
        n, u, v = case
        assert twin.perm_image(u + v, n) == twin.compose(
            twin.perm_image(u, n), twin.perm_image(v, n)
        )


class TestIsPure:
    def test_hexagon(self):
        assert twin.is_pure(parse_word("(s1 s2)^3"), 3)

    def test_single_generator_not_pure(self):
        assert not twin.is_pure((1,), 3)

    def test_kernel_is_normal(self):
        w = conjugate(parse_word("(s2 s3)^3"), (1,))
        assert twin.is_pure(w, 4)

    @given(st.tuples(word_strategy(5, 8), word_strategy(5, 6)))
    def test_conjugation_invariance(self, case):
        w, g = case
        if twin.is_pure(w, 5):
            assert twin.is_pure(conjugate(w, g), 5)

    @given(word_strategy(6, 10))
    def test_normal_form_preserves_strand_map(self, w):
        # equal normal forms force equal permutation images
        nf = words.normal_form(w, words.GroupSpec(6))
        assert twin.perm_image(nf, 6) == twin.perm_image(w, 6)


class TestVerifyIdentity:
    def test_seven_generator_relation(self):
        # (s2 s1)^3 ((s2 s3)^3)^(s1 s2 s1) (s1 s2)^3 = ((s3 s2)^3)^(s1 s2)
        lhs = (
            pow_word((2, 1), 3)
            + conjugate(pow_word((2, 3), 3), (1, 2, 1))
            + pow_word((1, 2), 3)
        )
        rhs = conjugate(pow_word((3, 2), 3), (1, 2))
        assert twin.verify_identity(lhs, rhs, 4)

    def test_descending_coset_identity(self):
        # s2 s1 . s2 . (s2 s1)^-1 . s1 = (s2 s1)^3 in T_3
        m = (2, 1)
        lhs = m + (2,) + invert(m) + (1,)
        assert twin.verify_identity(lhs, pow_word((2, 1), 3), 3)

    def test_strand_doubling_relation(self):
        # a(0,-2) a(1,2) = 1 for a(eps,k) = s1^eps (s1 s2)^k s3 (s1 s2)^-k s1^eps
        def a(eps, k):
            wrap = (1,) * eps
            return wrap + pow_word((1, 2), k) + (3,) + pow_word((1, 2), -k) + wrap

        assert twin.verify_identity(a(0, -2) + a(1, 2), (), 4)


class TestAbelianImage:
    def test_hexagon_has_odd_parities(self):
        assert twin.abelian_image(parse_word("(s1 s2)^3"), 3) == (1, 1)

    def test_square_in_commutator_subgroup(self):
        assert twin.abelian_image(parse_word("(s1 s2)^2"), 3) == (0, 0)

    def test_identity(self):
        assert twin.abelian_image((), 3) == (0, 0)

    @given(st.tuples(word_strategy(6), word_strategy(6)))
    def test_additive(self, case):
        u, v = case
        total = twin.abelian_image(u + v, 6)
        parts = tuple(
            (a + b) % 2
            for a, b in zip(twin.abelian_image(u, 6), twin.abelian_image(v, 6))
        )
        assert total == parts


class TestNormalFormEnumeration:
    @pytest.mark.parametrize("n,max_len", [(3, 6), (4, 5)])
    def test_matches_brute_force_class_count(self, n, max_len):
        from oracle_bfs import equivalence_classes

        forms = list(twin.normal_forms(n, max_len))
        assert len(set(forms)) == len(forms)
        classes = set(equivalence_classes(n, max_len).values())
        assert len(forms) == len(classes)


class TestCenterSearch:
    def test_rank3(self):
        assert twin.center_search(3, 6) == []

    def test_rank5(self):
        assert twin.center_search(5, 5) == []

    def test_zero_length(self):
        assert twin.center_search(4, 0) == []

    def test_rank2_rejected(self):
        with pytest.raises(ValueError):
            twin.center_search(2, 4)


class TestLowerCentralIdentity:
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_holds(self, i):
        assert twin.lcs_identity_t3(i)
