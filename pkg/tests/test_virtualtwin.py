import random

import pytest

from twingroups import twin, words
from twingroups.virtualtwin import (
    bounded_equal,
    is_pure_virtual,
    replay,
    retraction,
    retraction_compatible,
    vt_perm_image,
    vt_presentation,
    wt_presentation,
)
from twingroups.words import parse_word


def tags(pres):
    out = {}
    for tag, _, _ in pres.relations:
        out[tag] = out.get(tag, 0) + 1
    return out


class TestPresentations:
    def test_rank3_virtual(self):
        pres = vt_presentation(3)
        assert len(pres.relations) == 6
        assert tags(pres) == {
            "s-involution": 2,
            "r-involution": 2,
            "r-braid": 1,
            "mixed-shift": 1,
        }

    def test_rank4_gains_far_commutations(self):
        counts = tags(vt_presentation(4))
        assert counts["s-commutation"] == 1
        assert counts["r-commutation"] == 1
        assert counts["mixed-commutation"] == 2  # s1 r3 and s3 r1

    def test_welded_adds_shift_family(self):
        vt, wt = tags(vt_presentation(3)), tags(wt_presentation(3))
        assert wt.pop("welded-shift") == 1
        assert wt == vt
        assert ("welded-shift", (-1, 2, 1), (2, 1, -2)) in wt_presentation(
            3
        ).relations

    def test_relator_shape(self):
        relators = vt_presentation(3).relators()
        assert (-1, -2, -1, -2, -1, -2) in relators


class TestPermImage:
    def test_crossing_letter(self):
        assert vt_perm_image((-1,), 3) == (2, 1, 3)

    def test_mixed_pair_is_pure(self):
        assert is_pure_virtual((1, -1), 3)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    @pytest.mark.parametrize("welded", [False, True])
    def test_all_relators_map_to_identity(self, n, welded):
        pres = wt_presentation(n) if welded else vt_presentation(n)
        for relator in pres.relators():
            assert vt_perm_image(relator, n) == twin.identity_perm(n)


class TestRetraction:
    def test_deletes_crossings(self):
        assert retraction(parse_word("r1 s2 r3")) == (2,)

    def test_fixes_planar_words(self):
        rng = random.Random(7)
        for _ in range(200):
            w = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 12)))
            assert retraction(w) == w

    def test_crossings_vanish(self):
        assert retraction((-1, -2)) == ()

    def test_multiplicative_on_concatenation(self):
        rng = random.Random(8)
        for _ in range(100):
            u = tuple(rng.choice([1, 2, -1, -2]) for _ in range(6))
            v = tuple(rng.choice([1, 2, -1, -2]) for _ in range(6))
            assert retraction(u + v) == retraction(u) + retraction(v)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_compatibility_fails_exactly_for_mixed_shift(self, n):
        for rel in wt_presentation(n).relations:
            if rel[0] == "mixed-shift":
                assert not retraction_compatible(rel, n)
                # the two sides retract to the neighbouring generators
                tag, lhs, rhs = rel
                assert retraction(lhs) != retraction(rhs)
            else:
                assert retraction_compatible(rel, n)


class TestBoundedEqual:
    def test_braid_relation_depth_one(self):
        path = bounded_equal(parse_word("r1 r2 r1"), parse_word("r2 r1 r2"), 3, 1)
        assert path is not None and len(path) == 2
        assert replay(path, 3)

    def test_no_planar_braid_relation(self):
        u, v = parse_word("s1 s2 s1"), parse_word("s2 s1 s2")
        assert bounded_equal(u, v, 3, 4) is None

    def test_welded_forbidden_consequence(self):
        # s1 s2 r1 = r2 s1 s2 follows from the welded shift by inversion
        u, v = parse_word("s1 s2 r1"), parse_word("r2 s1 s2")
        path = bounded_equal(u, v, 3, 2, welded=True)
        assert path is not None
        assert replay(path, 3, welded=True)
        # and stays out of reach in the non-welded group at that depth
        assert bounded_equal(u, v, 3, 2) is None

    def test_crossing_block_is_symmetric_group(self):
        # (r1 r2)^3 = 1 needs a short chain of braid and involution moves
        path = bounded_equal(words.pow_word((-1, -2), 3), (), 3, 4)
        assert path is not None
        assert replay(path, 3)

    def test_identical_words(self):
        assert bounded_equal((1, -2), (1, -2), 3, 0) == [(1, -2)]

    def test_soundness_on_distinct_strand_maps(self):
        rng = random.Random(9)
        alphabet = [1, 2, 3, -1, -2, -3]
        for _ in range(40):
            u = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 6)))
            v = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 6)))
            if vt_perm_image(u, 4) != vt_perm_image(v, 4):
                assert bounded_equal(u, v, 4, 2) is None

    def test_certificates_always_replay(self):
        rng = random.Random(10)
        alphabet = [1, 2, -1, -2]
        found = 0
        for _ in range(60):
            u = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 5)))
            v = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 5)))
            path = bounded_equal(u, v, 3, 3)
            if path is not None:
                found += 1
                assert path[0] == u and path[-1] == v
                assert replay(path, 3)
        assert found > 0
