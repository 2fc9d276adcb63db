import pytest
from hypothesis import given, strategies as st

from toriglue.binomials import format_binomial, minimal_generators, toric_ideal
from toriglue.linalg import IntMatrix
from toriglue.numerical import (
    MembershipError, glue_numerical, in_semigroup, iterate_glue, self_glue_numerical,
    semigroup_representation, verify_numerical,
)

from reference import ITERATED_D, ITERATED_E, SELF_GLUE_17_18, SELF_GLUE_5_16

A = [5, 12, 13, 16]
A1, A2, A3 = [5, 8, 11], [7, 10, 12], [6, 11, 14]


def brute_member(k, gens):
    reach = {0}
    for v in range(1, k + 1):
        if any(v - g in reach for g in gens if g <= v):
            reach.add(v)
    return k in reach


class TestMembership:
    def test_representation(self):
        assert semigroup_representation(17, A) == (1, 1, 0, 0)
        assert semigroup_representation(0, A) == (0, 0, 0, 0)
        assert semigroup_representation(7, A) is None
        assert semigroup_representation(-1, A) is None

    def test_fewest_parts_first(self):
        assert semigroup_representation(16, A) == (0, 0, 0, 1)
        assert semigroup_representation(10, [5, 2]) == (2, 0)

    @given(st.integers(0, 120), st.lists(st.integers(2, 20), min_size=1, max_size=4))
    def test_matches_brute_force(self, k, gens):
        rep = semigroup_representation(k, gens)
        assert (rep is not None) == brute_member(k, gens) == in_semigroup(k, gens)
        if rep is not None:
            assert sum(c * g for c, g in zip(rep, gens)) == k


class TestGeneratorCounts:
    @pytest.mark.parametrize("gens,count", [(A, 6), (A1, 3), (A2, 3), (A3, 3)])
    def test_minimal_generators(self, gens, count):
        m = IntMatrix.from_rows([gens])
        assert len(minimal_generators(toric_ideal(m), m)) == count


class TestSelfGlue:
    def test_proper_gluing(self):
        res = self_glue_numerical(A, 17, 18)
        assert list(res.matrix.row(0)) == SELF_GLUE_17_18
        assert res.merged == (False,)
        assert [format_binomial(res.ring, b) for b in res.glue_binomials] == ["x1*x3 - y1*y2"]
        assert verify_numerical(res).ok

    def test_splitting(self):
        res = self_glue_numerical(A, 5, 16)
        assert list(res.matrix.row(0)) == SELF_GLUE_5_16
        assert res.splits and res.glue_binomials == ()
        assert res.ring.names == ("x1", "x2", "x3", "z", "y2", "y3", "y4")
        assert verify_numerical(res).ok

    def test_membership_errors(self):
        with pytest.raises(MembershipError):
            self_glue_numerical(A, 7, 18)
        with pytest.raises(MembershipError):
            self_glue_numerical(A, 17, 7)
        with pytest.raises(MembershipError):
            self_glue_numerical(A, 24, 18)

    def test_bad_parts(self):
        with pytest.raises(ValueError):
            glue_numerical([4, 6], A, 17, 12)
        with pytest.raises(ValueError):
            glue_numerical([0, 3], A, 17, 3)


class TestIterated:
    def test_three_parts(self):
        res = iterate_glue([A1, A2, A3], [(17, 13), (17, 176)])
        assert list(res.matrix.row(0)) == ITERATED_D
        assert [format_binomial(res.ring, b) for b in res.glue_binomials] == [
            "x1*x2 - y1*y2", "x1*y1 - z1*z2"]
        assert verify_numerical(res).ok

    def test_three_part_splitting(self):
        res = iterate_glue([A1, A2, A3], [(7, 11), (6, 77)])
        assert list(res.matrix.row(0)) == ITERATED_E
        assert res.splits
        assert verify_numerical(res).ok

    def test_single_part(self):
        res = iterate_glue([A1], [])
        assert list(res.matrix.row(0)) == A1

    def test_step_count(self):
        with pytest.raises(ValueError):
            iterate_glue([A1, A2], [])
