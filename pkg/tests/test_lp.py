from fractions import Fraction

from hypothesis import given, settings, strategies as st

from sethopf.lp import partition_infeasible, simplex_max, strict_positive_witness


class TestSimplex:
    def test_small_lp(self):
        # max x + y  s.t. x <= 2, y <= 3, x + y <= 4
        value, x = simplex_max(
            [Fraction(1), Fraction(1)],
            [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)], [Fraction(1), Fraction(1)]],
            [Fraction(2), Fraction(3), Fraction(4)],
        )
        assert value == 4

    def test_degenerate_origin(self):
        # optimum at the origin
        value, x = simplex_max(
            [Fraction(-1)], [[Fraction(1)]], [Fraction(5)]
        )
        assert value == 0 and x == [Fraction(0)]


class TestStrictWitness:
    def test_cell_family(self):
        w = strict_positive_witness((1, 2, 3), [(1,), (2,), (1, 2)])
        assert w is not None
        assert sum(w.values()) == 0
        for S in [(1,), (2,), (1, 2)]:
            assert sum(w[x] for x in S) > 0

    def test_balanced_family_infeasible(self):
        assert strict_positive_witness((1, 2, 3), [(1,), (2,), (3,)]) is None

    def test_two_point(self):
        w = strict_positive_witness((1, 2), [(1,)])
        assert w is not None and w[1] > 0 and w[1] + w[2] == 0

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.sets(st.integers(1, 4), min_size=1, max_size=3), min_size=1, max_size=6))
    def test_witness_always_satisfies(self, families):
        ground = (1, 2, 3, 4)
        sides = [tuple(sorted(s)) for s in families]
        w = strict_positive_witness(ground, sides)
        if w is not None:
            assert sum(w.values()) == 0
            for S in sides:
                assert sum(w[x] for x in S) > 0


class TestPartitionPrefilter:
    def test_two_part(self):
        assert partition_infeasible(3, [frozenset({1, 2})], frozenset({3}))

    def test_three_part(self):
        assert partition_infeasible(4, [frozenset({1}), frozenset({2, 3})], frozenset({4}))

    def test_no_partition(self):
        assert not partition_infeasible(3, [frozenset({1, 2})], frozenset({2, 3}))

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.sets(st.integers(1, 4), min_size=1, max_size=3), min_size=1, max_size=5),
           st.sets(st.integers(1, 4), min_size=1, max_size=3))
    def test_sound_versus_lp(self, families, new):
        # whenever the prefilter fires, the exact LP must agree it is infeasible
        ground = (1, 2, 3, 4)
        sides = [frozenset(s) for s in families]
        if partition_infeasible(4, sides, frozenset(new)):
            all_sides = [tuple(sorted(s)) for s in families] + [tuple(sorted(new))]
            assert strict_positive_witness(ground, all_sides) is None
