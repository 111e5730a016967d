import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sethopf.compositions import (
    Composition,
    EMPTY_COMPOSITION,
    canonical_set,
    coarsens,
    comp,
    compositions_of,
    concat,
    deshuffle,
    fubini,
    labelset,
    opposite,
    quotient_stats,
    refinements,
    restrict,
    set_partitions,
    two_lump_coarsenings,
    zie_dimension,
)
from sethopf.errors import DomainError, OrderError, SizeLimitError


def brute_force_count(n):
    """Independent oracle: Fubini recurrence a(n) = sum C(n,k) a(n-k)."""
    from math import comb

    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


class TestEnumeration:
    def test_empty_set(self):
        assert list(compositions_of(())) == [EMPTY_COMPOSITION]

    def test_two_elements(self):
        got = compositions_of((1, 2))
        assert len(got) == 3
        assert got[0] == comp((1, 2))
        assert set(got) == {comp((1, 2)), comp((1,), (2,)), comp((2,), (1,))}

    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 3), (3, 13), (4, 75), (5, 541)])
    def test_fubini_counts(self, n, count):
        assert fubini(n) == brute_force_count(n) == count
        assert len(compositions_of(canonical_set(n))) == count

    def test_no_duplicates_deterministic(self):
        got = compositions_of((1, 2, 3))
        assert len(set(got)) == 13
        assert list(got) == sorted(got, key=Composition.sort_key)

    def test_bound(self):
        with pytest.raises(SizeLimitError):
            compositions_of(tuple(range(1, 10)))

    def test_invalid_compositions(self):
        with pytest.raises(DomainError):
            Composition(((1,), ()))
        with pytest.raises(DomainError):
            Composition(((1, 2), (2,)))


class TestRestrict:
    def test_spec_examples(self):
        assert restrict(comp((1, 2), (3,)), (1, 3)) == comp((1,), (3,))
        assert restrict(comp((1,), (2,)), (2,)) == comp((2,))
        assert restrict(comp((1, 2), (3,)), ()) == EMPTY_COMPOSITION

    def test_full_ground_identity(self):
        for F in compositions_of((1, 2, 3)):
            assert restrict(F, F.ground) == F

    def test_not_subset(self):
        with pytest.raises(DomainError):
            restrict(comp((1, 2)), (3,))


class TestConcat:
    def test_spec_examples(self):
        assert concat(comp((1,)), comp((2,))) == comp((1,), (2,))
        assert concat(EMPTY_COMPOSITION, comp((1, 2))) == comp((1, 2))
        assert concat(comp((1, 3), (2,)), comp((4,))) == comp((1, 3), (2,), (4,))

    def test_associative_with_unit(self):
        a, b, c = comp((1,)), comp((2, 3)), comp((4,), (5,))
        assert concat(concat(a, b), c) == concat(a, concat(b, c))
        assert concat(a, EMPTY_COMPOSITION) == a
        assert concat(EMPTY_COMPOSITION, a) == a
        assert concat(a, b).ground == (1, 2, 3)

    def test_overlap_rejected(self):
        with pytest.raises(DomainError):
            concat(comp((1,)), comp((1, 2)))


class TestCoarsens:
    def test_spec_examples(self):
        assert coarsens(comp((1, 2, 3)), comp((1, 2), (3,)))
        assert not coarsens(comp((1, 3), (2,)), comp((1,), (2,), (3,)))
        F = comp((1,), (2, 3))
        assert coarsens(F, F)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_partial_order(self, n):
        comps = compositions_of(canonical_set(n))
        for F in comps:
            assert coarsens(F, F)
        for F, G in itertools.permutations(comps, 2):
            if coarsens(F, G) and coarsens(G, F):
                assert F == G
        for F, G, K in itertools.product(comps, repeat=3):
            if coarsens(F, G) and coarsens(G, K):
                assert coarsens(F, K)

    def test_ground_mismatch(self):
        with pytest.raises(DomainError):
            coarsens(comp((1,)), comp((2,)))


class TestQuotientStats:
    def test_spec_examples(self):
        assert quotient_stats(comp((1,), (2,), (3,)), comp((1, 2), (3,))) == (2, 2)
        F = comp((1, 2), (3,))
        assert quotient_stats(F, F) == (1, 1)
        assert quotient_stats(comp((1,), (2,), (3,)), comp((1, 2, 3))) == (3, 6)

    def test_order_error(self):
        with pytest.raises(OrderError):
            quotient_stats(comp((1, 2), (3,)), comp((1,), (2,), (3,)))


class TestOpposite:
    def test_spec_examples(self):
        assert opposite(comp((1,), (2,))) == comp((2,), (1,))
        assert opposite(comp((1, 2))) == comp((1, 2))
        assert opposite(comp((1, 3), (2,), (4,))) == comp((4,), (2,), (1, 3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_involution_and_order_compat(self, n):
        comps = compositions_of(canonical_set(n))
        for F in comps:
            assert opposite(opposite(F)) == F
        for F, G in itertools.product(comps, repeat=2):
            assert coarsens(G, F) == coarsens(opposite(G), opposite(F))


class TestDeshuffle:
    def test_spec_examples(self):
        assert deshuffle(comp((1,), (2,)), (2,)) == comp((2,))
        assert deshuffle(comp((1, 2), (3,)), (1,)) is None
        F = comp((1, 2), (3,))
        assert deshuffle(F, (1, 2, 3)) == F

    def test_noncontiguous_union(self):
        assert deshuffle(comp((1,), (2,), (3,)), (1, 3)) == comp((1,), (3,))

    def test_not_subset(self):
        with pytest.raises(DomainError):
            deshuffle(comp((1,)), (2,))


class TestRefinements:
    def test_counts(self):
        # refinements of the one-lump composition are all compositions
        assert len(list(refinements(comp((1, 2, 3))))) == 13
        assert len(list(refinements(comp((1,), (2,))))) == 1

    def test_all_refine(self):
        F = comp((1, 2), (3, 4))
        for G in refinements(F):
            assert coarsens(F, G)

    def test_two_lump_coarsenings(self):
        F = comp((1,), (2,), (3,))
        assert list(two_lump_coarsenings(F)) == [((1,), (2, 3)), ((1, 2), (3,))]


class TestPartitions:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 15)])
    def test_bell_counts(self, n, count):
        assert len(list(set_partitions(canonical_set(n)))) == count

    @pytest.mark.parametrize("n,dim", [(1, 1), (2, 2), (3, 6), (4, 26), (5, 150)])
    def test_zie_dimension_formula(self, n, dim):
        assert zie_dimension(n) == dim


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=6, unique=True))
def test_labelset_sorted(labels):
    assert labelset(labels) == tuple(sorted(labels))
