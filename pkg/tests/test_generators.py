from itertools import chain

import pytest

from hyperrep.core import (
    degree_profile,
    gen_random_linear,
    gen_union_of_matchings,
    is_linear,
    random_matching,
    union_of_matchings_labelled
)
from hyperrep.stream import CounterStream


class TestRandomMatching:

    @pytest.mark.parametrize('n', [9, 10, 11])
    def test_almost_perfect(self, n):
        matching = random_matching(CounterStream(1), n, 3)
        assert len(matching) == n // 3
        covered = list(chain.from_iterable(matching))
        assert len(covered) == len(set(covered)) == 3 * (n // 3)
        assert all(list(e) == sorted(e) for e in matching)


class TestUnionOfMatchings:

    def test_deterministic(self):
        assert gen_union_of_matchings(30, 3, 4, 11) == gen_union_of_matchings(30, 3, 4, 11)
        assert gen_union_of_matchings(30, 3, 4, 11) != gen_union_of_matchings(30, 3, 4, 12)

    def test_degree_bound(self):
        graph = gen_union_of_matchings(40, 3, 5, 2)
        assert graph.max_degree <= 5
        assert len(graph) <= 5 * (40 // 3)

    def test_labelled(self):
        graph, matchings = union_of_matchings_labelled(20, 4, 3, 5)
        assert len(matchings) == 3
        assert all(len(m) == 5 for m in matchings)
        assert set(graph.edges) == set(chain.from_iterable(matchings))

    @pytest.mark.parametrize('seed', range(10))
    def test_labelled_matchings_disjoint(self, seed):
        graph, matchings = union_of_matchings_labelled(22, 3, 4, seed)
        for matching in matchings:
            covered = list(chain.from_iterable(matching))
            assert len(covered) == len(set(covered))
        assert graph.max_degree <= 4

    @pytest.mark.parametrize('n, r, delta', [(2, 3, 1), (10, 1, 1), (10, 3, 0)])
    def test_invalid(self, n, r, delta):
        with pytest.raises(ValueError):
            gen_union_of_matchings(n, r, delta, 0)


class TestRandomLinear:

    def test_linear_and_bounded(self):
        graph = gen_random_linear(30, 3, 3, 4)
        assert is_linear(graph)
        assert degree_profile(graph).max_degree <= 3
        assert len(graph) > 0

    def test_linear_and_bounded_many_seeds(self):
        for seed in range(100):
            graph = gen_random_linear(30, 3, 4, seed)
            assert is_linear(graph), seed
            assert degree_profile(graph).max_degree <= 4, seed

    def test_deterministic(self):
        assert gen_random_linear(25, 3, 2, 9) == gen_random_linear(25, 3, 2, 9)

    def test_rejection_cap(self):
        assert len(gen_random_linear(12, 3, 2, 1, max_rejections=0)) == 0

    def test_invalid(self):
        with pytest.raises(ValueError):
            gen_random_linear(2, 3, 1, 0)
