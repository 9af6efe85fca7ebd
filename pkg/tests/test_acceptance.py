import math

from itertools import combinations

import pytest

from hyperrep.bounds import check_size_against_bound, theorem1_bound
from hyperrep.core import Hypergraph, gen_random_linear, gen_union_of_matchings
from hyperrep.represent import (
    BuildOptions,
    Mode,
    build_representation,
    check_proposition_bounds,
    decompose,
    failure_probability_bound,
    gen_verified_family,
    sampled_verify,
    select_params,
    theta_k_exact,
    theta_tilde_exact,
    verify_decomposition,
    verify_representation
)
from hyperrep.text import dump_decomposition, dump_representation, parse_representation

pytestmark = pytest.mark.slow


@pytest.mark.parametrize('seed', [1, 2])
def test_union_of_matchings_end_to_end(seed):
    graph = gen_union_of_matchings(30, 3, 4, seed)
    rep = build_representation(graph, seed=seed,
                               options=BuildOptions(workers=2, retain_families=True))

    report = verify_representation(graph, rep)
    assert report.valid and report.exhaustive
    assert report.total_tuples == 4060
    assert rep.ground_size <= theorem1_bound(graph.n, graph.max_degree, graph.r)

    decomposition = rep.metadata.decomposition
    assert decomposition == decompose(graph)
    for tuple_ in list(graph.edges[:5]) + [(0, 1, 2), (10, 20, 29)]:
        assert check_proposition_bounds(graph, decomposition, rep.metadata.families,
                                        tuple_).holds

    parsed = parse_representation(dump_representation(rep))
    assert verify_representation(graph, parsed) == report
    assert sampled_verify(graph, parsed, 200, seed).valid


@pytest.mark.parametrize('seed', range(20))
def test_general_mode_sizes(seed):
    graph = gen_union_of_matchings(30, 3, 4, seed)
    rep = build_representation(graph, seed=seed)
    L = rep.metadata.L
    assert L <= 12
    assert rep.metadata.build_attempts <= 10
    assert rep.ground_size == L * math.ceil(576 * L ** 2 * math.log(30))
    assert verify_representation(graph, rep).valid
    assert check_size_against_bound(rep, graph)


@pytest.mark.parametrize('seed', range(20))
def test_general_mode_without_build_verification(seed):
    # certified families alone separate edges from non-edges in general mode
    graph = gen_union_of_matchings(30, 3, 4, 100 + seed)
    rep = build_representation(graph, seed=seed, options=BuildOptions(verify=False))
    report = verify_representation(graph, rep)
    assert report.valid
    assert report.violation_count == 0


@pytest.mark.parametrize('seed', range(10))
def test_linear_mode_end_to_end(seed):
    graph = gen_random_linear(30, 3, 13, seed)
    rep = build_representation(graph, Mode.LINEAR, seed=seed)
    L = rep.metadata.L
    assert L <= 39
    assert rep.metadata.t == math.ceil(384 * 4 * L ** 1.5 * math.log(30))
    assert rep.ground_size == L * rep.metadata.t
    assert verify_representation(graph, rep).valid
    assert check_size_against_bound(rep, graph)


def test_certification_rate():
    params = select_params(30, 12, 3).family_params
    assert failure_probability_bound(10, params) < 0.01
    first_try = sum(gen_verified_family(10, params, seed, 100).attempts == 1
                    for seed in range(100))
    assert first_try >= 95


def test_decomposition_bound():
    for i in range(100):
        r = 3 + i % 2
        n = 12 + (7 * i) % 49
        delta = 1 + i % 8
        graph = gen_union_of_matchings(n, r, delta, i)
        decomposition = decompose(graph)
        assert verify_decomposition(graph, decomposition), (n, r, delta, i)
        assert decomposition.L <= (graph.max_degree - 1) * r + 1, (n, r, delta, i)


class TestOracleGroundTruth:

    def test_known_values(self):
        assert theta_tilde_exact(Hypergraph(3, 5)).value == 0
        for n in (3, 4, 5):
            assert theta_tilde_exact(Hypergraph(3, n, [(0, 1, 2)])).value == 1
        assert theta_tilde_exact(Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])).value == 2

    @pytest.mark.parametrize('n', [3, 4, 5])
    def test_all_small_hypergraphs(self, n):
        triples = list(combinations(range(n), 3))
        for mask in range(1 << len(triples)):
            graph = Hypergraph(3, n, [e for j, e in enumerate(triples) if mask >> j & 1])

            tilde = theta_tilde_exact(graph)
            assert verify_representation(graph, tilde.to_representation(n)).valid, graph

            restricted = theta_k_exact(graph, 1)
            unrestricted = theta_k_exact(graph, 1, restrict=False)
            assert restricted.value == unrestricted.value, graph
            assert verify_representation(graph, restricted.to_representation(n)).valid, graph
            assert tilde.value <= restricted.value


def test_reproducible_files():
    graph = gen_union_of_matchings(30, 3, 4, 3)
    first = dump_representation(build_representation(graph, seed=11))
    second = dump_representation(build_representation(graph, seed=11))
    assert first == second
    assert dump_decomposition(graph, decompose(graph)) == \
        dump_decomposition(graph, decompose(graph))
