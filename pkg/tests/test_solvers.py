import pytest

from pvcover import (
    Graph,
    UnknownOracle,
    covers_all_k_paths,
    enumerate_optima,
    greedy_approx,
    induced_subgraph,
    local_ratio_approx,
    oracle_registry,
    solve_exact,
)
from pvcover.errors import SizeLimitExceeded

from conftest import brute_optima, brute_opt_weight, random_graph


def test_exact_path_graph_canonical(path4):
    sol = solve_exact(path4, 3)
    assert sol.vertices == frozenset({2})
    assert sol.weight == 1


def test_exact_weighted_pendant():
    g = Graph.build(3, [(1, 2), (2, 3)], weights=[5, 5, 1])
    sol = solve_exact(g, 3)
    assert sol.vertices == frozenset({3})
    assert sol.weight == 1


def test_exact_kpath_free_graph():
    g = Graph.build(3, [(1, 2)])
    sol = solve_exact(g, 3)
    assert sol.vertices == frozenset() and sol.weight == 0


def test_exact_matches_brute_force():
    for seed in range(60):
        g = random_graph(seed, 9)
        for k in (2, 3, 4):
            sol = solve_exact(g, k)
            best, optima = brute_optima(g, k)
            assert sol.feasible
            assert sol.weight == best
            assert sol.vertices in optima


def test_exact_canonical_tiebreak():
    # among equal-weight optima the smaller-cardinality, lexicographically
    # smallest set is returned
    for seed in range(30):
        g = random_graph(seed, 8)
        sol = solve_exact(g, 3)
        _, optima = brute_optima(g, 3)
        expected = min(optima, key=lambda s: (len(s), tuple(sorted(s))))
        assert sol.vertices == expected


def test_exact_cardinality_equals_weight_on_unit():
    for seed in range(20):
        g = random_graph(seed, 9, weighted=False)
        a = solve_exact(g, 3, objective="weight")
        b = solve_exact(g, 3, objective="cardinality")
        assert a.vertices == b.vertices


def test_exact_size_guard():
    g = random_graph(0, 10)
    with pytest.raises(SizeLimitExceeded):
        solve_exact(g, 3, size_limit=9)


def test_enumerate_optima_path_graph(path4):
    assert enumerate_optima(path4, 3) == [frozenset({2}), frozenset({3})]


def test_enumerate_optima_kpath_free():
    assert enumerate_optima(Graph.build(3, []), 3) == [frozenset()]


def test_enumerate_optima_weighted():
    g = Graph.build(3, [(1, 2), (2, 3)], weights=[1, 5, 1])
    assert enumerate_optima(g, 3) == [frozenset({1}), frozenset({3})]


def test_enumerate_optima_matches_brute():
    for seed in range(25):
        g = random_graph(seed, 8)
        _, expected = brute_optima(g, 3)
        got = enumerate_optima(g, 3)
        assert sorted(map(sorted, got)) == sorted(map(sorted, expected))


def test_greedy_trace_small():
    g = Graph.build(3, [(1, 2), (2, 3)], weights=[3, 1, 2])
    sol = greedy_approx(g, 3)
    assert sol.vertices == frozenset({2}) and sol.weight == 1


def test_greedy_kpath_free():
    assert greedy_approx(Graph.build(4, [(1, 2)]), 3).vertices == frozenset()


def test_greedy_tightness_on_p5():
    p5 = Graph.build(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
    sol = greedy_approx(p5, 3)
    assert sol.vertices == frozenset({1, 2, 3}) and sol.weight == 3
    assert solve_exact(p5, 3).weight == 1  # greedy hits ratio n-k+1 = 3


def test_greedy_ratio_bound():
    for seed in range(60):
        g = random_graph(seed, 10)
        for k in (3, 4):
            sol = greedy_approx(g, k, seed=seed)
            assert sol.feasible
            assert sol.weight <= (g.n - k + 1) * max(brute_opt_weight(g, k), 0) or sol.weight == 0


def test_local_ratio_trace_small():
    g = Graph.build(3, [(1, 2), (2, 3)], weights=[3, 1, 2])
    sol = local_ratio_approx(g, 3)
    assert sol.vertices == frozenset({2}) and sol.weight == 1


def test_local_ratio_prune_on_p5():
    p5 = Graph.build(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
    assert local_ratio_approx(p5, 3, prune=False).vertices == frozenset({1, 2, 3})
    assert local_ratio_approx(p5, 3, prune=True).vertices == frozenset({3})


def test_local_ratio_kpath_free():
    assert local_ratio_approx(Graph.build(3, []), 3).vertices == frozenset()


def test_local_ratio_ratio_bound_and_prune_helps():
    for seed in range(60):
        g = random_graph(seed, 10)
        for k in (3, 4):
            raw = local_ratio_approx(g, k, prune=False)
            pruned = local_ratio_approx(g, k, prune=True)
            assert raw.feasible and pruned.feasible
            assert raw.weight <= k * brute_opt_weight(g, k)
            assert pruned.weight <= raw.weight


def test_optimum_subset_removal_monotonicity():
    # removing a subset of an optimum drops the optimum by at least its weight
    from itertools import chain, combinations

    for seed in range(40):
        g = random_graph(seed, 9)
        for k in (3, 4):
            opt = solve_exact(g, k)
            subsets = chain.from_iterable(
                combinations(sorted(opt.vertices), r)
                for r in range(1, len(opt.vertices) + 1)
            )
            for s in subsets:
                rest, orig = induced_subgraph(g, frozenset(g.vertices()) - set(s))
                rest_opt = solve_exact(rest, k)
                assert rest_opt.weight <= opt.weight - g.weight_of(s)


def test_oracle_registry():
    reg = oracle_registry()
    assert reg["exact"].declared_ratio == "1"
    assert reg["local-ratio"].declared_ratio == "k"
    assert reg["greedy"].declared_ratio == "n-k+1"
    with pytest.raises(UnknownOracle):
        reg["bogus"]


def test_registry_oracles_feasible():
    g = random_graph(5, 9)
    for name, oracle in oracle_registry().items():
        sol = oracle.solve(g, 3, 0)
        assert covers_all_k_paths(g, sol.vertices, 3)
