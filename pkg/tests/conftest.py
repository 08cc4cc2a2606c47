"""Shared helpers: independent brute-force oracles and seeded instance supply.

The oracles here deliberately avoid the package's enumeration/DFS code paths:
paths come from permutations of vertex combinations, covers from full subset
scans. They are slow and only meant for desk-scale cross-checks.
"""

from __future__ import annotations

import itertools

import pytest

from pvcover import (
    Graph,
    GeneratorConfig,
    ReoptInstance,
    gen_graph,
    gen_patch,
    make_solution,
    solve_exact,
)


def perm_k_paths(g: Graph, k):
    """All k-paths by brute permutation, canonical and sorted."""
    found = set()
    for combo in itertools.combinations(g.vertices(), k):
        for perm in itertools.permutations(combo):
            if perm[0] > perm[-1]:
                continue
            if all(g.has_edge(u, v) for u, v in zip(perm, perm[1:])):
                found.add(perm)
    return sorted(found)


def brute_covers(g: Graph, s, k):
    s = frozenset(s)
    return all(s.intersection(p) for p in perm_k_paths(g, k))


def brute_optima(g: Graph, k, objective="weight"):
    """(optimal value, list of all optimal covers) by full subset scan."""
    paths = perm_k_paths(g, k)
    if not paths:
        return 0, [frozenset()]
    verts = list(g.vertices())
    best = None
    optima = []
    for r in range(g.n + 1):
        for combo in itertools.combinations(verts, r):
            s = frozenset(combo)
            if not all(s.intersection(p) for p in paths):
                continue
            val = g.weight_of(s) if objective == "weight" else len(s)
            if best is None or val < best:
                best = val
                optima = [s]
            elif val == best:
                optima.append(s)
    return best, optima


def brute_opt_weight(g: Graph, k):
    return brute_optima(g, k)[0]


def random_graph(seed, n, m=None, weighted=True, max_degree=None):
    if m is None:
        m = min(n + n // 2, n * (n - 1) // 2)
    cfg = GeneratorConfig(
        n=n,
        edge_target=m,
        max_degree=max_degree,
        weight_range=(1, 10) if weighted else (1, 1),
        seed=seed,
    )
    return gen_graph(cfg)


def random_reopt_instance(seed, n_new, k, c, weighted=True, max_degree=None):
    """Seeded instance: old graph, random patch of c vertices, exact old opt."""
    n_old = n_new - c
    g_old = random_graph(seed, n_old, weighted=weighted, max_degree=max_degree)
    patch = gen_patch(
        g_old,
        c,
        attach_prob=2.0 / max(n_old, 1),
        internal_prob=0.4,
        seed=seed + 1,
        weight_range=(1, 10) if weighted else (1, 1),
        max_degree=max_degree,
    )
    old_opt = solve_exact(g_old, k)
    return ReoptInstance.create(g_old, patch, old_opt, k)


@pytest.fixture
def path4():
    return Graph.build(4, [(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def weighted_path_fixture():
    """Old path 1-2-3 with weights (1,5,1); patch adds 4 (w=5) attached to 3."""
    from pvcover import InsertionPatch, apply_patch

    g_old = Graph.build(3, [(1, 2), (2, 3)], weights=[1, 5, 1])
    patch = InsertionPatch(3, added=((4, 5),), attachment_edges=((3, 4),))
    return g_old, patch, apply_patch(g_old, patch)


@pytest.fixture
def edge_plus_vertex_fixture():
    """Old edge 1-2 with weights (5,5); patch adds 3 (w=1) attached to 2."""
    from pvcover import InsertionPatch, apply_patch

    g_old = Graph.build(2, [(1, 2)], weights=[5, 5])
    patch = InsertionPatch(2, added=((3, 1),), attachment_edges=((2, 3),))
    return g_old, patch, apply_patch(g_old, patch)


def exact_old_opt(g_old, k):
    return solve_exact(g_old, k)


def empty_solution(g, k):
    return make_solution(g, frozenset(), k)
