"""Detection, enumeration and coverage checks for simple paths of order k.

A k-path is stored as a tuple of k distinct vertex ids with consecutive pairs
adjacent, in canonical orientation: first endpoint < last endpoint. The
exhaustive routines are the deterministic oracle; color coding is the fast
randomized alternative with one-sided error.
"""

from __future__ import annotations

import math
import random

from .errors import LimitExceeded
from .graph import Graph, induced_subgraph, max_degree

DEFAULT_PATH_CAP = 10**7
DEFAULT_DELTA = 0.01
EXHAUSTIVE_N = 16  # automatic strategy switches to color coding above this


def canonical(path):
    """Canonical orientation of an undirected path sequence."""
    path = tuple(path)
    return path if path[0] < path[-1] else path[::-1]


def is_k_path(g: Graph, path, k) -> bool:
    """True iff path is a simple path of order k in g."""
    if len(path) != k or len(set(path)) != k:
        return False
    return all(g.has_edge(u, v) for u, v in zip(path, path[1:]))


def enumerate_k_paths(g: Graph, k, cap=DEFAULT_PATH_CAP):
    """All simple paths of order exactly k, canonical, sorted lexicographically."""
    if k < 2:
        raise ValueError("k must be at least 2")
    found = []
    path = []
    on_path = [False] * (g.n + 1)

    def extend(v):
        path.append(v)
        on_path[v] = True
        if len(path) == k:
            if path[0] < path[-1]:
                found.append(tuple(path))
                if len(found) > cap:
                    raise LimitExceeded(f"more than {cap} {k}-paths")
        else:
            for u in g.adj[v - 1]:
                if not on_path[u]:
                    extend(u)
        path.pop()
        on_path[v] = False

    for start in g.vertices():
        extend(start)
    found.sort()
    return found


def _has_k_path_dfs(g: Graph, k) -> bool:
    on_path = [False] * (g.n + 1)

    def extend(v, depth):
        if depth == k:
            return True
        on_path[v] = True
        try:
            for u in g.adj[v - 1]:
                if not on_path[u] and extend(u, depth + 1):
                    return True
        finally:
            on_path[v] = False
        return False

    return any(extend(v, 1) for v in g.vertices())


def has_k_path(g: Graph, k) -> bool:
    """Deterministic detection with structural shortcuts for k=2 and k=3."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if k == 2:
        return g.m > 0
    if k == 3:
        # no 3-path iff every component is a vertex or an edge, i.e. max degree
        # <= 1 (the dissociation-set characterization)
        return max_degree(g) > 1
    if g.n < k:
        return False
    return _has_k_path_dfs(g, k)


def covers_all_k_paths(g: Graph, s, k) -> bool:
    """True iff removing s leaves no path of order k."""
    s = frozenset(s)
    g._check_subset(s)
    rest, _ = induced_subgraph(g, frozenset(g.vertices()) - s)
    return not has_k_path(rest, k)


def _first_k_path_exhaustive(g: Graph, k):
    """Lexicographically first k-path, or None; ordered DFS with early exit."""
    path = []
    on_path = [False] * (g.n + 1)

    def extend(v):
        path.append(v)
        if len(path) == k:
            return tuple(path)
        on_path[v] = True
        for u in g.adj[v - 1]:
            if not on_path[u]:
                got = extend(u)
                if got is not None:
                    return got
        on_path[v] = False
        path.pop()
        return None

    for start in g.vertices():
        got = extend(start)
        if got is not None:
            # the lexicographically smallest sequence is already canonical:
            # its reverse is also a valid sequence and compares larger
            return got
    return None


def default_trials(k, delta=DEFAULT_DELTA):
    """Trial count giving per-path miss rate <= delta: ceil(e^k * ln(1/delta))."""
    return math.ceil(math.exp(k) * math.log(1.0 / delta))


def _colorful_path_trial(g: Graph, k, rng, state_cap):
    """One color-coding trial: random k-coloring + colorful-path DP.

    Returns a verified k-path or None. States are (vertex, color-subset)
    pairs with a parent pointer for reconstruction.
    """
    color = [rng.randrange(k) for _ in range(g.n)]
    full = (1 << k) - 1
    # parent[(v, mask)] = previous vertex on some colorful path ending at v
    parent = {}
    frontier = []
    for v in g.vertices():
        mask = 1 << color[v - 1]
        parent[(v, mask)] = None
        frontier.append((v, mask))
    for _ in range(k - 1):
        nxt = []
        for v, mask in frontier:
            for u in g.adj[v - 1]:
                bit = 1 << color[u - 1]
                if mask & bit:
                    continue
                key = (u, mask | bit)
                if key not in parent:
                    parent[key] = v
                    nxt.append(key)
                    if len(parent) > state_cap:
                        raise LimitExceeded("colorful-path state cap exceeded")
        frontier = nxt
    for v in g.vertices():
        if (v, full) in parent:
            path = []
            key = (v, full)
            cur = v
            while cur is not None:
                path.append(cur)
                cur = parent[key]
                if cur is not None:
                    key = (cur, key[1] & ~(1 << color[path[-1] - 1]))
            path.reverse()
            if is_k_path(g, path, k):
                return canonical(path)
    return None


def find_k_path(g: Graph, k, strategy="auto", trials=None, seed=0, state_cap=None):
    """Find one k-path.

    exhaustive: lexicographically first k-path or None, never errs.
    color-coding: random trials with derived seeds (seed + trial index); any
    returned path is verified, so only "None" can be wrong.
    auto: exhaustive when n <= 16 or k <= 3, color-coding otherwise.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if strategy == "auto":
        strategy = "exhaustive" if (g.n <= EXHAUSTIVE_N or k <= 3) else "color-coding"
    if strategy == "exhaustive":
        return _first_k_path_exhaustive(g, k)
    if strategy != "color-coding":
        raise ValueError(f"unknown strategy {strategy!r}")
    if trials is None:
        trials = default_trials(k)
    if trials < 1:
        raise ValueError("color coding needs at least one trial")
    if state_cap is None:
        state_cap = (1 << k) * max(g.n, 1)
    for t in range(trials):
        got = _colorful_path_trial(g, k, random.Random(seed + t), state_cap)
        if got is not None:
            return got
    return None


def k_paths_through(g: Graph, k, focus, cap=DEFAULT_PATH_CAP):
    """The enumerated k-paths containing at least one focus vertex."""
    focus = frozenset(focus)
    g._check_subset(focus)
    if not focus:
        return []
    return [p for p in enumerate_k_paths(g, k, cap=cap) if focus.intersection(p)]
