"""Incremental insertion driver, solution verification and benchmarking."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, PvcError
from .graph import Graph, InsertionPatch
from .instances import parse_graph, parse_patch, parse_solution
from .kpaths import covers_all_k_paths
from .reopt import ReoptInstance, ptas_unweighted, wtd_3path, wtd_kpath
from .solvers import (
    CoverSolution,
    greedy_approx,
    local_ratio_approx,
    make_solution,
    oracle_registry,
    solve_exact,
)


@dataclass
class RunReport:
    """One measured algorithm run; ratio only when the exact solve succeeded."""

    algorithm: str
    n: int
    m: int
    k: int
    size: int
    weight: int
    elapsed_ms: float
    feasible: bool
    exact_weight: int | None = None
    ratio: str | None = None  # decimal string, or "both-zero"
    seed: int | None = None
    flags: dict = field(default_factory=dict)

    def stdout_line(self):
        """Deterministic report line; timings are deliberately excluded."""
        parts = [
            f"alg={self.algorithm}",
            f"n={self.n}",
            f"m={self.m}",
            f"k={self.k}",
            f"feasible={'true' if self.feasible else 'false'}",
            f"size={self.size}",
            f"weight={self.weight}",
        ]
        if self.exact_weight is not None:
            parts.append(f"exact={self.exact_weight}")
        if self.ratio is not None:
            parts.append(f"ratio={self.ratio}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        for key in sorted(self.flags):
            parts.append(f"{key}={self.flags[key]}")
        return " ".join(parts)


def incremental_build(
    g: Graph,
    k,
    reoptimizer="exact",
    epsilon=None,
    seed=0,
    order=None,
) -> CoverSolution:
    """Insert vertices one by one, maintaining a solution via a reoptimizer.

    With reoptimizer="exact" the final solution weight equals a direct exact
    solve. order defaults to ascending ids; pass a permutation for stress
    variety.
    """
    if reoptimizer not in ("exact", "ptas"):
        raise ValueError(f"unknown reoptimizer {reoptimizer!r}")
    if reoptimizer == "ptas":
        if epsilon is None:
            raise ValueError("the ptas reoptimizer needs an epsilon")
        if any(w != 1 for w in g.weights):
            raise ValueError("the ptas reoptimizer requires unit weights")
    if order is None:
        order = list(g.vertices())
    if sorted(order) != list(g.vertices()):
        raise ValueError("order must be a permutation of the vertex ids")
    if g.n == 0:
        return make_solution(g, frozenset(), k)
    pos = {v: i + 1 for i, v in enumerate(order)}  # original id -> prefix id
    cur = Graph([g.weights[order[0] - 1]], [[]])
    sol = make_solution(cur, frozenset(), k)
    for i in range(1, g.n):
        v = order[i]
        attach = tuple(
            sorted((pos[u], i + 1) for u in g.adj[v - 1] if pos[u] <= i)
        )
        patch = InsertionPatch(
            old_vertex_count=i,
            added=((i + 1, g.weights[v - 1]),),
            attachment_edges=attach,
        )
        inst = ReoptInstance.create(cur, patch, sol, k)
        cur = inst.g_new
        if reoptimizer == "exact":
            sol = solve_exact(cur, k)
        else:
            sol = ptas_unweighted(inst, epsilon)
    back = {pos[v]: v for v in order}
    return make_solution(g, frozenset(back[v] for v in sol.vertices), k)


def verify(g: Graph, k, sol: CoverSolution, check_optimal=False, seed=None) -> RunReport:
    """Feasibility check, optionally with the ratio against the exact optimum."""
    start = time.perf_counter()
    feasible = covers_all_k_paths(g, sol.vertices, k)
    exact_weight = None
    ratio = None
    if check_optimal:
        opt = solve_exact(g, k)
        exact_weight = opt.weight
        if sol.weight == 0 and exact_weight == 0:
            ratio = "both-zero"
        elif exact_weight > 0:
            ratio = f"{sol.weight / exact_weight:.6g}"
    elapsed = (time.perf_counter() - start) * 1000.0
    return RunReport(
        algorithm="verify",
        n=g.n,
        m=g.m,
        k=k,
        size=sol.cardinality,
        weight=sol.weight,
        elapsed_ms=elapsed,
        feasible=feasible,
        exact_weight=exact_weight,
        ratio=ratio,
        seed=seed,
    )


def _run_algorithm(name, g, k, seed, patch=None, old_sol=None):
    if name == "exact":
        return solve_exact(g, k)
    if name == "greedy":
        return greedy_approx(g, k, seed=seed)
    if name == "local-ratio":
        return local_ratio_approx(g, k)
    if name in ("reopt-w3", "reopt-wk"):
        if patch is None or old_sol is None:
            return None
        inst = ReoptInstance.create(g, patch, old_sol, k)
        oracle = oracle_registry()["local-ratio"]
        if name == "reopt-w3":
            return wtd_3path(inst, oracle, seed=seed)
        return wtd_kpath(inst, oracle, seed=seed)
    raise ValueError(f"unknown algorithm {name!r}")


def bench(suite_dir, k, algorithms=("greedy", "local-ratio"), timeout_sec=None, seed=0):
    """Run the algorithm matrix over a suite directory.

    The suite holds <name>.graph files with optional companion <name>.patch
    and <name>.sol files (used by the reopt algorithms). Yields one RunReport
    per (instance, algorithm) in instance order; timeouts and parse errors
    become report rows rather than failures.
    """
    suite = Path(suite_dir)
    reports = []
    for path in sorted(suite.glob("*.graph")):
        name = path.stem
        try:
            g = parse_graph(path.read_text())
            patch = None
            old_sol = None
            patch_path = path.with_suffix(".patch")
            sol_path = path.with_suffix(".sol")
            if patch_path.exists():
                patch = parse_patch(patch_path.read_text())
            if sol_path.exists():
                old_sol = parse_solution(sol_path.read_text(), g)
        except (ParseError, PvcError) as exc:
            for alg in algorithms:
                reports.append((name, alg, "parse-error", str(exc), None))
            continue
        for alg in algorithms:
            if timeout_sec is not None and timeout_sec <= 0:
                reports.append((name, alg, "timeout", None, None))
                continue
            start = time.perf_counter()
            try:
                sol = _run_algorithm(alg, g, k, seed, patch=patch, old_sol=old_sol)
            except PvcError as exc:
                reports.append((name, alg, "error", str(exc), None))
                continue
            elapsed = time.perf_counter() - start
            if sol is None:
                reports.append((name, alg, "skipped", "needs patch+sol", None))
            elif timeout_sec is not None and elapsed > timeout_sec:
                reports.append((name, alg, "timeout", None, None))
            else:
                report = RunReport(
                    algorithm=alg,
                    n=g.n,
                    m=g.m,
                    k=k,
                    size=sol.cardinality,
                    weight=sol.weight,
                    elapsed_ms=elapsed * 1000.0,
                    feasible=sol.feasible,
                    seed=seed,
                )
                reports.append((name, alg, "ok", None, report))
    return reports


def shuffled_order(g: Graph, seed):
    order = list(g.vertices())
    random.Random(seed).shuffle(order)
    return order
