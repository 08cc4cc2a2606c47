"""Solve one seeded instance with every solver and compare the answers.

Generates a small weighted random graph, runs the exact branch-and-bound,
the greedy (n-k+1)-approximation and the local-ratio k-approximation, and
prints each cover with its ratio against the optimum.
"""

from pvcover import (
    GeneratorConfig,
    gen_graph,
    greedy_approx,
    local_ratio_approx,
    solve_exact,
    write_graph,
)

K = 3

g = gen_graph(GeneratorConfig(n=12, edge_target=16, seed=42))
print("instance:")
print(write_graph(g))

opt = solve_exact(g, K)
print(f"exact optimum: {sorted(opt.vertices)} weight={opt.weight}")

for name, sol in [
    ("greedy", greedy_approx(g, K)),
    ("local-ratio", local_ratio_approx(g, K)),
    ("local-ratio (no prune)", local_ratio_approx(g, K, prune=False)),
]:
    ratio = sol.weight / opt.weight if opt.weight else float("nan")
    print(
        f"{name:24s} {sorted(sol.vertices)} weight={sol.weight} "
        f"feasible={sol.feasible} ratio={ratio:.3f}"
    )
