"""Maintain a solution while a graph grows, then benchmark a suite.

The incremental driver inserts vertices one at a time and reoptimizes after
each insertion; with the exact reoptimizer the final answer matches a direct
solve. The bench harness then runs the algorithm matrix over a directory of
generated instances.
"""

import tempfile
from pathlib import Path

from pvcover import (
    GeneratorConfig,
    bench,
    gen_graph,
    incremental_build,
    solve_exact,
    write_graph,
)
from pvcover.harness import shuffled_order

g = gen_graph(GeneratorConfig(n=11, edge_target=15, seed=3))
direct = solve_exact(g, 3)
inc = incremental_build(g, 3, reoptimizer="exact")
shuffled = incremental_build(g, 3, reoptimizer="exact", order=shuffled_order(g, 9))
print(f"direct:              weight={direct.weight}")
print(f"incremental:         weight={inc.weight}")
print(f"incremental shuffled: weight={shuffled.weight}")
assert direct.weight == inc.weight == shuffled.weight

with tempfile.TemporaryDirectory() as tmp:
    suite = Path(tmp)
    for i in range(4):
        gi = gen_graph(GeneratorConfig(n=9, edge_target=12, seed=i))
        (suite / f"inst{i}.graph").write_text(write_graph(gi))
    print("\nbench over 4 instances:")
    for name, alg, status, detail, report in bench(suite, 3):
        line = f"  {name} {alg}: {status}"
        if report is not None:
            line += f" weight={report.weight} feasible={report.feasible}"
        print(line)
