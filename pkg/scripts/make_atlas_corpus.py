"""Write tests/data/graphs_n{N}.g6: one graph per isomorphism class, N <= 7.

The classes come from the networkx graph atlas; this is run once and the
output is committed.
"""
from pathlib import Path

from networkx.generators.atlas import graph_atlas_g

from lettericity.graph import Graph, to_graph6

out = Path(__file__).resolve().parents[1] / "tests" / "data"
out.mkdir(parents=True, exist_ok=True)
by_n: dict[int, list[str]] = {}
for h in graph_atlas_g():
    n = h.number_of_nodes()
    by_n.setdefault(n, []).append(to_graph6(Graph.from_edges(n, h.edges())))
for n, lines in sorted(by_n.items()):
    if n >= 1:
        (out / f"graphs_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))
