"""
Caps that break the Gorenstein property
=======================================

Any connected graph that is not complete has two non-adjacent vertices with a
common neighbour.  Doubling the cap budget around them forces the ring to be a
Veronese-type algebra that is not Gorenstein.
"""

from edgepowers import delta, gorenstein_oracle, nocomp_witness, top_bounded_generators
from edgepowers.census import small_graphs
from edgepowers.graphs import is_complete

for n in (3, 4):
    for G in small_graphs(n):
        if is_complete(G):
            continue
        w = nocomp_witness(G)
        gens = top_bounded_generators(G, w.cap)
        h = gorenstein_oracle(gens).hilbert.hvector
        edges = " ".join(f"{i + 1}{j + 1}" for i, j in sorted(G.edges))
        print(
            f"{edges:<18} cap={w.cap}  2*delta={2 * delta(G, w.cap)}  "
            f"A={tuple(v + 1 for v in w.A)}  A({w.predicted.d};{w.predicted.a})  h={h}"
        )
