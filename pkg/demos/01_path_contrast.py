"""
Two caps on the same path
=========================

The path 1 - 2 - 3 gives a Gorenstein ring with unit caps and a
non-Gorenstein one with caps (3, 3, 3).  Here we look at the generators and
the Hilbert function that separate the two.
"""

from edgepowers import delta, gorenstein, h_vector, top_bounded_generators
from edgepowers.graphs import path_graph

P3 = path_graph(3)

for caps in [(1, 1, 1), (3, 3, 3)]:
    gens = top_bounded_generators(P3, caps)
    data = h_vector(gens)
    print(f"caps {caps}: delta = {delta(P3, caps)}")
    print("  generators:", list(gens))
    print("  H(k) for k = 0..%d:" % (len(data.values) - 1), data.values)
    print("  h-vector:", data.hvector, "palindromic" if data.palindromic else "not palindromic")

# The classification route and the oracle agree on both.
for caps in [(1, 1, 1), (3, 3, 3)]:
    v = gorenstein(P3, caps)
    print(caps, "->", "Gorenstein" if v.gorenstein else "not Gorenstein", f"[{v.case}]")
