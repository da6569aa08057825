"""
A complete bipartite graph minus one edge
=========================================

K_{3,2} with the edge {1, 4} removed, caps (4, 6, 6, 4, 6).  The first part
carries cap total 16 against 10 on the second, so the ring reduces to an
algebra of Veronese type on the first part's coordinates.
"""

from edgepowers import (
    MultipartiteSpec,
    classify_multipartite_minus_matching,
    gorenstein_oracle,
    top_bounded_generators,
    veronese_generators,
)

spec = MultipartiteSpec(parts=((0, 1, 2), (3, 4)), removed=((0, 3),))
caps = (4, 6, 6, 4, 6)

m = classify_multipartite_minus_matching(spec, caps)
print("case:", m.case, "| part sums:", m.part_sums, "| capped degrees:", m.capped_degrees)
print("Veronese data: d =", m.spec.d, "a =", m.spec.a)

ver = veronese_generators(m.spec)
gens = top_bounded_generators(spec.graph(), caps)
print(len(ver), "Veronese monomials,", len(gens), "generators of the bounded power")

# each generator is the fixed part (0,0,0,4,6) plus a Veronese exponent on x1..x3
print("shift matches:", m.predicted_generators() == gens)

verdict = gorenstein_oracle(ver)
print("h-vector:", verdict.hilbert.hvector, "->", "Gorenstein" if verdict.gorenstein else "not Gorenstein")
