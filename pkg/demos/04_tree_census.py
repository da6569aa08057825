"""
Trees with unit caps
====================

For trees missing two vertices in every maximum matching, the ring with all
caps 1 is the edge ring of the deficiency graph.  We tabulate the structural
case of every such tree on at most 10 vertices next to the oracle's answer.
"""

from collections import Counter

from edgepowers.census import tree_census

cases = Counter()
for row in tree_census(10):
    f = row.fields
    cases[f["case"], f["classify"]] += 1
    if f["classify"] != f["oracle"]:
        print("mismatch:", row.ident, f["edges"])

for (case, verdict), count in sorted(cases.items()):
    print(f"case {case:>4}: {count:3d} trees, Gorenstein = {verdict}")
