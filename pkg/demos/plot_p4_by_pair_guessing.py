"""
========================================
Deciding P4 contraction by guessing ends
========================================

A graph contracts to a 4-vertex path exactly when two non-adjacent vertices
u, v can be chosen so that the rest splits into two connected parts, one
holding N(u) and the other N(v).  This compares that algorithm with the
generic witness search on a few graphs.
"""

import random

from contractlab import Graph, PatternSpec, contracts_to, p4_contractible, solve_2dcs

# %%
# The split itself is a two disjoint connected subgraphs problem.

c6 = Graph.from_edges([("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("6", "1")])
print(solve_2dcs(c6, ["1", "3"], ["5"]))

# %%
# A cycle never contracts to a path, a long path always does.

p7 = Graph.from_edges([(str(i), str(i + 1)) for i in range(1, 7)])
for name, g in [("C6", c6), ("P7", p7)]:
    ws = p4_contractible(g)
    print(name, "->", None if ws is None else [sorted(ws[c]) for c in ws.pattern.labels])

# %%
# Agreement with the generic search on random graphs.

rng = random.Random(1)
agree = 0
for _ in range(100):
    vs = [str(i) for i in range(8)]
    g = Graph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if rng.random() < 0.3])
    agree += (p4_contractible(g) is None) == (contracts_to(g, PatternSpec.path(4)) is None)
print(agree, "/ 100 agree")
