"""
=================================================
From a hypergraph colouring to a path contraction
=================================================

Builds the P5 gadget for a three-element hypergraph, checks its distance
structure, and turns a 2-colouring into a contraction onto a 5-vertex path
and back again.
"""

# %%
# A small hypergraph with elements q1..q3 and two hyperedges.  The gadgets
# expect a normalized instance, which appends the full element set as a
# last hyperedge.

from contractlab import (
    Hypergraph,
    build_p5_gadget,
    colouring_to_p5_witness,
    diameter,
    find_suitable_pair,
    is_bipartite,
    is_two_colourable,
    normalize,
    p5_witness_to_colouring,
    verify_witness,
)

h = normalize(Hypergraph(["q1", "q2", "q3"], [["q2", "q3"], ["q1", "q2"]]))
print(h)

# %%
# The gadget is bipartite and has diameter 4.

gadget = build_p5_gadget(h)
g = gadget.graph
print(len(g), "vertices,", g.num_edges, "edges")
print("bipartite:", is_bipartite(g) is not None, " diameter:", diameter(g))

# %%
# A colouring of the hypergraph gives five connected classes directly.

colouring = is_two_colourable(h)
ws = colouring_to_p5_witness(gadget, colouring)
for label in ws.pattern.labels:
    print(label, sorted(ws[label]))
print(verify_witness(g, ws))

# %%
# Going the other way, the suitable-pair search finds end vertices v and w
# without being told the colouring, and the colouring can be read off the
# middle classes.

pair = find_suitable_pair(g, 5)
print("pair:", pair.u, pair.v)
back = p5_witness_to_colouring(gadget, pair.witness)
print("recovered:", sorted(back.q1), sorted(back.q2))
