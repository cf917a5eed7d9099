"""
==========================
Cyclicity of the C6 gadget
==========================

Cyclicity is the length of the longest cycle a graph contracts to.  For the
C6 gadget it is at least 6 exactly when the hypergraph is 2-colourable.
"""

from contractlab import Hypergraph, build_c6_gadget, cyclicity, is_two_colourable, normalize

# %%
# One colourable and one non-colourable instance.  The second has a
# singleton hyperedge {q1}, which no colouring can split.

instances = {
    "colourable": Hypergraph(["q1", "q2", "q3"], [["q2", "q3"], ["q1", "q2"]]),
    "not colourable": Hypergraph(["q1", "q2"], [["q1"]]),
}

for name, h in instances.items():
    h = normalize(h)
    g = build_c6_gadget(h).graph
    print(f"{name:15s} colouring={is_two_colourable(h) is not None!s:5s} "
          f"|V|={len(g):2d} cyclicity={cyclicity(g)}")
