"""
Trace circles and monodromy
===========================

Following every crossing through the loop gives a graph whose edges join
into circles, one per marking for a single rotation.
"""

from braidcocycles import BraidWord, build_trace, detect_generalized_trihedrons, generate_rot, monodromy, trace_circles
from braidcocycles.trace import to_dot

w = BraidWord(3, (2, -1))
g = build_trace(generate_rot(w))
circles = trace_circles(g)
print("triple points:", len(g.triple_nodes), " tangencies:", len(g.tangency_nodes))
for c in circles:
    print(" ", c.name, "marking", c.marking, "torus class", c.torus_class, "crossings", len(c.members))

e = detect_generalized_trihedrons(g, circles)
print("unpaired triple points:", len(e.members), " trihedra:", e.pairing)

# two rotations: one rotation exchanges the circles within each marking
m = monodromy(BraidWord(3, (2, -1, 2, -1)), 2)
print("monodromy:", m.circles)

# Graphviz export
print(to_dot(g, circles).splitlines()[0], "...")
