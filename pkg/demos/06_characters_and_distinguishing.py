"""
Character invariants and telling braids apart
=============================================

Refining a cocycle by the names of the trace circles gives tables that can
separate a knot from its reverse.  Two tables are equivalent when a renaming
of the circles carries one onto the other.
"""

from collections import Counter

from braidcocycles import BraidWord, all_characters0, build_trace, characters0, characters_d, generate_rot, reverse
from braidcocycles import trace_circles
from braidcocycles.trace import find_bijection


def tables(w, l):
    g = build_trace(generate_rot(w, l))
    circles = trace_circles(g)
    return g, circles


k89 = BraidWord(3, (-1, 2, -1, -1, -1, 2, 2, 2))
for word in (k89, reverse(k89)):
    g, circles = tables(word, 3)
    table = characters0(g, circles, 1, 1, "-")
    nine = Counter(v for (_, names), v in table.entries.items() if names[0] == names[1])
    print(word.letters, "C_(1,1)-(x_i, x_i, y_j) values:", dict(nine))

ga, ca = tables(k89, 3)
gb, cb = tables(reverse(k89), 3)
sigma = find_bijection([all_characters0(ga, ca)], [all_characters0(gb, cb)], ca, cb)
print("verdict:", "CONJUGACY-COMPATIBLE" if sigma else "DISTINGUISHED")

# higher-degree characters at one rotation sum to the polynomial
g, circles = tables(BraidWord(3, (1, 1, 1, 2, 2, 1, 2, 1)), 1)
for key, value in characters_d(g, circles, "degd-l:1").entries.items():
    print(key, value)
