"""
Classifying triple crossings
============================

Each R3 move is a triple crossing.  Its type (a, b)+/- comes from the
homological markings of the triangle crossings and its sign from the
coorientation of the move.
"""

from collections import Counter

from braidcocycles import BraidWord, classify_all, gauss_diagram, generate_rot

w = BraidWord(4, (1, -2, -3))
print("markings of the crossings:", [a.marking for a in gauss_diagram(w).arrows])

triples = classify_all(generate_rot(w))
census = Counter((f"({t.markings[0]},{t.markings[1]}){t.global_type}", t.sign) for t in triples)
for (typ, sign), k in sorted(census.items()):
    print(f"{typ:8} sign {sign:+d}: {k}")

# a single triple: its arrows seen from the triangle
t = triples[0]
print(t.to_json()["type"], "roles", t.roles)
for f in t.frame()[:5]:
    print("  arrow", f.id, "from arc", f.tail_arc, "to arc", f.head_arc, "marking", f.marking, "writhe", f.writhe)
