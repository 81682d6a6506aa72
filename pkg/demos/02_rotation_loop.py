"""
The rotation loop as an event log
=================================

Rotating a closed braid once around the core of the solid torus is written
as a sequence of R2, R3, distant-exchange and cyclic-shift moves on marked
crossings.
"""

import json
from collections import Counter

from braidcocycles import BraidWord, EventLog, generate_rot, replay

w = BraidWord(4, (1, -2, -3))
log = generate_rot(w, l=1)
print("events:", len(log.events))
print("by kind:", dict(Counter(type(ev).__name__ for ev in log.events)))

# the number of R3 moves is 2 c (n - 2) l
print("R3 moves:", log.r3_count(), "expected", 2 * len(w.letters) * (w.n - 2) * 1)

# replaying the log brings the word back; crossing ids are tracked throughout
states = replay(log)
print("first states:", [s.word.letters for s in states[:4]])
print("closes up:", states[-1].word == w)

# logs serialize to JSON and load back unchanged
again = EventLog.from_json(json.loads(json.dumps(log.to_json())))
print("round trip:", again == log)
