"""Gauss diagrams of closed braids and classification of triple crossings.

The knot circle is parametrized by ``(pass, letter index)``: pass ``k`` is the
``k``-th traversal of the braid box, starting with the strand at position 1
at the beginning of the word.  The circle coordinate of a point is
``k * c + j`` for a word of length ``c``; both visits of one crossing share
the letter index ``j`` and differ in pass.  Arrows run from the under-cross
to the over-cross.

Conventions (calibrated against the worked examples, see the decisions log):

* in a positive generator the strand moving from position ``i`` to ``i+1``
  is the over strand;
* a triple crossing with highest/middle/lowest strands ``h, m, l`` has
  markings ``(a, b) = ([lm], [mh])``; it is of type ``-`` when ``l, m, h``
  appear in this cyclic order on the circle (then ``[lh] = a + b``) and of
  type ``+`` otherwise (then ``[lh] = a + b - n``);
* the sign of a move is ``+1`` when the number of mutually crossing chords
  in the triangle grows across the move.  This depends only on the
  unoriented curves, as a coorientation must.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .braid import BraidWord, closure_permutation
from .loop import EventLog, MarkedDiagram, R3, apply_event

__all__ = [
    "GaussArrow",
    "GaussDiagram",
    "TripleEvent",
    "FrameArrow",
    "strand_passes",
    "gauss_diagram",
    "marking",
    "markings_at",
    "loop_homology",
    "classify_triple",
    "classify_all",
    "iter_triples",
]


@dataclass(frozen=True)
class GaussArrow:
    id: int
    under_pos: int
    over_pos: int
    writhe: int
    marking: int

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "under": self.under_pos,
            "over": self.over_pos,
            "writhe": self.writhe,
            "marking": self.marking,
        }


@dataclass(frozen=True)
class GaussDiagram:
    n: int
    circle_length: int
    arrows: tuple[GaussArrow, ...]

    def __post_init__(self):
        ends = [a.under_pos for a in self.arrows] + [a.over_pos for a in self.arrows]
        if len(set(ends)) != len(ends):
            raise ValueError("arrow endpoints must be distinct")

    def arrow(self, cid: int) -> GaussArrow:
        for a in self.arrows:
            if a.id == cid:
                return a
        raise KeyError(cid)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "circle_length": self.circle_length,
            "arrows": [a.to_json() for a in self.arrows],
        }


def strand_passes(word: BraidWord) -> list[tuple[int, int]]:
    """For each letter, the passes of the strands at positions ``i`` and ``i+1``."""
    perm = closure_permutation(word)
    n = word.n
    at = [0] * n
    pos = 1
    for k in range(n):
        at[pos - 1] = k
        pos = perm(pos)
    if pos != 1 or len(set(at)) != n:
        raise ValueError("the closure is not a knot")
    out = []
    for g in word.letters:
        i = abs(g)
        out.append((at[i - 1], at[i]))
        at[i - 1], at[i] = at[i], at[i - 1]
    return out


def _arrow(n: int, c: int, j: int, g: int, left: int, right: int, cid: int) -> GaussArrow:
    over, under = (left, right) if g > 0 else (right, left)
    return GaussArrow(
        id=cid,
        under_pos=under * c + j,
        over_pos=over * c + j,
        writhe=1 if g > 0 else -1,
        marking=(over - under) % n,
    )


def _arrows(word: BraidWord, ids: tuple[int, ...]) -> tuple[GaussArrow, ...]:
    c = len(word.letters)
    passes = strand_passes(word)
    return tuple(
        _arrow(word.n, c, j, g, *passes[j], ids[j]) for j, g in enumerate(word.letters)
    )


def _window_arrows(word: BraidWord, ids: tuple[int, ...], start: int, size: int) -> tuple[GaussArrow, ...]:
    """Arrows of the letters ``start .. start+size-1`` only."""
    c = len(word.letters)
    passes = strand_passes(word)
    return tuple(
        _arrow(word.n, c, j, word.letters[j], *passes[j], ids[j]) for j in range(start, start + size)
    )


def markings_at(word: BraidWord, positions: Iterable[int]) -> list[int]:
    """Homological markings of the crossings at the given letter positions."""
    passes = strand_passes(word)
    out = []
    for j in positions:
        left, right = passes[j]
        over, under = (left, right) if word.letters[j] > 0 else (right, left)
        out.append((over - under) % word.n)
    return out


def gauss_diagram(d: MarkedDiagram | BraidWord) -> GaussDiagram:
    if isinstance(d, BraidWord):
        d = MarkedDiagram.from_word(d)
    return GaussDiagram(d.n, d.n * len(d.word.letters), _arrows(d.word, d.ids))


def marking(d: MarkedDiagram, cid: int) -> int:
    j = d.ids.index(cid)
    return gauss_diagram(d).arrows[j].marking


def loop_homology(g: GaussDiagram, jumps: Iterable[int]) -> int:
    """Winding number of a loop that runs along the circle and jumps at arrows.

    The loop moves forward along the circle; on reaching the head of a jump
    arrow it jumps back to the tail of that arrow.  Jumps stay in one disc
    fibre and do not wind.  With no jumps the loop is the knot itself.
    """
    chosen = [g.arrow(cid) for cid in jumps]
    if not chosen:
        return g.n
    length = g.circle_length
    heads = {a.over_pos: a for a in chosen}
    start = chosen[0].under_pos
    pos, travelled, used = start, 0, set()
    for _ in range(len(chosen) + 1):
        nxt = min(heads, key=lambda h: (h - pos) % length)
        travelled += (nxt - pos) % length
        a = heads[nxt]
        if a.id in used:
            break
        used.add(a.id)
        pos = a.under_pos
        if pos == start:
            break
    if pos != start or len(used) != len(chosen):
        raise ValueError("the jump set does not form a single loop")
    return travelled // (length // g.n)


@dataclass(frozen=True)
class FrameArrow:
    """A non-triangle arrow seen from a triple crossing.

    Arcs are named by the triangle vertex they start from, so arc ``"l"``
    runs from the lowest strand's preimage forward to the next vertex.
    ``offset`` is the distance of the tail from the start of its arc.
    """

    id: int
    tail_arc: str
    head_arc: str
    marking: int
    writhe: int
    offset: int

    @property
    def arcs(self) -> str:
        return self.tail_arc + self.head_arc


@dataclass(frozen=True)
class TripleEvent:
    event_index: int
    global_type: str  # "+" or "-"
    markings: tuple[int, int]
    sign: int
    triangle: tuple[GaussArrow, GaussArrow, GaussArrow]
    roles: dict  # "h" / "m" / "l" -> pass of that strand at the triple point
    position: int  # letter index of the R3 window
    word: BraidWord  # diagram just before the move
    ids: tuple[int, ...] = field(default=(), repr=False)
    given_arrows: tuple[GaussArrow, ...] | None = field(default=None, repr=False, compare=False)

    @cached_property
    def arrows(self) -> tuple[GaussArrow, ...]:
        """All arrows of the diagram at the move, built on first use."""
        if self.given_arrows is not None:
            return self.given_arrows
        return _arrows(self.word, self.ids)

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def type_key(self) -> tuple[int, int, str]:
        return (self.markings[0], self.markings[1], self.global_type)

    @property
    def third_marking(self) -> int:
        a, b = self.markings
        return a + b - self.n if self.global_type == "+" else a + b

    def role_of(self, cid: int) -> str:
        """Which pair of strands a triangle crossing joins, e.g. ``"lm"``."""
        inv = {p: r for r, p in self.roles.items()}
        c = len(self.word.letters)
        for a in self.triangle:
            if a.id == cid:
                pair = {inv[a.under_pos // c], inv[a.over_pos // c]}
                return "".join(r for r in "lmh" if r in pair)
        raise KeyError(cid)

    def frame(self) -> list[FrameArrow]:
        c = len(self.word.letters)
        length = self.n * c
        vertex = {r: self.roles[r] * c + self.position for r in "lmh"}

        def locate(u: int) -> tuple[str, int]:
            r = min("lmh", key=lambda r: (u - vertex[r]) % length)
            return r, (u - vertex[r]) % length

        tri = {a.id for a in self.triangle}
        out = []
        for a in self.arrows:
            if a.id in tri:
                continue
            tail, off = locate(a.under_pos)
            head, _ = locate(a.over_pos)
            out.append(FrameArrow(a.id, tail, head, a.marking, a.writhe, off))
        out.sort(key=lambda f: f.offset)
        return out

    def reversed_view(self) -> "TripleEvent":
        """The same move with every arrow reversed (all crossings switched).

        Heights invert, so ``h`` and ``l`` trade places; markings become
        ``n - a``; writhes and the coorientation sign are kept.
        """
        n = self.n
        rev = tuple(
            GaussArrow(a.id, a.over_pos, a.under_pos, a.writhe, (n - a.marking) % n)
            for a in self.arrows
        )
        tri_ids = [a.id for a in self.triangle]
        tri = tuple(a for a in rev if a.id in tri_ids)
        lo, mid, hi = self.roles["h"], self.roles["m"], self.roles["l"]
        lm, mh, lh = (mid - lo) % n, (hi - mid) % n, (hi - lo) % n
        return TripleEvent(
            event_index=self.event_index,
            global_type="-" if lm + mh == lh else "+",
            markings=(lm, mh),
            sign=self.sign,
            triangle=tri,
            roles={"h": hi, "m": mid, "l": lo},
            position=self.position,
            word=self.word,
            ids=self.ids,
            given_arrows=rev,
        )

    def to_json(self) -> dict:
        return {
            "event": self.event_index,
            "type": f"({self.markings[0]},{self.markings[1]}){self.global_type}",
            "sign": self.sign,
            "roles": dict(self.roles),
            "triangle": [a.to_json() for a in self.triangle],
        }


def _chord_crossings(arrows: Iterable[GaussArrow]) -> int:
    chords = [tuple(sorted((a.under_pos, a.over_pos))) for a in arrows]
    count = 0
    for (a0, a1), (b0, b1) in combinations(chords, 2):
        if (a0 < b0 < a1) != (a0 < b1 < a1):
            count += 1
    return count


def classify_snapshot(
    before: MarkedDiagram, after: MarkedDiagram, ev: R3, event_index: int = -1
) -> TripleEvent:
    """Classify one R3 move from the diagrams on both sides of it."""
    word = before.word
    n, c, p = word.n, len(word.letters), ev.position
    tri = _window_arrows(word, before.ids, p, 3)
    # the top strand is over in both of its crossings, the bottom one in none
    wins: dict[int, int] = {}
    for a in tri:
        wins[a.over_pos // c] = wins.get(a.over_pos // c, 0) + 1
        wins.setdefault(a.under_pos // c, 0)
    lo, mid, hi = sorted(wins, key=wins.__getitem__)
    if sorted(wins.values()) != [0, 1, 2]:
        raise ValueError(f"event {event_index}: the three strands have no height order")
    lm, mh, lh = (mid - lo) % n, (hi - mid) % n, (hi - lo) % n
    after_tri = _window_arrows(after.word, after.ids, p, 3)
    nb, na = _chord_crossings(tri), _chord_crossings(after_tri)
    if nb == na:
        raise ValueError(f"event {event_index}: the move does not change the triangle")
    return TripleEvent(
        event_index=event_index,
        global_type="-" if lm + mh == lh else "+",
        markings=(lm, mh),
        sign=1 if nb < na else -1,
        triangle=tuple(tri),
        roles={"h": hi, "m": mid, "l": lo},
        position=p,
        word=word,
        ids=before.ids,
    )


def iter_triples(log: EventLog) -> Iterator[TripleEvent]:
    state = log.initial
    for k, ev in enumerate(log.events):
        nxt = apply_event(state, ev)
        if isinstance(ev, R3):
            yield classify_snapshot(state, nxt, ev, k)
        state = nxt


def classify_all(log: EventLog) -> list[TripleEvent]:
    return list(iter_triples(log))


def classify_triple(log: EventLog, event_index: int) -> TripleEvent:
    if not 0 <= event_index < len(log.events):
        raise IndexError(f"event index {event_index} out of range")
    ev = log.events[event_index]
    if not isinstance(ev, R3):
        raise ValueError(f"event {event_index} is {type(ev).__name__}, not R3")
    state = log.initial
    for k in range(event_index):
        state = apply_event(state, log.events[k])
    return classify_snapshot(state, apply_event(state, ev), ev, event_index)
