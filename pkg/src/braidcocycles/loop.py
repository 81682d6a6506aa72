"""The canonical rotation loop as a replayable log of elementary moves.

A half rotation pushes the Garside element through the braid:

    g -> D D^-1 g -> D^-1 g D -> ... -> D^-1 D g' -> g'

and a full rotation is two half rotations.  Every crossing carries an integer
id that survives every move except an R2 death, so the
downstream trace graph can follow it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .braid import BraidWord, delta_word, is_knot

__all__ = [
    "MarkedDiagram",
    "R2Plus",
    "R2Minus",
    "R3",
    "DistantExchange",
    "CyclicShift",
    "Event",
    "EventLog",
    "ReplayError",
    "apply_event",
    "generate_rot",
    "replay",
    "iter_replay",
    "snapshot_at",
    "r3_is_valid",
]


class ReplayError(ValueError):
    """An event does not apply to the diagram it is replayed on."""

    def __init__(self, message: str, event_index: int | None = None):
        super().__init__(message if event_index is None else f"event {event_index}: {message}")
        self.event_index = event_index


@dataclass(frozen=True)
class MarkedDiagram:
    word: BraidWord
    ids: tuple[int, ...]
    phase: int = 0
    flagged: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ids", tuple(self.ids))
        if len(self.ids) != len(self.word.letters):
            raise ValueError("one crossing id per letter is required")
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("crossing ids must be distinct")

    @classmethod
    def from_word(cls, word: BraidWord) -> "MarkedDiagram":
        return cls(word, tuple(range(len(word.letters))))

    @property
    def n(self) -> int:
        return self.word.n

    def to_json(self) -> dict:
        out = {"word": self.word.to_json(), "ids": list(self.ids), "phase": self.phase}
        if self.flagged:
            out["flagged"] = list(self.flagged)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MarkedDiagram":
        return cls(
            BraidWord.from_json(data["word"]),
            tuple(data["ids"]),
            int(data.get("phase", 0)),
            tuple(data.get("flagged", ())),
        )


@dataclass(frozen=True)
class R2Plus:
    position: int
    new_ids: tuple[int, int]
    letters: tuple[int, int]


@dataclass(frozen=True)
class R2Minus:
    position: int
    dead_ids: tuple[int, int]


@dataclass(frozen=True)
class R3:
    position: int
    ids: tuple[int, int, int]
    before: tuple[int, int, int]
    after: tuple[int, int, int]


@dataclass(frozen=True)
class DistantExchange:
    position: int


@dataclass(frozen=True)
class CyclicShift:
    """Move the first ``k`` letters to the end of the word."""

    k: int


Event = Union[R2Plus, R2Minus, R3, DistantExchange, CyclicShift]

_KINDS = {cls.__name__: cls for cls in (R2Plus, R2Minus, R3, DistantExchange, CyclicShift)}


def event_to_json(ev: Event) -> dict:
    out: dict = {"kind": type(ev).__name__}
    for name in ev.__dataclass_fields__:
        value = getattr(ev, name)
        out[name] = list(value) if isinstance(value, tuple) else value
    return out


def event_from_json(data: dict) -> Event:
    cls = _KINDS[data["kind"]]
    kwargs = {
        k: tuple(v) if isinstance(v, list) else v for k, v in data.items() if k != "kind"
    }
    return cls(**kwargs)


def _sgn(g: int) -> int:
    return 1 if g > 0 else -1


def r3_is_valid(triple: tuple[int, int, int]) -> bool:
    """Whether a letter triple is one side of a braid relation.

    The outer letters share a generator adjacent to the middle one.  The sign
    patterns ``+-+`` and ``-+-`` are excluded: there the three strands have a
    cyclic height order and no triangle move exists.
    """
    a, b, c = triple
    if abs(a) != abs(c) or abs(abs(a) - abs(b)) != 1:
        return False
    signs = (_sgn(a), _sgn(b), _sgn(c))
    return signs not in ((1, -1, 1), (-1, 1, -1))


def r3_rewrite(triple: tuple[int, int, int]) -> tuple[int, int, int]:
    a, b, c = triple
    return (_sgn(c) * abs(b), _sgn(b) * abs(a), _sgn(a) * abs(b))


def apply_event(d: MarkedDiagram, ev: Event, next_id: int | None = None) -> MarkedDiagram:
    """Apply one event, checking its preconditions."""
    w = list(d.word.letters)
    ids = list(d.ids)
    phase = d.phase
    if isinstance(ev, R2Plus):
        g, h = ev.letters
        if g != -h or not 0 < abs(g) < d.word.n or not 0 <= ev.position <= len(w):
            raise ReplayError(f"bad R2 birth {ev}")
        if set(ev.new_ids) & set(ids) or ev.new_ids[0] == ev.new_ids[1]:
            raise ReplayError(f"R2 birth reuses a live id {ev.new_ids}")
        w[ev.position : ev.position] = [g, h]
        ids[ev.position : ev.position] = list(ev.new_ids)
    elif isinstance(ev, R2Minus):
        p = ev.position
        if not 0 <= p < len(w) - 1 or w[p] != -w[p + 1]:
            raise ReplayError(f"no cancelling pair at {p}")
        if (ids[p], ids[p + 1]) != tuple(ev.dead_ids):
            raise ReplayError(f"R2 death ids {ev.dead_ids} do not match {ids[p:p + 2]}")
        del w[p : p + 2]
        del ids[p : p + 2]
    elif isinstance(ev, R3):
        p = ev.position
        triple = tuple(w[p : p + 3])
        if len(triple) != 3 or triple != tuple(ev.before) or not r3_is_valid(triple):
            raise ReplayError(f"no braid relation {ev.before} at {p}")
        if tuple(ids[p : p + 3]) != tuple(ev.ids) or r3_rewrite(triple) != tuple(ev.after):
            raise ReplayError(f"inconsistent R3 record {ev}")
        w[p : p + 3] = list(ev.after)
        ids[p : p + 3] = ids[p : p + 3][::-1]
    elif isinstance(ev, DistantExchange):
        p = ev.position
        if not 0 <= p < len(w) - 1 or abs(abs(w[p]) - abs(w[p + 1])) < 2:
            raise ReplayError(f"letters at {p} do not commute")
        w[p], w[p + 1] = w[p + 1], w[p]
        ids[p], ids[p + 1] = ids[p + 1], ids[p]
    elif isinstance(ev, CyclicShift):
        if w:
            k = ev.k % len(w)
            w = w[k:] + w[:k]
            ids = ids[k:] + ids[:k]
        phase += ev.k
    else:
        raise ReplayError(f"unknown event {ev!r}")
    return MarkedDiagram(BraidWord._trusted(d.word.n, tuple(w)), tuple(ids), phase)


@dataclass(frozen=True)
class EventLog:
    initial: MarkedDiagram
    events: tuple[Event, ...]
    l: int = 1
    # final id -> initial id, pairing the end of the loop with its start
    closure: dict[int, int] = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.events)

    def r3_indices(self) -> list[int]:
        return [k for k, ev in enumerate(self.events) if isinstance(ev, R3)]

    def r3_count(self) -> int:
        return sum(isinstance(ev, R3) for ev in self.events)

    def to_json(self) -> dict:
        return {
            "initial": self.initial.to_json(),
            "l": self.l,
            "events": [event_to_json(ev) for ev in self.events],
            "closure": [[a, b] for a, b in sorted(self.closure.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EventLog":
        return cls(
            MarkedDiagram.from_json(data["initial"]),
            tuple(event_from_json(e) for e in data["events"]),
            int(data.get("l", 1)),
            {int(a): int(b) for a, b in data.get("closure", [])},
        )


class _Builder:
    """Mutable word plus event recorder used while generating a loop."""

    def __init__(self, d: MarkedDiagram):
        self.n = d.n
        self.w = list(d.word.letters)
        self.ids = list(d.ids)
        self.events: list[Event] = []
        self.next_id = max(self.ids, default=-1) + 1

    def r2plus(self, p: int, g: int) -> None:
        new = (self.next_id, self.next_id + 1)
        self.next_id += 2
        self.w[p:p] = [g, -g]
        self.ids[p:p] = list(new)
        self.events.append(R2Plus(p, new, (g, -g)))

    def r2minus(self, p: int) -> None:
        assert self.w[p] == -self.w[p + 1]
        self.events.append(R2Minus(p, (self.ids[p], self.ids[p + 1])))
        del self.w[p : p + 2]
        del self.ids[p : p + 2]

    def r3(self, p: int) -> None:
        before = tuple(self.w[p : p + 3])
        assert r3_is_valid(before), before
        after = r3_rewrite(before)
        self.events.append(R3(p, tuple(self.ids[p : p + 3]), before, after))
        self.w[p : p + 3] = list(after)
        self.ids[p : p + 3] = self.ids[p : p + 3][::-1]

    def exchange(self, p: int) -> None:
        assert abs(abs(self.w[p]) - abs(self.w[p + 1])) >= 2
        self.events.append(DistantExchange(p))
        self.w[p], self.w[p + 1] = self.w[p + 1], self.w[p]
        self.ids[p], self.ids[p + 1] = self.ids[p + 1], self.ids[p]

    def shift(self, k: int) -> None:
        self.events.append(CyclicShift(k))
        self.w = self.w[k:] + self.w[:k]
        self.ids = self.ids[k:] + self.ids[:k]

    def rewrite(self, start: int, target: list[int]) -> None:
        """Turn the segment at ``start`` into ``target`` by distant exchanges."""
        for idx, g in enumerate(target):
            seg = self.w[start : start + len(target)]
            p = seg.index(g, idx)
            for q in range(p - 1, idx - 1, -1):
                self.exchange(start + q)

    def push(self, pos: int, j: int, e: int, m: int) -> None:
        """Move letter ``e*j`` at ``pos`` right through the Garside word D_m.

        Before: ``s_j^e D_m`` at ``pos``.  After: ``D_m s_{m-j}^e``.
        """
        if m == 2:
            if e < 0:
                self.r2minus(pos)
                self.r2plus(pos, 1)
            return
        if j >= 2:
            for t in range(j - 2):
                self.exchange(pos + t)
            self.r3(pos + j - 2)
            for t in range(m - 1 - j):
                self.exchange(pos + j + t)
            self.push(pos + m - 1, j - 1, e, m - 1)
            return
        # j == 1: D_m = D_{m-1} d' with d' = s_{m-1} .. s_1
        length = m * (m - 1) // 2
        standard = list(delta_word(m).letters)
        inner = list(delta_word(m - 1).letters)
        self.rewrite(pos + 1, inner + list(range(m - 1, 0, -1)))
        self.push(pos, 1, e, m - 1)
        q = pos + len(inner)
        self.r3(q)
        for t in range(m - 3):
            self.exchange(q + 2 + t)
        self.rewrite(pos, standard)
        assert self.w[pos + length] == e * (m - 1)

    def half_pass(self) -> None:
        big = list(delta_word(self.n).letters)
        size = len(big)
        c = len(self.w)
        # g -> D D^-1 g, pairs nested from the outside in
        for k, g in enumerate(big):
            self.r2plus(k, g)
        # D D^-1 g -> D^-1 g D
        self.shift(size)
        # D^-1 g D -> D^-1 D g'
        for t in range(c - 1, -1, -1):
            pos = size + t
            g = self.w[pos]
            self.push(pos, abs(g), _sgn(g), self.n)
        # D^-1 D g' -> g', innermost pair first
        for k in range(size):
            self.r2minus(size - 1 - k)


def generate_rot(d: MarkedDiagram | BraidWord, l: int = 1) -> EventLog:
    """Event log of ``l`` full rotations of the closed braid."""
    if isinstance(d, BraidWord):
        d = MarkedDiagram.from_word(d)
    if l < 1:
        raise ValueError("the rotation multiple l must be at least 1")
    if not is_knot(d.word):
        raise ValueError("the closure is not a knot")
    b = _Builder(d)
    for _ in range(2 * l):
        b.half_pass()
    if b.w != list(d.word.letters):
        raise ReplayError("rotation loop did not return to the initial word")
    closure = dict(zip(b.ids, d.ids))
    return EventLog(MarkedDiagram(d.word, d.ids), tuple(b.events), l, closure)


def iter_replay(log: EventLog) -> Iterator[MarkedDiagram]:
    state = log.initial
    yield state
    for k, ev in enumerate(log.events):
        try:
            state = apply_event(state, ev)
        except ReplayError as exc:
            raise ReplayError(str(exc), k) from None
        yield state


def replay(log: EventLog) -> list[MarkedDiagram]:
    """All diagram states: the initial one, then one after each event."""
    states = list(iter_replay(log))
    if log.events and states[-1].word != log.initial.word:
        raise ReplayError("replay does not close up", len(log.events) - 1)
    return states


def snapshot_at(log: EventLog, event_index: int) -> MarkedDiagram:
    """The diagram just before an R3 event, with its three ids flagged."""
    if not 0 <= event_index < len(log.events):
        raise IndexError(f"event index {event_index} out of range")
    ev = log.events[event_index]
    if not isinstance(ev, R3):
        raise ValueError(f"event {event_index} is {type(ev).__name__}, not R3")
    state = log.initial
    for k in range(event_index):
        state = apply_event(state, log.events[k])
    return MarkedDiagram(state.word, state.ids, state.phase, tuple(ev.ids))
