"""Trace graphs of rotation loops and the character invariants built on their circles.

Every crossing id in an event log sweeps out an arc of the trace graph: it
starts at the seam ``t = 0`` or at an R2 birth and ends at the seam or at an
R2 death, passing straight through the triple points of the R3 moves it
takes part in.  Resolving the triple points keeps these arcs apart, so the
trace circles are the classes of crossing ids under

* the two crossings born (or dying) together in one R2 move, and
* the closing identification of the final diagram with the initial one.

A positive crossing runs forward in ``t`` and a negative one backward.  The
torus class of a circle is ``(phi, t)``: ``t`` counts signed passes through
the seam of the loop parameter and ``phi`` counts signed passes of a
crossing through the cyclic seam of the braid word.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .braid import BraidWord
from .cocycle import (
    ConfigurationFamily,
    FamilyError,
    parse_family,
    selects,
)
from .gauss import TripleEvent, classify_snapshot, markings_at
from .laurent import LaurentPoly
from .loop import (
    CyclicShift,
    EventLog,
    R2Minus,
    R2Plus,
    R3,
    apply_event,
    generate_rot,
)

__all__ = [
    "TraceNode",
    "TraceArc",
    "TraceGraph",
    "TraceCircle",
    "CharacterTable",
    "ESet",
    "Monodromy",
    "build_trace",
    "trace_circles",
    "monodromy",
    "characters0",
    "all_characters0",
    "characters_d",
    "detect_generalized_trihedrons",
    "pos_neg_characters",
    "compare_invariants",
    "find_bijection",
    "to_dot",
    "trace_summary",
]


@dataclass(frozen=True)
class TraceNode:
    event_index: int
    kind: str  # "triple" or "tangency"
    ids: tuple[int, ...]
    sign: int = 0  # coorientation sign of a triple node
    type: str = ""  # "(a,b)+" for a triple node


@dataclass
class TraceArc:
    """The lifetime of one crossing id."""

    id: int
    writhe: int
    marking: int
    start: int | None  # event index of the R2 birth, None at the seam
    end: int | None  # event index of the R2 death, None at the seam
    triples: list[int] = field(default_factory=list)
    stickers: list[int] = field(default_factory=list)
    wraps: list[tuple[int, int]] = field(default_factory=list)  # (event, +-1)
    start_position: int = -1
    end_position: int = -1


@dataclass
class TraceGraph:
    log: EventLog
    nodes: dict[int, TraceNode]
    arcs: dict[int, TraceArc]
    triples: dict[int, TripleEvent]
    born_with: dict[int, int]  # partner in the R2 birth of an id
    dies_with: dict[int, int]  # partner in the R2 death of an id
    seam_in: dict[int, int]  # initial id -> final id it continues from
    seam_out: dict[int, int]  # final id -> initial id

    @property
    def n(self) -> int:
        return self.log.initial.n

    @property
    def triple_nodes(self) -> list[TraceNode]:
        return [v for v in self.nodes.values() if v.kind == "triple"]

    @property
    def tangency_nodes(self) -> list[TraceNode]:
        return [v for v in self.nodes.values() if v.kind == "tangency"]


@dataclass(frozen=True)
class TraceCircle:
    name: str
    marking: int
    torus_class: tuple[int, int]
    members: frozenset[int]  # crossing ids
    ordinal: int = 0

    @property
    def key(self) -> tuple[int, tuple[int, int], int]:
        return (self.marking, self.torus_class, self.ordinal)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "marking": self.marking,
            "torus_class": list(self.torus_class),
            "ordinal": self.ordinal,
            "size": len(self.members),
        }


@dataclass(frozen=True)
class CharacterTable:
    """Character values keyed by ``(type, names)``.

    Values are integers for degree 0 and Laurent polynomials otherwise.
    """

    degree: int
    l: int
    family: str
    entries: dict

    def values(self) -> list:
        return list(self.entries.values())

    def to_json(self) -> dict:
        rows = []
        for (typ, names), value in sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            val = value.to_json() if isinstance(value, LaurentPoly) else value
            rows.append({"type": typ, "names": list(names), "value": val})
        return {"degree": self.degree, "l": self.l, "family": self.family, "entries": rows}


@dataclass(frozen=True)
class ESet:
    members: tuple[int, ...]  # event indices of unpaired triple nodes
    pairing: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Monodromy:
    """What one rotation does to trace circles.

    ``germs[p]`` names the circle through the crossing at position ``p`` at
    the start of the loop.  ``circles`` maps each circle of the ``l``-fold
    loop to the circle found at the same place one rotation later.
    """

    l: int
    germs: tuple[str, ...]
    circles: dict[str, str]

    def is_trivial(self) -> bool:
        return all(a == b for a, b in self.circles.items())

    def power(self, k: int) -> dict[str, str]:
        out = {a: a for a in self.circles}
        for _ in range(k):
            out = {a: self.circles[b] for a, b in out.items()}
        return out

    def to_json(self) -> dict:
        return {"l": self.l, "germs": list(self.germs), "circles": dict(sorted(self.circles.items()))}


# ---------------------------------------------------------------- graph


def build_trace(log: EventLog) -> TraceGraph:
    """Replay ``log`` and record every crossing's lifetime."""
    state = log.initial
    arcs: dict[int, TraceArc] = {}
    markings = markings_at(state.word, range(len(state.word.letters)))
    for p, (cid, g) in enumerate(zip(state.ids, state.word.letters)):
        arcs[cid] = TraceArc(cid, 1 if g > 0 else -1, markings[p], None, None, start_position=p)
        arcs[cid].stickers.append(abs(g))
    nodes: dict[int, TraceNode] = {}
    triples: dict[int, TripleEvent] = {}
    born_with: dict[int, int] = {}
    dies_with: dict[int, int] = {}
    for k, ev in enumerate(log.events):
        nxt = apply_event(state, ev)
        if isinstance(ev, R2Plus):
            marks = markings_at(nxt.word, (ev.position, ev.position + 1))
            for j, cid in enumerate(ev.new_ids):
                g = ev.letters[j]
                arcs[cid] = TraceArc(cid, 1 if g > 0 else -1, marks[j], k, None,
                                     start_position=ev.position + j)
                arcs[cid].stickers.append(abs(g))
            a, b = ev.new_ids
            born_with[a], born_with[b] = b, a
            nodes[k] = TraceNode(k, "tangency", tuple(ev.new_ids))
        elif isinstance(ev, R2Minus):
            a, b = ev.dead_ids
            marks = markings_at(state.word, (ev.position, ev.position + 1))
            for j, cid in enumerate(ev.dead_ids):
                if marks[j] != arcs[cid].marking:
                    raise ValueError(f"marking of crossing {cid} changed along its arc")
                arcs[cid].end = k
                arcs[cid].end_position = ev.position + j
            dies_with[a], dies_with[b] = b, a
            nodes[k] = TraceNode(k, "tangency", tuple(ev.dead_ids))
        elif isinstance(ev, R3):
            t = classify_snapshot(state, nxt, ev, k)
            triples[k] = t
            nodes[k] = TraceNode(k, "triple", tuple(ev.ids), t.sign, f"({t.markings[0]},{t.markings[1]}){t.global_type}")
            for cid, g in zip(ev.ids[::-1], ev.after):
                arcs[cid].triples.append(k)
                arcs[cid].stickers.append(abs(g))
        elif isinstance(ev, CyclicShift) and state.word.letters:
            c = len(state.word.letters)
            shift = ev.k % c
            for p in range(shift):
                arcs[state.ids[p]].wraps.append((k, -1))
        state = nxt
    final_marks = markings_at(state.word, range(len(state.word.letters)))
    for p, cid in enumerate(state.ids):
        if final_marks[p] != arcs[cid].marking:
            raise ValueError(f"marking of crossing {cid} changed along its arc")
        arcs[cid].end_position = p
    seam_out = {f: i for f, i in log.closure.items()} or dict(zip(state.ids, log.initial.ids))
    seam_in = {i: f for f, i in seam_out.items()}
    return TraceGraph(log, nodes, arcs, triples, born_with, dies_with, seam_in, seam_out)


def _traverse(g: TraceGraph, start: int) -> Iterator[tuple[int, int]]:
    """Walk a trace circle along its orientation.

    Yields ``(id, direction)`` for each arc in order; the direction is
    ``+1`` when the arc is run forward in ``t``.
    """
    cid, direction = start, g.arcs[start].writhe
    while True:
        yield cid, direction
        arc = g.arcs[cid]
        if direction > 0:
            if arc.end is None:
                cid = g.seam_out[cid]
            else:
                cid = g.dies_with[cid]
                direction = -1
        else:
            if arc.start is None:
                cid = g.seam_in[cid]
            else:
                cid = g.born_with[cid]
                direction = 1
        if cid == start:
            return


def _arc_winding(g: TraceGraph, cid: int, direction: int) -> tuple[int, int]:
    arc = g.arcs[cid]
    phi = sum(s for _, s in arc.wraps) * direction
    t = 0
    if direction > 0 and arc.end is None:
        t = 1
    if direction < 0 and arc.start is None:
        t = -1
    return phi, t


def trace_circles(g: TraceGraph) -> list[TraceCircle]:
    """Resolve the trace graph into named circles.

    Names are ``x<marking>_<ordinal>``, ordered by torus class and then by
    first appearance (initial crossings by position, then by birth).
    """
    seen: set[int] = set()
    raw = []
    order = {cid: (-1, arc.start_position) if arc.start is None else (arc.start, arc.start_position)
             for cid, arc in g.arcs.items()}
    for cid in sorted(g.arcs, key=order.__getitem__):
        if cid in seen:
            continue
        members, phi, t = [], 0, 0
        for aid, direction in _traverse(g, cid):
            members.append(aid)
            dp, dt = _arc_winding(g, aid, direction)
            phi, t = phi + dp, t + dt
        seen.update(members)
        marks = {g.arcs[a].marking for a in members}
        if len(marks) != 1:
            raise ValueError(f"trace circle through {cid} carries markings {sorted(marks)}")
        raw.append((marks.pop(), (phi, t), order[cid], frozenset(members)))
    raw.sort(key=lambda r: (r[0], r[1], r[2]))
    out, counter = [], Counter()
    for marking, cls, _, members in raw:
        counter[marking] += 1
        out.append(TraceCircle(f"x{marking}_{counter[marking]}", marking, cls, members, counter[marking]))
    return out


def _name_of(circles: Iterable[TraceCircle]) -> dict[int, str]:
    return {cid: c.name for c in circles for cid in c.members}


# ------------------------------------------------------------- monodromy


def monodromy(w: BraidWord, l: int = 1) -> Monodromy:
    """Action of one rotation on the trace circles of the ``l``-fold loop.

    Every rotation replays the same moves, so the diagrams at equal stages
    of consecutive rotations agree letter by letter.  A crossing germ at
    stage ``j`` of rotation ``r`` is sent to the germ at the same position
    and stage of rotation ``r + 1`` (cyclically).
    """
    per_rot = len(generate_rot(w, 1).events)
    log = generate_rot(w, l)
    name = _name_of(trace_circles(build_trace(log)))
    stages: list[tuple[int, ...]] = []
    state = log.initial
    for ev in log.events:
        stages.append(state.ids)
        state = apply_event(state, ev)
    mapping: dict[str, str] = {}
    for r in range(l):
        nxt = (r + 1) % l
        for j in range(per_rot):
            for a, b in zip(stages[r * per_rot + j], stages[nxt * per_rot + j]):
                if mapping.setdefault(name[a], name[b]) != name[b]:
                    raise ValueError("the rotation does not act on trace circles")
    return Monodromy(l, tuple(name[a] for a in log.initial.ids), mapping)


# ------------------------------------------------------------ characters


def _triangle_names(t: TripleEvent, name: dict[int, str]) -> tuple[str, str, str]:
    by_role = {t.role_of(a.id): name[a.id] for a in t.triangle}
    return (by_role["lm"], by_role["mh"], by_role["lh"])


def _type_str(key: tuple[int, int, str]) -> str:
    return f"({key[0]},{key[1]}){key[2]}"


def _triples(g: TraceGraph) -> list[TripleEvent]:
    return [g.triples[k] for k in sorted(g.triples)]


def characters0(g: TraceGraph, circles: list[TraceCircle], a: int, b: int, type: str) -> CharacterTable:
    """Signed counts of triple nodes of type ``(a,b)type`` per name triple.

    Names are listed as (crossing ``lm``, crossing ``mh``, crossing ``lh``),
    whose markings are ``a``, ``b`` and the third marking of the type.
    """
    name = _name_of(circles)
    key = (a, b, type)
    entries: dict = defaultdict(int)
    for t in _triples(g):
        if t.type_key == key:
            entries[(_type_str(key), _triangle_names(t, name))] += t.sign
    return CharacterTable(0, g.log.l, f"deg0:{_type_str(key)}", {k: v for k, v in entries.items() if v})


def all_characters0(g: TraceGraph, circles: list[TraceCircle]) -> CharacterTable:
    """Degree-0 characters of every triple type at once."""
    name = _name_of(circles)
    entries: dict = defaultdict(int)
    for t in _triples(g):
        entries[(_type_str(t.type_key), _triangle_names(t, name))] += t.sign
    return CharacterTable(0, g.log.l, "deg0:all", {k: v for k, v in entries.items() if v})


def _slot_markings(family: ConfigurationFamily, n: int) -> list[int]:
    third, two = n // 3, 2 * n // 3
    if family.kind == "deg1-nm2":
        return [1]
    first, second = (two, third) if family.kind == "degd-h" else (third, two)
    marks = [first if k % 2 == 0 else second for k in range(family.d)]
    if family.kind == "degd-l" and family.d % 2:
        marks[-1] = third
    return marks


def _named_exponent(view: TripleEvent, family: ConfigurationFamily, slot_names: tuple[str, ...],
                    name: dict[int, str]) -> int:
    """Exponent of ``view`` counting only configurations with the given names."""
    n = view.n
    frame = view.frame()
    third, two = n // 3, 2 * n // 3
    if family.kind == "deg1-nm2":
        weights = {("lm", 1): 1, ("mh", 1): -1}
        return sum(weights[(f.arcs, f.marking)] * f.writhe for f in frame
                   if (f.arcs, f.marking) in weights and name[f.id] == slot_names[0])

    def slotted(d: int, first: str, second: str, allowed: dict[str, int]):
        # chains whose k-th arrow lies on the circle of slot k
        count = [1] + [0] * d
        total = [1] + [0] * d
        for f in frame:
            if allowed.get(f.arcs) != f.marking:
                continue
            for k in range(d - 1, -1, -1):
                want = first if k % 2 == 0 else second
                if f.arcs == want and count[k] and name[f.id] == slot_names[k]:
                    count[k + 1] += count[k]
                    total[k + 1] += total[k] * f.writhe
        return total[d]

    if family.kind == "degd-h":
        return slotted(family.d, "hl", "lh", {"hl": two, "lh": third})
    allowed = {"ml": third, "lm": two}
    total = slotted(family.d, "ml", "lm", allowed)
    if family.d % 2:
        sub = slotted(family.d - 1, "ml", "lm", allowed)
        for f in frame:
            if f.arcs == "lh" and f.marking == third and name[f.id] == slot_names[-1]:
                total -= f.writhe * sub
    return total


def characters_d(
    g: TraceGraph,
    circles: list[TraceCircle],
    family: ConfigurationFamily | str,
) -> CharacterTable:
    """Named refinements of a higher-degree cocycle.

    For each choice of names for the triangle and for the non-triangle slots
    of the configuration, the entry sums ``sign * x**e`` over the triple
    nodes with that triangle, where ``e`` counts only configurations whose
    arrows lie on the chosen circles.  Entries that vanish are dropped.
    """
    n = g.n
    if isinstance(family, str):
        family = parse_family(family, n)
    family.check(n)
    if family.kind == "deg0":
        raise FamilyError("use characters0 for degree 0")
    name = _name_of(circles)
    marks = _slot_markings(family, n)
    if family.mirror:
        marks = [(n - m) % n for m in marks]
    by_marking = defaultdict(list)
    for c in circles:
        by_marking[c.marking].append(c.name)
    choices = list(itertools.product(*[by_marking[m] for m in marks]))
    typ = _type_str(family.triple_type(n))
    entries: dict = defaultdict(dict)
    for t in _triples(g):
        view = selects(t, family)
        if view is None:
            continue
        tri = _triangle_names(t, name)
        for slot_names in choices:
            # a mirrored family reads the reversed view, whose frame carries the
            # same ids, so names transfer unchanged
            e = _named_exponent(view, family, slot_names, name)
            bucket = entries[(typ, tri + slot_names)]
            bucket[e] = bucket.get(e, 0) + t.sign
    table = {k: LaurentPoly(v) for k, v in entries.items()}
    return CharacterTable(family.d, g.log.l, str(family), {k: v for k, v in table.items() if v})


# -------------------------------------------------------------- trihedra


def _stations(g: TraceGraph, circle: TraceCircle) -> tuple[dict[tuple[int, int], tuple[int, int]], tuple[int, int]]:
    """Cumulative torus winding at each triple station of a circle.

    Keys are ``(event index, crossing id)``; the second value is the torus
    class of the whole circle.
    """
    phi = t = 0
    where = {}
    for cid, direction in _traverse(g, min(circle.members)):
        arc = g.arcs[cid]
        marks = [(k, 0) for k in arc.triples] + list(arc.wraps)
        marks.sort(key=lambda m: m[0], reverse=direction < 0)
        for k, step in marks:
            if step == 0:
                where[(k, cid)] = (phi, t)
            else:
                phi += step * direction
        t += _arc_winding(g, cid, direction)[1]
    return where, (phi, t)


def _theta_compatible(g: TraceGraph, u: int, v: int, circle_of: dict, info: dict) -> bool:
    """Whether three edge paths along trace circles join ``u`` to ``v``
    with one common torus winding."""

    def paths(cu: int, cv: int) -> set[tuple[int, int]]:
        c = circle_of[cu]
        if circle_of[cv] is not c:
            return set()
        where, total = info[c.name]
        pu, pv = where[(u, cu)], where[(v, cv)]
        d = (pv[0] - pu[0], pv[1] - pu[1])
        # the two simple paths differ by the whole circle
        return {d, (d[0] - total[0], d[1] - total[1]), (d[0] + total[0], d[1] + total[1])}

    ids_u = g.nodes[u].ids
    for perm in itertools.permutations(g.nodes[v].ids):
        options = [paths(a, b) for a, b in zip(ids_u, perm)]
        if all(options) and set.intersection(*options):
            return True
    return False


def detect_generalized_trihedrons(g: TraceGraph, circles: list[TraceCircle] | None = None) -> ESet:
    """Pair off triple nodes that bound generalized trihedra.

    A positive and a negative triple node of the same type can bound a
    generalized trihedron when their branches can be joined along common
    trace circles by three paths of equal torus winding, so that the theta
    graph they span is null-homologous.  Other triple points may sit on the
    paths.  E is what a maximum matching of such pairs leaves over; taking a
    maximum rather than a greedy matching keeps ``card(E)`` independent of
    the order in which the nodes are visited.
    """
    circles = circles if circles is not None else trace_circles(g)
    circle_of = {cid: c for c in circles for cid in c.members}
    info = {c.name: _stations(g, c) for c in circles}
    pos = [k for k in sorted(g.triples) if g.triples[k].sign > 0]
    neg = [k for k in sorted(g.triples) if g.triples[k].sign < 0]
    rows, cols = [], []
    for i, u in enumerate(pos):
        for j, v in enumerate(neg):
            if g.triples[u].type_key == g.triples[v].type_key and _theta_compatible(g, u, v, circle_of, info):
                rows.append(i)
                cols.append(j)
    pairs: list[tuple[int, int]] = []
    if rows:
        graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(pos), len(neg)))
        match = maximum_bipartite_matching(graph, perm_type="column")
        pairs = [tuple(sorted((pos[i], neg[j]))) for i, j in enumerate(match) if j >= 0]
    paired = {k for p in pairs for k in p}
    return ESet(tuple(k for k in sorted(g.triples) if k not in paired), tuple(sorted(pairs)))


def pos_neg_characters(
    g: TraceGraph, e: ESet, circles: list[TraceCircle], a: int, b: int, type: str
) -> tuple[CharacterTable, CharacterTable]:
    """Unsigned counts of positive and of negative triple nodes in ``E``."""
    name = _name_of(circles)
    key = (a, b, type)
    pos: dict = defaultdict(int)
    neg: dict = defaultdict(int)
    for k in e.members:
        t = g.triples[k]
        if t.type_key == key:
            target = pos if t.sign > 0 else neg
            target[(_type_str(key), _triangle_names(t, name))] += 1
    fam = f"deg0:{_type_str(key)}"
    return CharacterTable(0, g.log.l, fam + ":pos", dict(pos)), CharacterTable(0, g.log.l, fam + ":neg", dict(neg))


# ------------------------------------------------------------ comparison


def _value_key(v) -> str:
    return str(v)


def _signatures(tables: list[CharacterTable], circles: list[TraceCircle], rounds: int = 3) -> dict[str, tuple]:
    """Colour refinement of names by the entries they occur in."""
    colour = {c.name: (c.marking, c.torus_class) for c in circles}
    for _ in range(rounds):
        seen = defaultdict(list)
        for ti, tab in enumerate(tables):
            for (typ, names), value in tab.entries.items():
                for slot, nm in enumerate(names):
                    others = tuple(colour[o] for o in names)
                    seen[nm].append((ti, typ, slot, _value_key(value), others))
        new = {nm: (colour[nm], tuple(sorted(seen[nm]))) for nm in colour}
        if len(set(new.values())) == len(set(colour.values())):
            colour = new
            break
        colour = new
    return colour


def find_bijection(
    A: list[CharacterTable],
    B: list[CharacterTable],
    circlesA: list[TraceCircle],
    circlesB: list[TraceCircle],
) -> dict[str, str] | None:
    """A name bijection carrying every table of ``A`` onto the matching one of ``B``."""
    if len(A) != len(B) or len(circlesA) != len(circlesB):
        return None
    for ta, tb in zip(A, B):
        if (ta.degree, ta.l, ta.family) != (tb.degree, tb.l, tb.family):
            raise ValueError("tables were computed with different parameters")
        if sorted(map(_value_key, ta.entries.values())) != sorted(map(_value_key, tb.entries.values())):
            return None
    sa, sb = _signatures(A, circlesA), _signatures(B, circlesB)
    if sorted(map(repr, sa.values())) != sorted(map(repr, sb.values())):
        return None
    names_a = sorted(sa, key=lambda nm: (repr(sa[nm]), nm))
    candidates = {nm: [m for m in sb if repr(sb[m]) == repr(sa[nm])] for nm in names_a}
    names_a.sort(key=lambda nm: len(candidates[nm]))
    # entries of A indexed by the last of their names to be assigned
    rank = {nm: i for i, nm in enumerate(names_a)}
    checks = defaultdict(list)
    for ti, tab in enumerate(A):
        for (typ, names), value in tab.entries.items():
            checks[max(rank[x] for x in names)].append((ti, typ, names, value))
    lookup = [tab.entries for tab in B]
    sigma: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(names_a):
            return True
        nm = names_a[i]
        for m in candidates[nm]:
            if m in used:
                continue
            sigma[nm] = m
            used.add(m)
            ok = all(
                lookup[ti].get((typ, tuple(sigma[x] for x in names))) == value
                for ti, typ, names, value in checks[i]
            )
            if ok and extend(i + 1):
                return True
            used.discard(m)
            del sigma[nm]
        return False

    # entry counts agree, so matching every entry of A hits every entry of B
    if all(len(ta.entries) == len(tb.entries) for ta, tb in zip(A, B)) and extend(0):
        return dict(sigma)
    return None


def compare_invariants(
    A: list[CharacterTable] | CharacterTable,
    B: list[CharacterTable] | CharacterTable,
    circlesA: list[TraceCircle],
    circlesB: list[TraceCircle],
) -> bool:
    """True iff a name bijection preserving marking and torus class maps A onto B."""
    if isinstance(A, CharacterTable):
        A = [A]
    if isinstance(B, CharacterTable):
        B = [B]
    return find_bijection(list(A), list(B), circlesA, circlesB) is not None


# --------------------------------------------------------------- export


def to_dot(g: TraceGraph, circles: list[TraceCircle] | None = None) -> str:
    """Graphviz rendering: nodes are R2/R3 events, edges are crossing arcs."""
    circles = circles if circles is not None else trace_circles(g)
    name = _name_of(circles)
    lines = ["digraph trace {", '  node [shape=circle, fontsize=10];', '  seam0 [label="t=0", shape=box];',
             '  seam1 [label="t=1", shape=box];']
    for k in sorted(g.nodes):
        v = g.nodes[k]
        if v.kind == "triple":
            label = f"{v.type}{'+' if v.sign > 0 else '-'}"
            lines.append(f'  e{k} [label="{k}\\n{label}", shape=triangle];')
        else:
            lines.append(f'  e{k} [label="{k}", shape=point];')
    for cid in sorted(g.arcs):
        arc = g.arcs[cid]
        stops = (["seam0"] if arc.start is None else [f"e{arc.start}"]) + [f"e{k}" for k in arc.triples]
        stops.append("seam1" if arc.end is None else f"e{arc.end}")
        if arc.writhe < 0:
            stops = stops[::-1]
        sticker = "/".join(map(str, arc.stickers))
        for s, t in zip(stops, stops[1:]):
            lines.append(f'  {s} -> {t} [label="{name[cid]} s{sticker}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_summary(g: TraceGraph, circles: list[TraceCircle] | None = None) -> dict:
    circles = circles if circles is not None else trace_circles(g)
    census = Counter((v.type, v.sign) for v in g.triple_nodes)
    return {
        "l": g.log.l,
        "n": g.n,
        "triple_nodes": len(g.triple_nodes),
        "tangency_nodes": len(g.tangency_nodes),
        "circles": [c.to_json() for c in circles],
        "markings": sorted({c.marking for c in circles}),
        "census": [{"type": t, "sign": s, "count": k} for (t, s), k in sorted(census.items())],
        "torus_class_convention": "(phi, t) on the l-fold cover of the loop parameter",
    }
