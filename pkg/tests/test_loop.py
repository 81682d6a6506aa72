import json
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcocycles import BraidWord, EventLog, ReplayError, generate_rot, replay, snapshot_at
from braidcocycles.loop import R3, CyclicShift, R2Plus, apply_event, r3_is_valid, r3_rewrite

from conftest import knot_words


def test_r3_relation_table():
    assert r3_is_valid((1, 2, 1)) and r3_is_valid((-2, -1, -2)) and r3_is_valid((1, 2, -1))
    assert not r3_is_valid((1, -2, 1)) and not r3_is_valid((1, 3, 1))
    for t in [(1, 2, 1), (1, 2, -1), (-1, 2, 1), (2, -1, -2)]:
        assert r3_rewrite(r3_rewrite(t)) == t


def test_rejects_non_knots_and_bad_multiples():
    with pytest.raises(ValueError):
        generate_rot(BraidWord(3, (1, -1, 2, -2)))
    with pytest.raises(ValueError):
        generate_rot(BraidWord(3, (1, 2)), 0)


def test_example_loop_sizes():
    log = generate_rot(BraidWord(3, (1, -2, 1, 2, 1, 1, 2, 1)))
    assert log.r3_count() == 2 * 8 * 1
    assert generate_rot(BraidWord(2, (1, 1, 1))).r3_count() == 0


@settings(max_examples=40, deadline=None)
@given(knot_words(n_max=6), st.integers(1, 2))
def test_r3_count_and_replay(w, l):
    log = generate_rot(w, l)
    assert log.r3_count() == 2 * len(w.letters) * (w.n - 2) * l
    states = replay(log)
    assert states[-1].word == w
    assert sorted(log.closure) == sorted(states[-1].ids)
    assert sorted(log.closure.values()) == sorted(w_ids for w_ids in log.initial.ids)


@settings(max_examples=20, deadline=None)
@given(knot_words(n_max=5))
def test_log_json_round_trip(w):
    log = generate_rot(w)
    again = EventLog.from_json(json.loads(json.dumps(log.to_json())))
    assert again == log and again.closure == log.closure


def test_tampered_logs_are_rejected():
    log = generate_rot(BraidWord(3, (1, 2, -1, 2)))
    k = log.r3_indices()[0]
    ev = log.events[k]
    bad = replace(log, events=log.events[:k] + (replace(ev, position=ev.position + 1),) + log.events[k + 1:])
    with pytest.raises(ReplayError) as info:
        replay(bad)
    assert info.value.event_index == k
    short = replace(log, events=log.events[:-1])
    with pytest.raises(ReplayError):
        replay(short)


def test_apply_event_checks_birth_letters():
    state = generate_rot(BraidWord(3, (1, 2))).initial
    with pytest.raises(ReplayError):
        apply_event(state, R2Plus(0, (90, 91), (3, -3)))
    with pytest.raises(ReplayError):
        apply_event(state, R2Plus(0, (90, 91), (1, 1)))
    shifted = apply_event(state, CyclicShift(1))
    assert shifted.word.letters == (2, 1) and shifted.phase == 1


def test_snapshot_flags_the_moving_crossings():
    log = generate_rot(BraidWord(3, (1, 2, -1, 2)))
    k = log.r3_indices()[2]
    snap = snapshot_at(log, k)
    assert snap.flagged == log.events[k].ids
    with pytest.raises(ValueError):
        snapshot_at(log, next(i for i, ev in enumerate(log.events) if not isinstance(ev, R3)))
