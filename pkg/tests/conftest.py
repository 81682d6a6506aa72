"""Shared helpers: random braid strategies and the acceptance report."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from braidcocycles import BraidWord, is_knot

# criterion label -> (passed, detail); filled by tests/test_acceptance.py
CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(label: str, passed: bool, detail: str = "") -> bool:
        CRITERIA[label] = (bool(passed), detail)
        print(f"{'PASS' if passed else 'FAIL'} {label} {detail}".rstrip())
        return bool(passed)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(CRITERIA, key=_label_key):
        passed, detail = CRITERIA[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {label} {detail}".rstrip())


def _label_key(label: str):
    head = label.split()[1] if label.startswith("criterion") else label
    digits = "".join(ch for ch in head if ch.isdigit())
    return (int(digits) if digits else 99, label)


def random_knot(rng: random.Random, n: int, max_len: int = 20, min_len: int | None = None) -> BraidWord:
    """A random braid word on ``n`` strands whose closure is a knot."""
    lo = n - 1 if min_len is None else min_len
    while True:
        c = rng.randint(lo, max(lo, max_len))
        w = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(c)))
        if is_knot(w):
            return w


@st.composite
def knot_words(draw, n_min: int = 2, n_max: int = 5, max_len: int = 10):
    """Hypothesis strategy for braid words with knotted closure."""
    n = draw(st.integers(n_min, n_max))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_knot(random.Random(seed), n, max_len)
