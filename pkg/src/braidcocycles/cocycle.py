"""One-cocycle polynomials evaluated on rotation loops.

Each cocycle sums ``sign(s) * x**e(s)`` over the triple crossings ``s`` of a
fixed marked type, where the exponent ``e(s)`` is a signed count of arrow
configurations in the Gauss diagram of ``s``.

Configurations used here, in terms of the arcs of the knot circle cut at the
three triangle vertices (arc ``"l"`` starts at the lowest strand):

* ``I_l`` (bunch): ``d`` arrows that separate ``l`` from ``m`` and ``h``,
  i.e. run between arcs ``m`` and ``l``.  Ordered by their position along
  the arc, they alternate in direction, the first one pointing from arc
  ``m`` into arc ``l``.  Markings are ``n/3`` (``m -> l``) and ``2n/3``.
* ``I_h`` (bunch): the same around ``h`` (arcs ``l`` and ``h``), the first
  arrow pointing from arc ``h`` into arc ``l``.
* odd ``I_l``: the alternating ``l``-chain of length ``d`` with weight
  ``+1``, plus a chain of length ``d-1`` together with one arrow of marking
  ``n/3`` from arc ``l`` to arc ``h`` with weight ``-1``.  For ``d = 1`` this
  is a single wandering arrow.
* ``Gamma^1_(n-2,1)-``: weight ``+1`` on a marking-1 arrow from arc ``l``
  to arc ``m`` and ``-1`` on a marking-1 arrow from arc ``m`` to arc ``h``.

Triples with no matching configuration contribute ``sign * x**0``, as the
defining sum prescribes.  ``count_unmatched=False`` drops them instead; that
reproduces hand calculations that skip such triples but is not invariant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .braid import BraidWord
from .gauss import FrameArrow, TripleEvent, gauss_diagram, iter_triples
from .laurent import LaurentPoly
from .loop import EventLog, MarkedDiagram

__all__ = [
    "FamilyError",
    "ConfigurationFamily",
    "InvariantResult",
    "parse_family",
    "triple_exponent",
    "selects",
    "evaluate",
    "eval_gamma0",
    "eval_gamma_d",
    "eval_gamma1_nm2",
    "w_a",
    "v_a",
    "vanishing_bound",
]


class FamilyError(ValueError):
    """A configuration family that is not defined for the given input."""


@dataclass(frozen=True)
class ConfigurationFamily:
    kind: str  # "deg0", "degd-l", "degd-h" or "deg1-nm2"
    d: int = 0
    a: int = 0
    b: int = 0
    type: str = "+"
    mirror: bool = False

    def __str__(self) -> str:
        if self.kind == "deg0":
            text = f"deg0:({self.a},{self.b}){self.type}"
        elif self.kind == "deg1-nm2":
            text = "deg1-nm2"
        else:
            text = f"{self.kind}:{self.d}"
        return text + (":mirror" if self.mirror else "")

    def triple_type(self, n: int) -> tuple[int, int, str]:
        if self.kind == "deg0":
            return (self.a, self.b, self.type)
        if self.kind == "deg1-nm2":
            return (n - 2, 1, "-")
        return (2 * n // 3, 2 * n // 3, "+")

    def check(self, n: int) -> None:
        if self.kind == "deg0":
            if not (1 <= self.a <= n - 1 and 1 <= self.b <= n - 1):
                raise FamilyError(f"markings must lie in 1..{n - 1}")
            if self.type not in "+-" or len(self.type) != 1:
                raise FamilyError("triple type must be + or -")
            if self.mirror:
                raise FamilyError("degree-0 families have no mirror variant")
        elif self.kind in ("degd-l", "degd-h"):
            if n % 3:
                raise FamilyError(f"{self.kind} needs n divisible by 3, got n={n}")
            if self.d < 1:
                raise FamilyError("the Gauss degree must be at least 1")
            if self.kind == "degd-h" and self.d % 2:
                raise FamilyError("degd-h is defined for even degree only")
        elif self.kind == "deg1-nm2":
            if n <= 3:
                raise FamilyError("deg1-nm2 needs n > 3")
        else:
            raise FamilyError(f"unknown family kind {self.kind!r}")


@dataclass(frozen=True)
class InvariantResult:
    value: LaurentPoly
    family: ConfigurationFamily
    l: int

    def to_json(self) -> dict:
        return {"family": str(self.family), "l": self.l, "value": self.value.to_json(), "text": str(self.value)}


_DEG0 = re.compile(r"deg0:\((\d+),(\d+)\)([+-])")
_DEGD = re.compile(r"(degd-[lh]):(\d+)")


def parse_family(text: str, n: int | None = None) -> ConfigurationFamily:
    """Parse ``deg0:(a,b)+``, ``degd-l:<d>``, ``degd-h:<d>``, ``deg1-nm2``
    (each optionally followed by ``:mirror``)."""
    s = text.strip().replace(" ", "")
    mirror = s.endswith(":mirror")
    if mirror:
        s = s[: -len(":mirror")]
    if m := _DEG0.fullmatch(s):
        fam = ConfigurationFamily("deg0", 0, int(m[1]), int(m[2]), m[3], mirror)
    elif m := _DEGD.fullmatch(s):
        fam = ConfigurationFamily(m[1], int(m[2]), mirror=mirror)
    elif s == "deg1-nm2":
        fam = ConfigurationFamily("deg1-nm2", 1, mirror=mirror)
    else:
        raise FamilyError(f"unrecognized family selector {text!r}")
    if n is not None:
        fam.check(n)
    return fam


def _bunch(frame: list[FrameArrow], first: str, second: str, d: int, allowed: dict[str, int]):
    """Signed count of alternating chains of length ``d``.

    Returns ``(number of chains, sum of writhe products)`` via a dynamic
    programme over the arrows sorted along the arc.
    """
    count = [1] + [0] * d
    total = [1] + [0] * d
    for f in frame:
        if allowed.get(f.arcs) != f.marking:
            continue
        for k in range(d - 1, -1, -1):
            want = first if k % 2 == 0 else second
            if f.arcs == want and count[k]:
                count[k + 1] += count[k]
                total[k + 1] += total[k] * f.writhe
    return count[d], total[d]


def triple_exponent(t: TripleEvent, family: ConfigurationFamily) -> tuple[bool, int]:
    """Whether any configuration matches at ``t``, and the exponent."""
    n = t.n
    if family.kind == "deg0":
        return False, 0
    frame = t.frame()
    if family.kind == "deg1-nm2":
        weights = {("lm", 1): 1, ("mh", 1): -1}
        hits = [(weights[(f.arcs, f.marking)], f.writhe) for f in frame if (f.arcs, f.marking) in weights]
        return bool(hits), sum(e * w for e, w in hits)
    third, two = n // 3, 2 * n // 3
    if family.kind == "degd-h":
        allowed = {"hl": two, "lh": third}
        count, total = _bunch(frame, "hl", "lh", family.d, allowed)
        return count > 0, total
    allowed = {"ml": third, "lm": two}
    if family.d % 2 == 0:
        count, total = _bunch(frame, "ml", "lm", family.d, allowed)
        return count > 0, total
    # odd degree: the wandering arrow either extends the bunch to an
    # alternating chain of d arrows (+1) or leaves l for h (-1)
    count, total = _bunch(frame, "ml", "lm", family.d, allowed)
    matched = count > 0
    sub_count, sub = _bunch(frame, "ml", "lm", family.d - 1, allowed)
    if sub_count:
        for f in frame:
            if f.arcs == "lh" and f.marking == third:
                matched, total = True, total - f.writhe * sub
    return matched, total


def selects(t: TripleEvent, family: ConfigurationFamily) -> TripleEvent | None:
    """The view of ``t`` the family reads, or None if ``t`` has another type."""
    view = t.reversed_view() if family.mirror else t
    return view if view.type_key == family.triple_type(t.n) else None


def evaluate(
    triples: Iterable[TripleEvent],
    family: ConfigurationFamily,
    count_unmatched: bool = True,
) -> LaurentPoly:
    terms: dict[int, int] = {}
    for t in triples:
        view = selects(t, family)
        if view is None:
            continue
        matched, e = triple_exponent(view, family)
        if matched or count_unmatched or family.kind == "deg0":
            terms[e] = terms.get(e, 0) + t.sign
    return LaurentPoly(terms)


def _log_n(log: EventLog) -> int:
    return log.initial.n


def eval_gamma0(log: EventLog, a: int, b: int, type: str) -> int:
    fam = ConfigurationFamily("deg0", 0, a, b, type)
    fam.check(_log_n(log))
    return evaluate(iter_triples(log), fam).at_one()


def eval_gamma_d(
    log: EventLog,
    family: ConfigurationFamily | str,
    d: int | None = None,
    count_unmatched: bool = True,
) -> LaurentPoly:
    n = _log_n(log)
    if isinstance(family, str):
        family = parse_family(family if ":" in family else f"{family}:{d}", n)
    if d is not None and d != family.d:
        family = ConfigurationFamily(family.kind, d, mirror=family.mirror)
    if family.kind not in ("degd-l", "degd-h"):
        raise FamilyError(f"{family} is not a Gamma^d family")
    family.check(n)
    return evaluate(iter_triples(log), family, count_unmatched)


def eval_gamma1_nm2(log: EventLog, count_unmatched: bool = True, mirror: bool = False) -> LaurentPoly:
    fam = ConfigurationFamily("deg1-nm2", 1, mirror=mirror)
    fam.check(_log_n(log))
    return evaluate(iter_triples(log), fam, count_unmatched)


def w_a(d: MarkedDiagram | BraidWord, a: int) -> int:
    """Sum of writhes over the crossings with homological marking ``a``."""
    return sum(arr.writhe for arr in gauss_diagram(d).arrows if arr.marking == a)


def v_a(d: MarkedDiagram | BraidWord, a: int) -> int:
    n = d.n
    return w_a(d, a) - w_a(d, n - a)


def vanishing_bound(c: int, n: int) -> int:
    """Least Gauss degree at which every cocycle polynomial vanishes on rot."""
    if c < 1 or n < 2:
        raise ValueError("need c >= 1 and n >= 2")
    return c + n * n - n - 2
