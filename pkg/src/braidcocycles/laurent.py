"""Integer Laurent polynomials in one variable ``x``.

Values are immutable and hashable.  The term map never stores a zero
coefficient, so the zero polynomial has an empty map and structural equality
is polynomial equality.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

_TERM = re.compile(r"([+-])(?:(?:(\d+)\*?)?(x)(?:\^(-?\d+))?|(\d+))")

__all__ = ["LaurentPoly", "monomial", "add", "derivative_at_one"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            exp, coeff = int(exp), int(coeff)
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), reverse=True))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate at ``x`` (negative powers need an invertible ``x``)."""
        total = 0
        for e, c in self._terms.items():
            total += c * (x**e if e >= 0 else 1 / x ** (-e))
        return total

    def at_one(self) -> int:
        return sum(self._terms.values())

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self._terms.items())

    def degree_range(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        return min(self._terms), max(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                power = "x" if e == 1 else f"x^{e}"
                body = power if a == 1 else f"{a}*{power}"
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    # JSON encoding: {"<exponent>": coefficient}
    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items(), reverse=True)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(k): int(v) for k, v in data.items()})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: accepts e.g. ``x^3 + 2*x - 1 - x^-2``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        acc: dict[int, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos:
                break
            pos = m.end()
            sign, coeff, power, exp, const = m.groups()
            if power:
                value = int(coeff or 1)
                e = int(exp) if exp is not None else 1
            else:
                value, e = int(const), 0
            acc[e] = acc.get(e, 0) + (-value if sign == "-" else value)
        if pos != len(s):
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        return cls(acc)


def _coerce(value: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly({0: value})
    raise TypeError(f"cannot combine LaurentPoly with {type(value).__name__}")


def monomial(sign: int, exponent: int) -> LaurentPoly:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return LaurentPoly({exponent: sign})


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def derivative_at_one(p: LaurentPoly) -> int:
    return p.derivative_at_one()
