"""Braid words with their closure permutations, plus the word transforms used downstream.

A letter ``g`` stands for the Artin generator sigma_|g|, inverted when ``g`` is
negative.  Words are stored linearly; the closure is the cyclic word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BraidWord",
    "Permutation",
    "parse_braid",
    "closure_permutation",
    "is_knot",
    "delta_word",
    "reverse",
    "flip",
    "conjugate",
    "cable",
    "lex_min_commutation",
]


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"strand count must be at least 2, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        for g in self.letters:
            if g == 0 or abs(g) > self.n - 1:
                raise ValueError(f"letter {g} out of range for {self.n} strands")

    @classmethod
    def _trusted(cls, n: int, letters: tuple[int, ...]) -> "BraidWord":
        """Build without re-validating letters already known to be in range."""
        w = object.__new__(cls)
        object.__setattr__(w, "n", n)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-g for g in reversed(self.letters)))

    def rotate(self, k: int) -> "BraidWord":
        """Cyclic rotation: the closure is unchanged."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.n, self.letters[k:] + self.letters[:k])

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters)

    def to_json(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["n"]), tuple(data["letters"]))


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[j-1]`` is the image of ``j``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(self * other)(j) = self(other(j))``."""
        return Permutation(tuple(self(other(j)) for j in range(1, len(self.images) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


def parse_braid(text: str, n: int) -> BraidWord:
    letters = []
    for tok in text.split():
        try:
            g = int(tok)
        except ValueError:
            raise ValueError(f"malformed braid token {tok!r}") from None
        if g == 0:
            raise ValueError("zero is not a braid letter")
        letters.append(g)
    return BraidWord(n, tuple(letters))


def closure_permutation(w: BraidWord) -> Permutation:
    """Maps the start position of each strand to its end position."""
    where = list(range(1, w.n + 1))  # where[s] = current position of strand s+1
    at = list(range(w.n))  # at[p-1] = strand index currently at position p
    for g in w.letters:
        k = abs(g)
        a, b = at[k - 1], at[k]
        at[k - 1], at[k] = b, a
        where[a], where[b] = k + 1, k
    return Permutation(tuple(where))


def is_knot(w: BraidWord) -> bool:
    return len(closure_permutation(w).cycles()) == 1


def delta_word(n: int) -> BraidWord:
    """Garside half twist (s1..s_{n-1})(s1..s_{n-2})...(s1)."""
    if n < 2:
        raise ValueError("delta needs n >= 2")
    letters = [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(n, tuple(letters))


def reverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(reversed(w.letters)))


def flip(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple((w.n - abs(g)) * (1 if g > 0 else -1) for g in w.letters))


def conjugate(w: BraidWord, u: BraidWord) -> BraidWord:
    """``u w u^-1`` as a plain concatenation, no free reduction."""
    if u.n != w.n:
        raise ValueError("conjugator has a different strand count")
    return u + w + u.inverse()


def lex_min_commutation(letters: Sequence[int]) -> tuple[int, ...]:
    """Least word (by generator index) reachable by swapping distant letters."""
    rest = list(letters)
    out = []
    while rest:
        best = None
        for pos, g in enumerate(rest):
            if all(abs(abs(g) - abs(h)) >= 2 for h in rest[:pos]):
                if best is None or (abs(g), g) < (abs(rest[best]), rest[best]):
                    best = pos
        out.append(rest.pop(best))
    return tuple(out)


def _bundle_block(i: int, k: int, sign: int) -> list[int]:
    # bundle i (positions (i-1)k+1..ik) crosses bundle i+1 as a rigid ribbon
    base = (i - 1) * k
    word = []
    for r in range(k, 0, -1):
        word.extend(sign * (base + r + s) for s in range(k))
    return list(lex_min_commutation(word))


def cable(
    w: BraidWord,
    k: int,
    add_twist: bool = False,
    twist: Iterable[int] | None = None,
) -> BraidWord:
    """k-parallel cable of ``w`` on ``k*n`` strands.

    With ``add_twist`` one positive permutation braid is appended; the default
    ``s1 s2 .. s_{k-1}`` cycles the strands of the first bundle, which turns the
    cable of a knotted closure back into a knot.
    """
    if k < 1:
        raise ValueError("cable multiplicity must be >= 1")
    letters: list[int] = []
    for g in w.letters:
        letters.extend(_bundle_block(abs(g), k, 1 if g > 0 else -1))
    if add_twist:
        letters.extend(range(1, k) if twist is None else twist)
    return BraidWord(k * w.n, tuple(letters))
