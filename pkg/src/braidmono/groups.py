"""Coefficient groups acted on through tuples: SL(2,Z), PSL(2,Z) and the
3-strand braid group, together with the reference tuple constructors.

Elements are immutable and hashable on a canonical form (exact integer
matrices, sign-normalized matrices, Garside normal-form keys), which is what
the orbit enumeration in :mod:`braidmono.hurwitz` keys on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .braid import BraidWord, compose, equal, exponent_sum, normal_form


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class SL2:
    """An element of SL(2,Z) with arbitrary-precision integer entries."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise GroupError(f"determinant of {self.entries()} is not 1")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "SL2") -> "SL2":
        return SL2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2":
        return SL2(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "SL2":
        return SL2(-self.a, -self.b, -self.c, -self.d)

    def trace(self) -> int:
        return self.a + self.d

    def is_central(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    @classmethod
    def identity(cls) -> "SL2":
        return cls(1, 0, 0, 1)

    def to_json(self) -> str:
        return json.dumps([[self.a, self.b], [self.c, self.d]])

    @classmethod
    def from_json(cls, text: str) -> "SL2":
        rows = json.loads(text)
        return cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1])


SL2_A = SL2(1, 1, 0, 1)
SL2_B = SL2(1, 0, -1, 1)
MINUS_ID = SL2(-1, 0, 0, -1)


@dataclass(frozen=True)
class PSL2:
    """Sign-normalized SL(2,Z) matrix: first nonzero entry of (a,b,c,d) > 0."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, m: SL2) -> "PSL2":
        for v in m.entries():
            if v != 0:
                if v < 0:
                    m = -m
                break
        return cls(*m.entries())

    def lift(self) -> SL2:
        return SL2(self.a, self.b, self.c, self.d)

    def __mul__(self, other: "PSL2") -> "PSL2":
        return PSL2.of(self.lift() * other.lift())

    def inverse(self) -> "PSL2":
        return PSL2.of(self.lift().inverse())

    @classmethod
    def identity(cls) -> "PSL2":
        return cls(1, 0, 0, 1)


@dataclass(frozen=True)
class Br3:
    """An element of the 3-strand braid group with a := s1, b := s2.

    Words are kept as given; equality and hashing go through the Garside
    normal form, so Hurwitz orbits over Br3 deduplicate correctly even
    though entries grow as words.
    """

    word: BraidWord

    def __post_init__(self) -> None:
        if self.word.strand_count != 3:
            raise GroupError("Br3 elements live on 3 strands")

    @cached_property
    def _key(self) -> tuple:
        return normal_form(self.word).key()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Br3):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __mul__(self, other: "Br3") -> "Br3":
        return Br3(compose(self.word, other.word))

    def inverse(self) -> "Br3":
        return Br3(self.word.inverse())

    @property
    def degree(self) -> int:
        """Exponent sum; a class function with value one on a and b."""
        return exponent_sum(self.word)

    def to_psl2(self) -> PSL2:
        out = SL2.identity()
        images = {1: SL2_A, -1: SL2_A.inverse(), 2: SL2_B, -2: SL2_B.inverse()}
        for v in self.word.letters:
            out = out * images[v]
        return PSL2.of(out)

    @classmethod
    def identity(cls) -> "Br3":
        return cls(BraidWord.identity(3))


BR3_A = Br3(BraidWord(3, (1,)))
BR3_B = Br3(BraidWord(3, (2,)))


def br3_degree(g: Br3) -> int:
    return g.degree


def br3_equal(g: Br3, h: Br3) -> bool:
    return equal(g.word, h.word)


# ---------------------------------------------------------------------------
# reference tuples
# ---------------------------------------------------------------------------

def make_phi(n: int) -> tuple[Br3, ...]:
    """The alternating Br3 tuple (a, b, a, b, ...)."""
    if n < 1:
        raise GroupError("tuple length must be positive")
    return tuple(BR3_A if i % 2 == 1 else BR3_B for i in range(1, n + 1))


def make_psi(l: int, lp: int) -> tuple[SL2, ...]:
    """SL(2,Z) tuple: l central entries -id, then lp entries alternating.

    Entry i > l is the upper-triangular unipotent when i and l have
    different parity, the lower-triangular one otherwise; make_psi(0, n) is
    the plain alternating tuple starting with the upper-triangular matrix.
    """
    if l < 0 or lp < 0 or l + lp < 1:
        raise GroupError("need l >= 0, lp >= 0, l + lp >= 1")
    out: list[SL2] = [MINUS_ID] * l
    for i in range(l + 1, l + lp + 1):
        out.append(SL2_A if (i - l) % 2 == 1 else SL2_B)
    return tuple(out)


def tuple_product(t):
    """Ordered product of the entries of a nonempty tuple."""
    if not t:
        raise GroupError("empty tuple has no product")
    out = t[0]
    for g in t[1:]:
        out = out * g
    return out


def psl2_project(t: tuple[SL2, ...]) -> tuple[PSL2, ...]:
    """Entrywise sign normalization."""
    return tuple(PSL2.of(m) for m in t)
