"""Exact algebra for the Artin braid group on n strands.

Words are sequences of signed generator indices (+i for s_i, -i for its
inverse).  Equality is decided through the left-greedy Garside normal form
``Delta^d . f_1 ... f_k`` whose factors are permutation braids, stored as
plain permutation tuples so that strand counts up to 64 stay cheap (no
factorial tables).  The same normal-form machinery powers cycling/decycling
and a budgeted super-summit conjugacy test.

Composition convention, fixed once for the whole package: letters of a word
act left to right.  Internally permutations compose the same way (``_mul(p,
q)`` applies ``p`` first); the public :func:`permutation` returns the map
"position -> strand that ends there", which is the inverse of the endpoint
map and makes ``permutation(s1 s2 s3)`` the 4-cycle (1 2 3 4).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


class BraidError(ValueError):
    """Raised for malformed words or strand-count mismatches."""


# ---------------------------------------------------------------------------
# permutation helpers (0-based tuples, p[i] = image of position i)
# ---------------------------------------------------------------------------

def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    # apply p first, then q
    return tuple(q[p[i]] for i in range(len(p)))


def _inv(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


@lru_cache(maxsize=None)
def _w0(n: int) -> tuple[int, ...]:
    # longest element; permutation of the Garside half twist Delta
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _letter(n: int, i: int) -> tuple[int, ...]:
    # transposition of positions i-1, i for the generator s_i (1-based i)
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _starting(p: Sequence[int]) -> list[int]:
    """Generators s_i that are prefixes of the permutation braid of p."""
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def _finishing(p: Sequence[int]) -> list[int]:
    return _starting(_inv(p))


def _tau(p: Sequence[int]) -> tuple[int, ...]:
    # conjugation by Delta; involutive on permutations
    w0 = _w0(len(p))
    return _mul(w0, _mul(p, w0))


def _left_complement(p: Sequence[int]) -> tuple[int, ...]:
    # q with q . p = w0 (as permutation braids: braid(q) braid(p) = Delta)
    return _mul(_w0(len(p)), _inv(p))


def _perm_word(p: Sequence[int]) -> list[int]:
    """A reduced word for the permutation braid of p, letters left to right."""
    p = tuple(p)
    out: list[int] = []
    ident = _identity(len(p))
    while p != ident:
        i = min(_starting(p))
        out.append(i)
        p = _mul(_letter(len(p), i), p)
    return out


def _cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(p)
    sizes = []
    for i in range(len(p)):
        if seen[i]:
            continue
        size = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            size += 1
        sizes.append(size)
    return tuple(sorted(sizes, reverse=True))


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for v in letters:
        if stack and stack[-1] == -v:
            stack.pop()
        else:
            stack.append(v)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators s_i^{+-1} of the braid group on n strands."""

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise BraidError(f"strand count must be positive, got {self.strand_count}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for v in self.letters:
            if not isinstance(v, int) or v == 0 or abs(v) >= self.strand_count:
                raise BraidError(
                    f"letter {v!r} out of range for {self.strand_count} strands"
                )

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    @classmethod
    def gen(cls, n: int, i: int, power: int = 1) -> "BraidWord":
        """The generator s_i (1 <= i < n) raised to an integer power."""
        sign = 1 if power >= 0 else -1
        return cls(n, (sign * i,) * abs(power))

    # -- group structure ----------------------------------------------
    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple(-v for v in reversed(self.letters)))

    def reversed(self) -> "BraidWord":
        """Letters in reverse order, signs kept: the mirror anti-automorphism."""
        return BraidWord(self.strand_count, tuple(reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        out = BraidWord.identity(self.strand_count)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugate_by(self, g: "BraidWord") -> "BraidWord":
        """g^-1 . self . g"""
        return g.inverse() * self * g

    def __len__(self) -> int:
        return len(self.letters)

    # -- serialization -------------------------------------------------
    def to_text(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{v}" if v > 0 else f"s{-v}^-1" for v in self.letters)

    @classmethod
    def from_text(cls, text: str, n: int) -> "BraidWord":
        text = text.strip()
        if text in ("", "e"):
            return cls.identity(n)
        letters = []
        for tok in text.split():
            m = re.fullmatch(r"s(\d+)(\^-1)?", tok)
            if not m:
                raise BraidError(f"cannot parse braid letter {tok!r}")
            i = int(m.group(1))
            letters.append(-i if m.group(2) else i)
        return cls(n, tuple(letters))

    def to_json(self) -> str:
        return json.dumps(list(self.letters))

    @classmethod
    def from_json(cls, text: str, n: int) -> "BraidWord":
        data = json.loads(text)
        if not isinstance(data, list):
            raise BraidError("JSON braid word must be an array of signed integers")
        return cls(n, tuple(int(v) for v in data))


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """Concatenate and freely reduce (cancel adjacent s_i s_i^-1 pairs)."""
    if w1.strand_count != w2.strand_count:
        raise BraidError(
            f"strand counts differ: {w1.strand_count} vs {w2.strand_count}"
        )
    return BraidWord(w1.strand_count, _free_reduce(w1.letters + w2.letters))


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs; a homomorphism to the integers."""
    return sum(1 if v > 0 else -1 for v in w.letters)


def _endpoint_map(w: BraidWord) -> tuple[int, ...]:
    # position k -> where the strand starting at k ends (0-based)
    p = _identity(w.strand_count)
    for v in w.letters:
        p = _mul(p, _letter(w.strand_count, abs(v)))
    return p


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Image in the symmetric group, as a 0-based image tuple.

    Convention: entry k is the strand that ends at position k, so the
    positive band s_1 s_2 ... s_{n-1} maps to the cycle (1 2 ... n).
    """
    return _inv(_endpoint_map(w))


def permutation_cycle_type(w: BraidWord) -> tuple[int, ...]:
    return _cycle_type(permutation(w))


def band_generator(i: int, j: int, n: int) -> BraidWord:
    """The band s_{j-1} ... s_{i+1} s_i s_{i+1}^-1 ... s_{j-1}^-1 (1 <= i < j <= n).

    This is the convention in which the conjugating chain comes first; its
    mirror image ``band_generator(i, j, n).reversed()`` is the one whose
    powers stabilize the reference tuples of :mod:`braidmono.catalog`.
    """
    if not (1 <= i < j <= n):
        raise BraidError(f"band indices must satisfy 1 <= i < j <= n, got ({i},{j},{n})")
    head = list(range(j - 1, i, -1))
    letters = head + [i] + [-k for k in reversed(head)]
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# Garside normal form
# ---------------------------------------------------------------------------

def _make_left_weighted(
    x: tuple[int, ...], y: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Slide prefix generators of y into x until the pair is left-weighted."""
    n = len(x)
    while True:
        fin = set(_finishing(x))
        move = [i for i in _starting(y) if i not in fin]
        if not move:
            return x, y
        s = _letter(n, move[0])
        x = _mul(x, s)
        y = _mul(s, y)


def _append_factor(factors: list[tuple[int, ...]], f: tuple[int, ...]) -> None:
    """Append one permutation-braid factor, recombing locally (left-greedy)."""
    n = len(f)
    ident = _identity(n)
    if f == ident:
        return
    factors.append(f)
    i = len(factors) - 2
    while i >= 0:
        x, y = _make_left_weighted(factors[i], factors[i + 1])
        if (x, y) == (factors[i], factors[i + 1]):
            break
        factors[i], factors[i + 1] = x, y
        i -= 1
    while factors and factors[-1] == ident:
        factors.pop()


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy Garside normal form Delta^infimum . factors.

    Factors are permutation tuples (0-based images), none equal to the
    identity or to Delta's permutation, and each adjacent pair is
    left-weighted.  Two words are equal in the braid group iff their normal
    forms compare equal componentwise.
    """

    strand_count: int
    infimum: int
    factors: tuple[tuple[int, ...], ...] = ()

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def key(self) -> tuple:
        """Hashable canonical key (used for orbit/membership memoization)."""
        return (self.strand_count, self.infimum, self.factors)

    def to_word(self) -> BraidWord:
        n = self.strand_count
        letters: list[int] = []
        delta = _perm_word(_w0(n))
        if self.infimum >= 0:
            letters.extend(delta * self.infimum)
        else:
            inv_delta = [-v for v in reversed(delta)]
            letters.extend(inv_delta * (-self.infimum))
        for f in self.factors:
            letters.extend(_perm_word(f))
        return BraidWord(n, _free_reduce(letters))


def normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy normal form; solves the word problem."""
    n = w.strand_count
    if n == 1:
        return NormalForm(1, 0, ())
    w0 = _w0(n)
    # letter -> Delta^d . factor with d in {0, -1}
    raw: list[tuple[int, tuple[int, ...]]] = []
    for v in w.letters:
        s = _letter(n, abs(v))
        if v > 0:
            raw.append((0, s))
        else:
            raw.append((-1, _left_complement(s)))
    # push all Delta powers to the front, conjugating factors by tau
    delta_pow = 0
    adjusted: list[tuple[int, ...]] = [()] * len(raw)
    for idx in range(len(raw) - 1, -1, -1):
        d, f = raw[idx]
        adjusted[idx] = _tau(f) if delta_pow % 2 else f
        delta_pow += d
    factors: list[tuple[int, ...]] = []
    for f in adjusted:
        _append_factor(factors, f)
    # absorb leading half twists, drop trailing identities
    inf = delta_pow
    k = 0
    while k < len(factors) and factors[k] == w0:
        inf += 1
        k += 1
    ident = _identity(n)
    factors = [f for f in factors[k:] if f != ident]
    return NormalForm(n, inf, tuple(factors))


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality in the braid group, via normal forms."""
    if w1.strand_count != w2.strand_count:
        raise BraidError(
            f"strand counts differ: {w1.strand_count} vs {w2.strand_count}"
        )
    return normal_form(w1) == normal_form(w2)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


# ---------------------------------------------------------------------------
# conjugacy: quick invariants, cycling/decycling, bounded summit search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyBudget:
    """Resource bounds for :func:`conjugacy_test`.

    ``max_summit_size`` bounds the enumerated part of the super summit set;
    ``max_cycling`` bounds cycling/decycling rounds; ``atom_search_states``
    bounds the cheap first-phase search over conjugation by generators.
    """

    max_summit_size: int = 1500
    max_cycling: int = 400
    atom_search_states: int = 200


@dataclass(frozen=True)
class ConjugacyResult:
    verdict: str  # "yes" | "no" | "unknown"
    reason: str = ""
    conjugator: Optional[BraidWord] = None

    def __bool__(self) -> bool:  # pragma: no cover - convenience only
        return self.verdict == "yes"


def _cycling(nf: NormalForm) -> NormalForm:
    if not nf.factors:
        return nf
    n = nf.strand_count
    x1 = nf.factors[0]
    a = _tau(x1) if nf.infimum % 2 else x1
    word = NormalForm(n, nf.infimum, nf.factors[1:]).to_word() * BraidWord(
        n, tuple(_perm_word(a))
    )
    return normal_form(word)


def _decycling(nf: NormalForm) -> NormalForm:
    if not nf.factors:
        return nf
    n = nf.strand_count
    xk = nf.factors[-1]
    word = BraidWord(n, tuple(_perm_word(xk))) * NormalForm(
        n, nf.infimum, nf.factors[:-1]
    ).to_word()
    return normal_form(word)


def _summit_representative(nf: NormalForm, budget: ConjugacyBudget) -> Optional[NormalForm]:
    """Cycle to maximal infimum, then decycle to minimal supremum."""
    rounds = 0
    stall = 0
    while stall <= nf.canonical_length and rounds < budget.max_cycling:
        nxt = _cycling(nf)
        rounds += 1
        if nxt.infimum > nf.infimum:
            stall = 0
        else:
            stall += 1
        nf = nxt if nxt.infimum >= nf.infimum else nf
    stall = 0
    while stall <= nf.canonical_length and rounds < budget.max_cycling:
        nxt = _decycling(nf)
        rounds += 1
        if nxt.supremum < nf.supremum:
            stall = 0
        else:
            stall += 1
        nf = nxt if nxt.supremum <= nf.supremum else nf
    if rounds >= budget.max_cycling:
        return None
    return nf


def _all_simple_perms(n: int) -> Iterator[tuple[int, ...]]:
    from itertools import permutations as iter_perms

    ident = _identity(n)
    for p in iter_perms(range(n)):
        if p != ident:
            yield p


def conjugacy_test(
    w1: BraidWord, w2: BraidWord, budget: ConjugacyBudget | None = None
) -> ConjugacyResult:
    """Tri-state conjugacy test: yes / no / unknown (budget exhausted).

    Fast negatives come from the exponent sum and the permutation cycle
    type.  Positives come from a bounded search conjugating by generators,
    falling back to a super-summit-set enumeration (complete, hence able to
    answer "no", only while the set fits in the budget and the strand count
    keeps the simple-element list enumerable).
    """
    if w1.strand_count != w2.strand_count:
        raise BraidError("strand counts differ")
    budget = budget or ConjugacyBudget()
    n = w1.strand_count
    if exponent_sum(w1) != exponent_sum(w2):
        return ConjugacyResult("no", "exponent sums differ")
    if permutation_cycle_type(w1) != permutation_cycle_type(w2):
        return ConjugacyResult("no", "permutation cycle types differ")
    nf2 = normal_form(w2)
    if normal_form(w1) == nf2:
        return ConjugacyResult("yes", "equal words", BraidWord.identity(n))

    # phase 1: BFS conjugating by single generators (cheap fast path)
    seen = {normal_form(w1).key(): BraidWord.identity(n)}
    frontier = [(normal_form(w1), BraidWord.identity(n))]
    states = 0
    while frontier and states < budget.atom_search_states:
        nf, path = frontier.pop(0)
        word = nf.to_word()
        for i in range(1, n):
            for sign in (1, -1):
                g = BraidWord.gen(n, i, sign)
                cand = g.inverse() * word * g
                states += 1
                cnf = normal_form(cand)
                if cnf == nf2:
                    return ConjugacyResult("yes", "generator search", path * g)
                if cnf.key() not in seen and len(seen) < budget.atom_search_states:
                    seen[cnf.key()] = path * g
                    frontier.append((cnf, path * g))
    # phase 2: super summit sets.  Within the summit set, conjugating by
    # simple elements and keeping only elements with the summit infimum and
    # supremum reaches every member (convexity), so no re-cycling is needed.
    if n > 7:
        return ConjugacyResult("unknown", "strand count too large for summit search")
    rep1 = _summit_representative(normal_form(w1), budget)
    rep2 = _summit_representative(nf2, budget)
    if rep1 is None or rep2 is None:
        return ConjugacyResult("unknown", "cycling budget exhausted")
    if (rep1.infimum, rep1.supremum) != (rep2.infimum, rep2.supremum):
        return ConjugacyResult("no", "summit infimum/supremum differ")
    inf_s, sup_s = rep1.infimum, rep1.supremum
    simples = [BraidWord(n, tuple(_perm_word(p))) for p in _all_simple_perms(n)]

    def sweep(nf: NormalForm) -> Iterator[NormalForm]:
        word = nf.to_word()
        for g in simples:
            cand = normal_form(g.inverse() * word * g)
            if (cand.infimum, cand.supremum) == (inf_s, sup_s):
                yield cand

    # bidirectional first step catches conjugators that are two simples deep
    target = rep2.key()
    summit = {rep1.key()}
    queue: list[NormalForm] = []
    for cand in sweep(rep1):
        if cand.key() == target:
            return ConjugacyResult("yes", "summit set search")
        if cand.key() not in summit:
            summit.add(cand.key())
            queue.append(cand)
    for cand in sweep(rep2):
        if cand.key() in summit:
            return ConjugacyResult("yes", "summit set search")
    # full closure from rep1, early exit on the target
    while queue:
        nf = queue.pop(0)
        for cand in sweep(nf):
            key = cand.key()
            if key == target:
                return ConjugacyResult("yes", "summit set search")
            if key in summit:
                continue
            if len(summit) >= budget.max_summit_size:
                return ConjugacyResult("unknown", "summit set budget exhausted")
            summit.add(key)
            queue.append(cand)
    return ConjugacyResult("no", "summit sets disjoint")


# ---------------------------------------------------------------------------
# presentation data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphericalPresentation:
    """The two extra relators of the mapping class group of the punctured sphere.

    Stored as data only; all equality checks in this package happen in the
    braid group upstairs, never in the quotient.
    """

    strand_count: int
    relators: tuple[BraidWord, BraidWord] = field(init=False)

    def __post_init__(self) -> None:
        n = self.strand_count
        if n < 2:
            raise BraidError("need at least 2 strands")
        up = list(range(1, n - 1))
        first = BraidWord(n, tuple(up + [n - 1, n - 1] + up[::-1]))
        cycle = BraidWord(n, tuple(range(1, n)))
        object.__setattr__(self, "relators", (first, cycle ** n))


def braid_relators(n: int) -> list[BraidWord]:
    """All defining relators of the braid group on n strands, as trivial words."""
    rels = []
    for i in range(1, n - 1):
        a, b = BraidWord.gen(n, i), BraidWord.gen(n, i + 1)
        rels.append(a * b * a * (b * a * b).inverse())
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            a, b = BraidWord.gen(n, i), BraidWord.gen(n, j)
            rels.append(a * b * a.inverse() * b.inverse())
    return rels
