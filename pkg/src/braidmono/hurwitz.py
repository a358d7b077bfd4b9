"""The Hurwitz action of the braid group on tuples of group elements.

A letter s_i sends (..., g_i, g_{i+1}, ...) to (..., g_i g_{i+1} g_i^-1,
g_i, ...); its inverse is the inverse move.  Letters of a word act left to
right, matching the composition convention of :mod:`braidmono.braid`:
``hurwitz_apply(compose(b1, b2), t) == hurwitz_apply(b2, hurwitz_apply(b1, t))``.

Entries may come from any group whose elements are hashable, compare by
value and implement ``__mul__`` and ``inverse()`` (see
:mod:`braidmono.groups`).  Tuples are plain Python tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .braid import BraidError, BraidWord, compose, equal, exponent_sum, normal_form

GroupTuple = tuple


def hurwitz_apply(b: BraidWord, t: GroupTuple) -> GroupTuple:
    """Apply the braid word to the tuple, letters left to right."""
    if b.strand_count != len(t):
        raise BraidError(
            f"braid on {b.strand_count} strands cannot act on a {len(t)}-tuple"
        )
    entries = list(t)
    for v in b.letters:
        i = abs(v) - 1
        x, y = entries[i], entries[i + 1]
        if v > 0:
            entries[i], entries[i + 1] = x * y * x.inverse(), x
        else:
            entries[i], entries[i + 1] = y, y.inverse() * x * y
    return tuple(entries)


def stabilizes(b: BraidWord, t: GroupTuple) -> bool:
    """True iff the word fixes the tuple entrywise."""
    return hurwitz_apply(b, t) == tuple(t)


@dataclass
class OrbitResult:
    """Breadth-first closure of a tuple under all generator moves.

    ``transversal`` maps each visited tuple to a braid word reaching it from
    the root; ``exhausted`` is True iff the whole orbit fit in the budget.
    """

    root: GroupTuple
    visited: set = field(default_factory=set)
    transversal: dict = field(default_factory=dict)
    exhausted: bool = True

    @property
    def size(self) -> int:
        return len(self.visited)

    def check_transversal(self) -> bool:
        return all(
            hurwitz_apply(w, self.root) == t for t, w in self.transversal.items()
        )


def orbit_bfs(t: GroupTuple, budget: int = 10**6) -> OrbitResult:
    """Enumerate the Hurwitz orbit, visiting moves in a deterministic order
    (generator index ascending, positive sign before negative)."""
    n = len(t)
    t = tuple(t)
    result = OrbitResult(root=t)
    result.visited.add(t)
    result.transversal[t] = BraidWord.identity(n)
    frontier = [t]
    moves = [sign * i for i in range(1, n) for sign in (1, -1)]
    while frontier:
        nxt: list[GroupTuple] = []
        for cur in frontier:
            path = result.transversal[cur]
            for mv in moves:
                img = hurwitz_apply(BraidWord(n, (mv,)), cur)
                if img in result.visited:
                    continue
                if len(result.visited) >= budget:
                    result.exhausted = False
                    return result
                result.visited.add(img)
                result.transversal[img] = BraidWord(n, path.letters + (mv,))
                nxt.append(img)
        frontier = nxt
    return result


# ---------------------------------------------------------------------------
# membership certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipBudget:
    max_depth: int = 8
    max_states: int = 60000


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of the word search: either a certificate over the given
    generators (signed 1-based indices, e.g. (2, -1) for g2 g1^-1) or
    unknown, optionally with a reason the element cannot be reached."""

    status: str  # "found" | "unknown"
    certificate: Optional[tuple[int, ...]] = None
    obstruction: str = ""

    def __bool__(self) -> bool:
        return self.status == "found"


def expand_certificate(
    certificate: Sequence[int], gens: Sequence[BraidWord]
) -> BraidWord:
    n = gens[0].strand_count
    out = BraidWord.identity(n)
    for v in certificate:
        g = gens[abs(v) - 1]
        out = compose(out, g if v > 0 else g.inverse())
    return out


def membership_search(
    b: BraidWord,
    gens: Sequence[BraidWord],
    budget: MembershipBudget | None = None,
) -> MembershipResult:
    """Breadth-first search for a word in the generators equal to ``b``.

    A semidecision procedure: "found" certificates are verified exactly,
    budget exhaustion reports unknown.  Exponent sums give a cheap
    obstruction note when the target provably lies outside the subgroup of
    attainable exponent sums.
    """
    budget = budget or MembershipBudget()
    if not gens:
        raise BraidError("need at least one generator")
    n = b.strand_count
    for g in gens:
        if g.strand_count != n:
            raise BraidError("generators must share the target's strand count")

    sums = 0
    for g in gens:
        sums = gcd(sums, abs(exponent_sum(g)))
    target_sum = exponent_sum(b)
    if (sums == 0 and target_sum != 0) or (sums != 0 and target_sum % sums != 0):
        return MembershipResult(
            "unknown",
            obstruction=(
                f"exponent sum {target_sum} not in {sums}Z generated by the alphabet"
            ),
        )

    target = normal_form(b).key()
    start = BraidWord.identity(n)
    if normal_form(start).key() == target:
        return MembershipResult("found", ())
    seen = {normal_form(start).key()}
    frontier: list[tuple[BraidWord, tuple[int, ...]]] = [(start, ())]
    for _depth in range(budget.max_depth):
        nxt: list[tuple[BraidWord, tuple[int, ...]]] = []
        for word, path in frontier:
            for k, g in enumerate(gens, start=1):
                for v, step in ((k, g), (-k, g.inverse())):
                    cand = compose(word, step)
                    key = normal_form(cand).key()
                    if key == target:
                        cert = path + (v,)
                        assert equal(expand_certificate(cert, gens), b)
                        return MembershipResult("found", cert)
                    if key in seen:
                        continue
                    if len(seen) >= budget.max_states:
                        return MembershipResult(
                            "unknown", obstruction="state budget exhausted"
                        )
                    seen.add(key)
                    nxt.append((cand, path + (v,)))
        frontier = nxt
    return MembershipResult("unknown", obstruction="depth budget exhausted")
