import random

import pytest

from braidmono.braid import (
    BraidError,
    BraidWord,
    band_generator,
    braid_relators,
    compose,
    equal,
)
from braidmono.groups import (
    BR3_A,
    BR3_B,
    MINUS_ID,
    SL2,
    SL2_A,
    SL2_B,
    make_phi,
    make_psi,
    tuple_product,
)
from braidmono.hurwitz import (
    MembershipBudget,
    expand_certificate,
    hurwitz_apply,
    membership_search,
    orbit_bfs,
    stabilizes,
)
from test_groups import random_sl2_word


def test_single_letter_moves():
    t = hurwitz_apply(BraidWord(2, (1,)), (SL2_A, SL2_B))
    assert t == (SL2_A * SL2_B * SL2_A.inverse(), SL2_A)
    assert t[0] == SL2(0, 1, -1, 2)
    g = SL2_B * SL2_A
    assert hurwitz_apply(BraidWord(2, (1,)), (g, g)) == (g, g)
    # inverse move undoes the positive move
    start = (SL2_A, SL2_B, MINUS_ID)
    for v in (1, 2):
        roundtrip = hurwitz_apply(BraidWord(3, (v, -v)), start)
        assert roundtrip == start


def test_sigma1_cubed_fixes_braid_tuple():
    t = (BR3_A, BR3_B)
    assert hurwitz_apply(BraidWord(2, (1, 1, 1)), t) == t
    assert stabilizes(BraidWord(2, (1, 1, 1)), make_psi(0, 2))
    assert not stabilizes(BraidWord(2, (1,)), make_psi(0, 2))


def test_strand_mismatch():
    with pytest.raises(BraidError):
        hurwitz_apply(BraidWord(3, (1,)), (SL2_A, SL2_B))


def test_action_property_and_relators():
    rng = random.Random(1)
    n = 3
    relators = braid_relators(n)
    for _ in range(1000):
        t = tuple(random_sl2_word(rng, rng.randint(0, 6)) for _ in range(n))
        r = relators[rng.randrange(len(relators))]
        assert hurwitz_apply(r, t) == t
    for _ in range(200):
        t = tuple(random_sl2_word(rng, rng.randint(0, 5)) for _ in range(n))
        b1 = BraidWord(n, tuple(rng.choice([1, -1, 2, -2]) for _ in range(4)))
        b2 = BraidWord(n, tuple(rng.choice([1, -1, 2, -2]) for _ in range(4)))
        assert hurwitz_apply(compose(b1, b2), t) == hurwitz_apply(
            b2, hurwitz_apply(b1, t)
        )


def test_class_and_product_invariance():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(2, 5)
        t = tuple(random_sl2_word(rng, rng.randint(0, 5)) for _ in range(n))
        b = BraidWord(
            n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(6))
        )
        image = hurwitz_apply(b, t)
        assert sorted(m.trace() for m in image) == sorted(m.trace() for m in t)
        assert tuple_product(image) == tuple_product(t)


def test_orbit_of_psi2():
    res = orbit_bfs(make_psi(0, 2))
    assert res.size == 3 and res.exhausted
    assert res.check_transversal()


def test_orbit_trivial_and_central():
    g = SL2_A * SL2_B
    res = orbit_bfs((g, g))
    assert res.size == 1 and res.exhausted
    res2 = orbit_bfs((MINUS_ID, SL2_A))
    assert res2.size == 2 and res2.exhausted
    assert set(res2.visited) == {(MINUS_ID, SL2_A), (SL2_A, MINUS_ID)}


def test_orbit_budget_and_closure():
    res = orbit_bfs((SL2_A * SL2_A, SL2_B * SL2_B), budget=50)
    assert not res.exhausted
    assert res.size == 50
    full = orbit_bfs(make_psi(0, 3), budget=10**5)
    if full.exhausted:
        moves = [BraidWord(3, (v,)) for v in (1, -1, 2, -2)]
        for t in full.visited:
            for mv in moves:
                assert hurwitz_apply(mv, t) in full.visited


def test_central_band_squares_fix_tuples():
    # full twists on a pair whose left strand carries a central entry
    t = (MINUS_ID, SL2_A, SL2_B, SL2_A)
    for j in range(2, 5):
        band = band_generator(1, j, 4)
        for word in (band, band.reversed()):
            assert stabilizes(word * word, t)


def test_membership_search_basic():
    s1cubed = BraidWord(2, (1, 1, 1))
    res = membership_search(s1cubed, [s1cubed])
    assert res.status == "found" and res.certificate == (1,)

    res2 = membership_search(BraidWord(2, (1,)), [s1cubed])
    assert res2.status == "unknown"
    assert "exponent sum" in res2.obstruction

    word = BraidWord(4, (1, 1, 3, -1))
    gens = [BraidWord(4, (1,)), BraidWord(4, (3,))]
    res3 = membership_search(word, gens, MembershipBudget(max_depth=5))
    assert res3.status == "found"
    assert equal(expand_certificate(res3.certificate, gens), word)


def test_membership_depth_budget():
    target = BraidWord(2, (1,)) ** 10
    res = membership_search(target, [BraidWord(2, (1,))], MembershipBudget(max_depth=4))
    assert res.status == "unknown" and "budget" in res.obstruction
