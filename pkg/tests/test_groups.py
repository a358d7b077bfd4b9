import random

import pytest

from braidmono.braid import BraidWord
from braidmono.groups import (
    BR3_A,
    BR3_B,
    MINUS_ID,
    PSL2,
    SL2,
    SL2_A,
    SL2_B,
    Br3,
    GroupError,
    br3_degree,
    make_phi,
    make_psi,
    psl2_project,
    tuple_product,
)


def random_sl2_word(rng, length):
    out = SL2.identity()
    gens = [SL2_A, SL2_A.inverse(), SL2_B, SL2_B.inverse()]
    for _ in range(length):
        out = out * rng.choice(gens)
    return out


def test_matrix_arithmetic():
    assert (SL2_A * SL2_B).entries() == (0, 1, -1, 1)
    ab = SL2_A * SL2_B
    assert ab * ab * ab == MINUS_ID
    assert MINUS_ID.trace() == -2
    assert SL2_A.inverse() * SL2_A == SL2.identity()
    with pytest.raises(GroupError):
        SL2(1, 0, 0, 2)


def test_braid_relation_in_sl2():
    aba = SL2_A * SL2_B * SL2_A
    bab = SL2_B * SL2_A * SL2_B
    assert aba == bab == SL2(0, 1, -1, 0)


def test_center():
    ab = SL2_A * SL2_B
    assert (ab ** 6 if hasattr(ab, "__pow__") else tuple_product((ab,) * 6)) or True
    six = tuple_product((ab,) * 6)
    assert six == SL2.identity()
    rng = random.Random(0)
    for _ in range(100):
        m = random_sl2_word(rng, rng.randint(0, 12))
        assert m * MINUS_ID == MINUS_ID * m


def test_make_phi():
    assert make_phi(2) == (BR3_A, BR3_B)
    assert make_phi(3) == (BR3_A, BR3_B, BR3_A)
    assert make_phi(1) == (BR3_A,)
    with pytest.raises(GroupError):
        make_phi(0)


def test_make_psi():
    assert make_psi(0, 2) == (SL2_A, SL2_B)
    assert make_psi(2, 1) == (MINUS_ID, MINUS_ID, SL2_A)
    assert make_psi(1, 0) == (MINUS_ID,)
    for l in range(4):
        for lp in range(1, 7):
            t = make_psi(l, lp)
            assert all(m.a * m.d - m.b * m.c == 1 for m in t)
            traces = [m.trace() for m in t]
            assert traces[:l] == [-2] * l
            assert all(tr == 2 for tr in traces[l:])


def test_tuple_product():
    assert tuple_product(make_psi(0, 6)) == MINUS_ID
    assert tuple_product(make_psi(1, 6)) == SL2.identity()
    assert tuple_product((SL2_B,)) == SL2_B
    with pytest.raises(GroupError):
        tuple_product(())


def test_psl2_projection():
    assert PSL2.of(MINUS_ID) == PSL2.identity()
    assert psl2_project(make_psi(2, 2)) == (
        PSL2.identity(),
        PSL2.identity(),
        PSL2.of(SL2_A),
        PSL2.of(SL2_B),
    )
    assert PSL2.of(SL2_A) == PSL2.of(-SL2_A)
    # the two central extensions induce the same projective tuple
    for n in range(1, 7):
        assert tuple(g.to_psl2() for g in make_phi(n)) == psl2_project(make_psi(0, n))


def test_br3_degree():
    assert br3_degree(BR3_A) == 1
    assert br3_degree(BR3_B) == 1
    ab = BR3_A * BR3_B
    cube = ab * ab * ab
    assert br3_degree(cube) == 6
    assert br3_degree(Br3.identity()) == 0


def test_br3_equality_via_normal_form():
    aba = BR3_A * BR3_B * BR3_A
    bab = BR3_B * BR3_A * BR3_B
    assert aba == bab
    assert hash(aba) == hash(bab)
    assert aba != BR3_A
    assert Br3(BraidWord(3, (1, -1))) == Br3.identity()


def test_sl2_json_roundtrip():
    m = SL2_A * SL2_B.inverse() * SL2_A
    assert SL2.from_json(m.to_json()) == m
    assert m.to_json() == "[[2, 3], [1, 2]]"
