import json
import random

import pytest

from braidmono.braid import BraidWord, band_generator, equal
from braidmono.catalog import (
    CatalogError,
    GeneratorSet,
    LabeledGenerator,
    bottom_line,
    equivalent_generation,
    exponent_main,
    exponent_stab,
    generators,
    stab_band,
    verify_redgen,
)
from braidmono.groups import MINUS_ID, make_phi, make_psi
from braidmono.hurwitz import membership_search, stabilizes
from test_groups import random_sl2_word


def test_generator_set_examples():
    e2 = generators("E_n", n=2)
    assert e2.labels() == [(1, 2, 3)]
    assert e2.generators[0].word.letters == (1, 1, 1)

    mixed = generators("E_2n_l", n=1, l=1)
    assert mixed.strand_count == 3
    assert mixed.labels() == [(1, 2, 2), (1, 3, 2), (2, 3, 3)]

    tilde = generators("TildeE", l=1, lp=2)
    assert tilde.labels() == [(1, 2, 2), (1, 3, 2), (2, 3, 1)]

    with pytest.raises(CatalogError):
        generators("E_n", n=1)
    with pytest.raises(CatalogError):
        generators("nope", n=3)


def test_exponent_tables_agree():
    for l in range(0, 5):
        for i in range(1, 12):
            for j in range(i + 1, 13):
                assert exponent_main(i, j, l) == exponent_stab(i, j, l)
    a = generators("Ebar_6k_l", k=1, l=2, table=0)
    b = generators("Ebar_6k_l", k=1, l=2, table=1)
    assert a.generators == b.generators


def test_labels_regenerate_table():
    gset = generators("Ebar_6k_l", k=1, l=3)
    for g in gset.generators:
        assert g.power == exponent_main(g.i, g.j, 3)
        assert equal(g.word, stab_band(g.i, g.j, gset.strand_count) ** g.power)


def test_pure_horizontal_generators_stabilize_reference_tuples():
    for n in range(2, 9):
        phi = make_phi(n)
        psi = make_psi(0, n)
        for g in generators("E_n", n=n).generators:
            assert stabilizes(g.word, phi), g.label
            assert stabilizes(g.word, psi), g.label


def test_mixed_generators_stabilize_reference_tuples():
    for l in range(0, 5):
        psi = make_psi(l, 6)
        for g in generators("Ebar_6k_l", k=1, l=l).generators:
            assert stabilizes(g.word, psi), (l, g.label)


def test_front_conjugated_bands_fail_to_stabilize():
    # the mirror convention matters: the band with the chain in front does
    # not fix the alternating tuple
    psi = make_psi(0, 4)
    assert not stabilizes(band_generator(1, 3, 4), psi)
    assert stabilizes(stab_band(1, 3, 4), psi)


def test_full_twists_fix_central_prefix_tuples():
    rng = random.Random(3)
    for _ in range(50):
        l = rng.randint(1, 3)
        lp = rng.randint(1, 3)
        n = l + lp
        t = tuple([MINUS_ID] * l) + tuple(
            random_sl2_word(rng, rng.randint(0, 4)) for _ in range(lp)
        )
        tilde = generators("TildeE", l=l, lp=lp)
        for g in tilde.generators:
            if g.power == 2:
                assert stabilizes(g.word, t), (l, lp, g.label)


def test_redgen_small_runs_have_no_unresolved_entries():
    for n, l in [(2, 0), (1, 2), (2, 2), (1, 3)]:
        report = verify_redgen(n, l)
        assert report.unresolved == [], (n, l)
        data = json.loads(report.to_json())
        assert data["unresolved"] == 0
        assert "unresolved: 0" in report.to_table()


def test_redgen_example_instances():
    # base case j = i + 2: the band is itself a reduced generator
    report = verify_redgen(2, 0)
    rec13 = next(r for r in report.records if (r.i, r.j) == (1, 3))
    assert rec13.family == 0 and rec13.certificate is not None

    # inside the vertical block the printed conjugation order is mirrored
    report2 = verify_redgen(1, 3)
    rec = next(r for r in report2.records if (r.i, r.j) == (1, 3))
    assert rec.family == 1
    assert not rec.verified_as_stated
    assert rec.verified_with_correction
    assert rec.applied_correction == "mirrored band convention"
    assert rec.certificate is not None

    # a genuine distance-four rewriting instance, also mirrored
    report3 = verify_redgen(3, 0)
    rec15 = next(r for r in report3.records if (r.i, r.j) == (1, 5))
    assert rec15.family == 2
    assert not rec15.verified_as_stated
    assert rec15.applied_correction == "mirrored band convention"

    # cube relations also need the chain-index repair on top of the mirror
    rec34 = next(
        r for r in report3.records if r.family in (3, 4) and r.j > r.i + 1
    )
    assert not rec34.verified_as_stated
    assert "(j-2,j)" in rec34.applied_correction
    assert "not a band" in rec34.note


def test_equivalent_generation():
    a = generators("E_2n_l", n=2, l=0)
    b = bottom_line(2, 0)
    rep = equivalent_generation(a, b)
    assert rep.fully_certified
    assert rep.unknowns == []

    triv = GeneratorSet(
        "adhoc", 2, (), (LabeledGenerator(1, 2, 3, BraidWord(2, (1, 1, 1))),)
    )
    rep2 = equivalent_generation(triv, triv)
    assert rep2.fully_certified
    assert rep2.forward[0][1].certificate == (1,)

    single = GeneratorSet("adhoc", 2, (), (LabeledGenerator(1, 2, 1, BraidWord(2, (1,))),))
    rep3 = equivalent_generation(single, triv)
    assert not rep3.fully_certified
    assert any("exponent sum" in why for _, _, why in rep3.unknowns)


def test_membership_certificate_matches_cube_relation():
    # the cube of a distance-two band lies in the horizontal subgroup
    gens = generators("E_n", n=4)
    target = stab_band(1, 3, 4) ** 3
    res = membership_search(target, gens.words())
    assert res.status == "found" and len(res.certificate) <= 3
