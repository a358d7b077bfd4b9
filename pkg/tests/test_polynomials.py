import random
from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from braidmono.polynomials import (
    FamilyShape,
    MultiPoly,
    PolyError,
    X,
    Y,
    bifurcation_poly,
    cubic_family,
    cusp_equation,
    degeneration_equation,
    discriminant,
    sylvester_resultant,
    univariate_gcd,
    var,
    weierstrass_factor,
)

ONE = MultiPoly.constant(1)
ZERO = MultiPoly.zero()


def rand_poly(rng, names, max_deg, max_terms=5, coeff=4):
    out = ZERO
    for _ in range(rng.randint(1, max_terms)):
        term = MultiPoly.constant(rng.randint(-coeff, coeff))
        for name in names:
            term = term * var(name) ** rng.randint(0, max_deg)
        out = out + term
    return out


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_basic_arithmetic():
    assert (MultiPoly.parse("x+1") * MultiPoly.parse("x-1")) == MultiPoly.parse(
        "x^2-1"
    )
    assert MultiPoly.parse("6*x+9").content() == 3
    f = cubic_family(var("l0"), var("xi0"), ZERO)
    assert f.substitute({"y": 0}) == 2 * var("xi0")


def test_substitute_fractions():
    p = MultiPoly.parse("4*x^2 - 1")
    assert p.substitute({"x": Fraction(1, 2)}) == ZERO
    with pytest.raises(PolyError):
        MultiPoly.parse("x").substitute({"x": Fraction(1, 3)})


def test_exact_division():
    p = MultiPoly.parse("x^2-1")
    assert p.exact_div(MultiPoly.parse("x-1")) == MultiPoly.parse("x+1")
    with pytest.raises(PolyError):
        p.exact_div(MultiPoly.parse("x-2"))
    assert ZERO.try_div(p) == ZERO
    with pytest.raises(PolyError):
        p.exact_div(ZERO)


def test_text_and_json_roundtrip():
    rng = random.Random(5)
    for _ in range(40):
        p = rand_poly(rng, ["x", "l0", "xi1", "z2"], 3)
        assert MultiPoly.parse(p.to_text()) == p
        assert MultiPoly.from_json(p.to_json()) == p
    assert MultiPoly.parse("0") == ZERO
    assert ZERO.to_text() == "0"


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------

def test_resultant_examples():
    assert sylvester_resultant(
        MultiPoly.parse("x-3"), MultiPoly.parse("x-5"), "x"
    ).constant_value() in (2, -2)
    # a constant against a linear polynomial
    c = var("l0") + var("z0") ** 2
    g = 2 * (X + var("xi0")) - var("z0") ** 3
    assert sylvester_resultant(c, g, "x") == c
    with pytest.raises(PolyError):
        sylvester_resultant(ONE, MultiPoly.constant(2), "x")
    assert sylvester_resultant(ZERO, g, "x") == ZERO


def test_resultant_antisymmetry():
    rng = random.Random(7)
    for _ in range(30):
        f = rand_poly(rng, ["x", "l0"], 3)
        g = rand_poly(rng, ["x", "l0"], 3)
        if f.degree("x") < 1 or g.degree("x") < 1:
            continue
        rfg = sylvester_resultant(f, g, "x")
        rgf = sylvester_resultant(g, f, "x")
        sign = -1 if (f.degree("x") * g.degree("x")) % 2 else 1
        assert rfg == rgf * sign


def test_resultant_specialization_commutes():
    rng = random.Random(11)
    done = 0
    while done < 200:
        f = rand_poly(rng, ["x", "l0", "xi0"], 2)
        g = rand_poly(rng, ["x", "l0", "xi0"], 2)
        if f.degree("x") < 1 or g.degree("x") < 1:
            continue
        point = {"l0": rng.randint(-5, 5), "xi0": rng.randint(-5, 5)}
        fs, gs = f.substitute(point), g.substitute(point)
        if fs.degree("x") != f.degree("x") or gs.degree("x") != g.degree("x"):
            continue  # leading coefficient vanished under the specialization
        done += 1
        assert sylvester_resultant(f, g, "x").substitute(point) == (
            sylvester_resultant(fs, gs, "x")
        )


def test_discriminant_identity_symbolic():
    # disc_y(y^3 - 3 p y + 2 q) = 108 (p^3 - q^2) with polynomial p, q
    for dp, dq in [(0, 0), (1, 2), (2, 3)]:
        p = sum((var(f"l{i}") * X**i for i in range(dp + 1)), ZERO)
        q = sum((var(f"xi{i}") * X**i for i in range(dq + 1)), ZERO)
        disc = discriminant(cubic_family(p, q, ZERO), "y")
        assert disc == 108 * (p**3 - q * q)


def test_bifurcation_poly():
    assert bifurcation_poly(ONE, X**2, ZERO, ONE) == 1 - X**4
    assert bifurcation_poly(ONE, X, ZERO, MultiPoly.parse("x-5")) == (
        MultiPoly.parse("x-5") * (1 - X * X)
    )
    p, q = var("l0"), var("xi0")
    assert bifurcation_poly(p, q, ZERO, ONE) == p**3 - q * q
    with pytest.raises(PolyError):
        bifurcation_poly(ZERO, ZERO, ZERO, ONE)


# ---------------------------------------------------------------------------
# cusp and degeneration equations
# ---------------------------------------------------------------------------

def test_cusp_equation_examples():
    for n in (2, 3, 4):
        ce = cusp_equation(var("l0"), X**n + var("xi0"), ZERO)
        assert ce.degree("l0") == n
        assert ce == var("l0") ** n
    ce1 = cusp_equation(var("l0"), X + var("xi0"), var("z0"))
    assert ce1 == var("l0") + var("z0") ** 2
    assert cusp_equation(ZERO, X**2, ZERO) == ZERO


def numeric_roots(poly, v, point):
    coeffs = poly.coefficients_in(v)
    deg = max(coeffs)
    vec = [
        complex(coeffs.get(d, ZERO).eval_numeric(point)) for d in range(deg, -1, -1)
    ]
    while vec and abs(vec[0]) < 1e-30:
        vec = vec[1:]
    if len(vec) <= 1:
        return np.array([])
    return np.roots(vec)


def degenerate_critical_point_exists(p, q, r, point, tol=1e-8):
    """Independent oracle: does the cubic have a point where the first and
    second y-derivatives vanish together with the function, numerically?"""
    f = cubic_family(p, q, r)
    f1 = f.substitute({"y": -r})  # f at the root of d2f/dy2
    f2 = f.derivative("y").substitute({"y": -r})
    roots = numeric_roots(f1, "x", point)
    if roots.size == 0:
        return False
    coeffs2 = f2.coefficients_in("x")
    scale = max(
        1.0, max(abs(c.eval_numeric(point)) for c in coeffs2.values())
    )
    for x0 in roots:
        val = sum(
            c.eval_numeric(point) * x0**d for d, c in coeffs2.items()
        )
        if abs(val) < tol * scale * max(1.0, abs(x0)) ** max(coeffs2):
            return True
    return False


def test_cusp_equation_matches_numeric_oracle():
    rng = random.Random(13)
    agree = 0
    for _ in range(40):
        n = rng.randint(2, 3)
        dr = n // 3
        p = sum((var(f"l{i}") * X**i for i in range(1)), ZERO)  # l0 symbolic
        q = X**n + sum(
            (MultiPoly.constant(rng.randint(-3, 3)) * X**i for i in range(n)), ZERO
        )
        r = sum(
            (MultiPoly.constant(rng.randint(-2, 2)) * X**i for i in range(dr + 1)),
            ZERO,
        )
        ce = cusp_equation(p, q, r)
        if ce.degree("l0") > 0:
            # sample on the squarefree part: multiple roots of the eliminant
            # are too ill-conditioned for the 1e-8 comparison
            ce = ce.exact_div(univariate_gcd(ce, ce.derivative("l0"), "l0"))
        roots = numeric_roots(ce, "l0", {})
        for rho in roots[:2]:
            assert degenerate_critical_point_exists(p, q, r, {"l0": rho})
            agree += 1
        off = (rng.random() * 6 - 3) + 1j * (rng.random() * 6 - 3)
        if roots.size == 0 or np.min(np.abs(roots - off)) > 1e-2:
            assert not degenerate_critical_point_exists(p, q, r, {"l0": off})
            agree += 1
    assert agree >= 60


def test_degeneration_equation_small():
    res = degeneration_equation(FamilyShape(2, 0, 0), specialize={"z0": 0})
    assert res.poly == MultiPoly.parse(
        "xi1^4 - 8*xi0*xi1^2 + 16*xi0^2 - 16*l0^3"
    )
    assert res.degree_in("xi0") == 2
    assert res.leading_coefficient == 16
    assert res.normalized_leading == 1
    # at l0 = 0 the locus contains the parameters where q has a double root
    at0 = res.poly.substitute({"l0": 0})
    assert at0.try_div(MultiPoly.parse("xi1^2-4*xi0")) is not None
    assert ("cusp eliminant", 3) in res.stripped


def test_degeneration_equation_full_shape():
    res = degeneration_equation(FamilyShape(2, 1, 0))
    assert res.degree_in("xi0") == 2
    assert res.poly.leading_coefficient("xi0").is_constant()
    assert res.normalized_leading == 1

    rng = random.Random(17)
    shape = FamilyShape(3, 2, 1)
    spec = {f"l{i}": rng.randint(-3, 3) for i in range(1, 3)}
    spec.update({f"xi{i}": rng.randint(-3, 3) for i in range(1, 3)})
    spec.update({f"z{i}": rng.randint(-2, 2) for i in range(2)})
    res3 = degeneration_equation(shape, specialize=spec)
    assert res3.degree_in("xi0") == 4
    assert res3.poly.leading_coefficient("xi0").is_constant()


def test_family_shape_validation():
    with pytest.raises(PolyError):
        FamilyShape(1, 0, 0)
    with pytest.raises(PolyError):
        FamilyShape(3, 3, 0)
    assert FamilyShape(3, 2, 1).monodromy_bounds_ok()
    assert not FamilyShape(2, 0, 0).monodromy_bounds_ok()


# ---------------------------------------------------------------------------
# Weierstrass coefficient splitting
# ---------------------------------------------------------------------------

def test_weierstrass_factor_examples():
    split = weierstrass_factor(X**2, X**3, 1)
    assert (split.a, split.p, split.q) == (X, ONE, ONE)
    split0 = weierstrass_factor(ONE, ONE, 0)
    assert (split0.a, split0.p, split0.q) == (ONE, ONE, ONE)
    with pytest.raises(PolyError):
        weierstrass_factor(X, X, 1)


def test_weierstrass_factor_composite():
    a = MultiPoly.parse("x^2 - 2")  # monic, squarefree, degree 2
    p = MultiPoly.parse("x^2 + 1")
    q = MultiPoly.parse("x^3 - x + 1")
    split = weierstrass_factor(p * a * a, q * a * a * a, 2)
    assert split.a == a and split.p == p and split.q == q
    # cofactors sharing a root violate the fibre-type hypothesis
    with pytest.raises(PolyError):
        weierstrass_factor(p * X * a * a, q * X * a * a * a, 2)
    # degree mismatch: wrong l
    with pytest.raises(PolyError):
        weierstrass_factor(p * a * a, q * a * a * a, 1)


def test_univariate_gcd():
    f = MultiPoly.parse("x^2-1") * MultiPoly.parse("x+2") * 6
    g = MultiPoly.parse("x^2+3*x+2") * 4
    assert univariate_gcd(f, g) == MultiPoly.parse("x^2+3*x+2")
    assert univariate_gcd(f, ZERO) == f.primitive()
    rng = random.Random(19)
    for _ in range(20):
        a = rand_poly(rng, ["x"], 3)
        b = rand_poly(rng, ["x"], 2)
        c = rand_poly(rng, ["x"], 2)
        if a.is_zero() or b.is_zero() or c.is_zero():
            continue
        g = univariate_gcd(a * c, b * c)
        assert g.try_div(c.primitive()) is not None or c.degree("x") == 0
