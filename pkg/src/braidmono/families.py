"""Parameterized plane-curve families and the closed parameter loops whose
monodromy the tracker extracts.

Every built-in loop is a chain of line/arc segments in one complex
coordinate s, pushed into parameter space by a per-segment affine map
(var -> base + coeff * s).  Geometry is declared over exact rationals
(Fractions for real/imaginary parts), so runs are reproducible bit for bit;
evaluation happens in complex floating point.

A family carries one or more charts: a chart fixes the symbolic
bifurcation polynomial and the base values of its parameters.  Loops that
deform the vertical divisor through a quadratic factor use their own chart
where the quadratic's constant term is the loop coordinate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import pi
from typing import Mapping, Sequence

import numpy as np

from .polynomials import MultiPoly, X, bifurcation_poly, var


class FamilyError(ValueError):
    pass


Rational = Fraction


def _to_complex(re: Fraction | int, im: Fraction | int = 0) -> complex:
    return complex(Fraction(re), Fraction(im))


def _rat_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalComplex:
    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re, im=0) -> "RationalComplex":
        return cls(Fraction(re), Fraction(im))

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def to_json(self) -> dict:
        return {"re": _rat_text(self.re), "im": _rat_text(self.im)}

    @classmethod
    def from_json(cls, data) -> "RationalComplex":
        return cls(Fraction(data["re"]), Fraction(data["im"]))


RC = RationalComplex.of


@dataclass(frozen=True)
class AffineMap:
    """Parameter values var -> base + coeff * s along one segment."""

    base: tuple[tuple[str, RationalComplex], ...]
    coeff: tuple[tuple[str, RationalComplex], ...] = ()

    def at(self, s: complex) -> dict[str, complex]:
        out = {name: value.to_complex() for name, value in self.base}
        for name, value in self.coeff:
            out[name] = out.get(name, 0j) + value.to_complex() * s
        return out

    @classmethod
    def build(cls, base: Mapping[str, RationalComplex],
              coeff: Mapping[str, RationalComplex]) -> "AffineMap":
        return cls(tuple(sorted(base.items())), tuple(sorted(coeff.items())))


@dataclass(frozen=True)
class Segment:
    """A line (start -> end) or a full/partial circular arc in the loop
    coordinate, together with the affine map into parameter space."""

    kind: str  # "line" | "arc"
    map: AffineMap
    start: RationalComplex = RC(0)
    end: RationalComplex = RC(0)
    center: RationalComplex = RC(0)
    radius: Rational = Fraction(0)
    angle_from: Rational = Fraction(0)  # in turns
    turns: Rational = Fraction(1)

    def point(self, t: float) -> complex:
        if self.kind == "line":
            a, b = self.start.to_complex(), self.end.to_complex()
            return a + (b - a) * t
        angle = 2 * pi * (float(self.angle_from) + float(self.turns) * t)
        return self.center.to_complex() + float(self.radius) * cmath.exp(1j * angle)

    def params(self, t: float) -> dict[str, complex]:
        return self.map.at(self.point(t))

    def length_scale(self) -> float:
        if self.kind == "line":
            return abs(self.end.to_complex() - self.start.to_complex())
        return 2 * pi * float(self.radius) * abs(float(self.turns))


@dataclass(frozen=True)
class Chart:
    """A symbolic bifurcation polynomial plus base parameter values."""

    name: str
    bifurcation: MultiPoly
    base: tuple[tuple[str, RationalComplex], ...]

    def base_map(self) -> dict[str, RationalComplex]:
        return dict(self.base)

    def base_values(self) -> dict[str, complex]:
        return {k: v.to_complex() for k, v in self.base}


@dataclass(frozen=True)
class ParameterLoop:
    label: str
    chart: str
    segments: tuple[Segment, ...]

    def check_closed(self, junction_tol: float = 1e-8) -> None:
        # interior junctions may carry the snap error of arc angles (1e-9
        # scale, far below any root separation); the basepoint closure is
        # between exact rational points and must be exact
        for k in range(len(self.segments) - 1):
            a = self.segments[k].params(1.0)
            b = self.segments[k + 1].params(0.0)
            if _param_dist(a, b) > junction_tol:
                raise FamilyError(
                    f"loop {self.label}: segments {k} and {k + 1} do not join"
                )
        start = self.segments[0].params(0.0)
        end = self.segments[-1].params(1.0)
        if _param_dist(start, end) > 1e-14:
            raise FamilyError(f"loop {self.label} does not close up")


def _param_dist(a: Mapping[str, complex], b: Mapping[str, complex]) -> float:
    keys = set(a) | set(b)
    return max(abs(a.get(k, 0j) - b.get(k, 0j)) for k in keys)


@dataclass(frozen=True)
class FamilySpec:
    """One of the built-in families, with its charts and loop catalog."""

    name: str
    n: int
    l: int
    eps: Fraction
    eps2: Fraction
    charts: tuple[Chart, ...]
    horizontal_count: int
    vertical_count: int
    fiber: tuple[MultiPoly, MultiPoly, MultiPoly]  # p, q, r at symbolic params

    @property
    def puncture_count(self) -> int:
        return self.horizontal_count + self.vertical_count

    def chart(self, name: str) -> Chart:
        for c in self.charts:
            if c.name == name:
                return c
        raise FamilyError(f"no chart {name!r} in family {self.name}")

    def loop_labels(self) -> list[str]:
        return [loop.label for loop in builtin_loops(self)]


def _horizontal_pq(n: int) -> tuple[MultiPoly, MultiPoly]:
    # the slope of p is only admissible when 3 deg p <= 2n allows degree 1
    p = var("l0") + (var("l1") * X if n >= 2 else MultiPoly.zero())
    q = X**n + var("xi0") + var("xi1") * X
    return p, q


def _vertical_roots(l: int) -> list[Fraction]:
    # reference vertical divisor roots l+2-i, i = 1..l (descending: l+1 .. 2)
    return [Fraction(l + 2 - i) for i in range(1, l + 1)]


def make_family(
    name: str,
    n: int,
    l: int = 0,
    eps: Fraction = Fraction(1, 20),
    eps2: Fraction = Fraction(1, 20),
) -> FamilySpec:
    """Construct a built-in family.

    special:   y^3 - 3 l0 y + 2 (x^n + xi0)
    semi-gen:  the same with a fixed linear term eps * x in q
    generic:   y^3 - 3 (l0 + l1 x) y + 2 (x^n + xi0 + xi1 x)
    mono-full: the generic horizontal part times a monic vertical factor of
               degree l whose roots are parameters z1..zl
    """
    if n < 1:
        raise FamilyError("need n >= 1")
    if name != "mono-full" and l:
        raise FamilyError(f"family {name} has no vertical part")
    p, q = _horizontal_pq(n)
    r = MultiPoly.zero()
    base = {
        "l0": RC(1),
        "xi0": RC(0),
        "xi1": RC(0),
    }
    if n >= 2:
        base["l1"] = RC(0)
    if name == "special":
        base["xi1"] = RC(0)
    elif name == "semi-gen":
        base["xi1"] = RC(eps)
    elif name in ("generic", "mono-full"):
        pass
    else:
        raise FamilyError(f"unknown family {name!r}")
    vertical = MultiPoly.constant(1)
    if name == "mono-full":
        if l < 0:
            raise FamilyError("need l >= 0")
        for i in range(1, l + 1):
            vertical = vertical * (X - var(f"z{i}"))
            base[f"z{i}"] = RC(_vertical_roots(l)[i - 1])
    bif = bifurcation_poly(p, q, r, vertical)
    charts = [Chart("main", bif, tuple(sorted(base.items())))]
    if name == "mono-full":
        # one extra chart per vertical swap: the pair (z_i, z_{i+1}) is
        # replaced by a quadratic factor (x - c)^2 + s with center c between
        # the two reference roots; at s = -1/4 it reproduces the base divisor
        for i in range(1, l):
            c = _vertical_roots(l)[i - 1] - Fraction(1, 2)  # = l - i + 3/2
            num, den = c.numerator, c.denominator
            # (den*x - num)^2 + den^2 * s keeps integer coefficients
            shifted = den * X - MultiPoly.constant(num)
            quad_poly = shifted * shifted + den * den * var("l9")
            rest = MultiPoly.constant(1)
            swap_base = dict(base)
            swap_base["l9"] = RC(Fraction(-1, 4))
            for j in range(1, l + 1):
                if j in (i, i + 1):
                    swap_base.pop(f"z{j}", None)
                else:
                    rest = rest * (X - var(f"z{j}"))
            bif_swap = bifurcation_poly(p, q, r, quad_poly * rest)
            charts.append(
                Chart(f"swap{i}", bif_swap, tuple(sorted(swap_base.items())))
            )
    return FamilySpec(
        name=name,
        n=n,
        l=l if name == "mono-full" else 0,
        eps=eps,
        eps2=eps2,
        charts=tuple(charts),
        horizontal_count=2 * n,
        vertical_count=l if name == "mono-full" else 0,
        fiber=(p, q, r),
    )


# ---------------------------------------------------------------------------
# loop construction helpers
# ---------------------------------------------------------------------------

def _line(m: AffineMap, a: RationalComplex, b: RationalComplex) -> Segment:
    return Segment("line", m, start=a, end=b)


def _full_circle(
    m: AffineMap, center: RationalComplex, radius: Rational, angle_from: Rational
) -> Segment:
    return Segment(
        "arc", m, center=center, radius=Fraction(radius),
        angle_from=Fraction(angle_from), turns=Fraction(1),
    )


def _meridian(
    m: AffineMap,
    origin: RationalComplex,
    target: RationalComplex,
    radius: Rational,
) -> list[Segment]:
    """Out from origin toward target, once counterclockwise around it, back."""
    direction = target.to_complex() - origin.to_complex()
    dist = abs(direction)
    if dist <= float(radius):
        raise FamilyError("meridian radius exceeds the distance to the target")
    scale = Fraction(1) - Fraction(radius) / Fraction(dist).limit_denominator(10**12)
    approach = RationalComplex(
        origin.re + (target.re - origin.re) * scale,
        origin.im + (target.im - origin.im) * scale,
    )
    angle = Fraction(
        cmath.phase(origin.to_complex() - target.to_complex()) / (2 * pi)
    ).limit_denominator(10**9)
    return [
        _line(m, origin, approach),
        _full_circle(m, target, radius, angle),
        _line(m, approach, origin),
    ]


def _snap(value: complex, den: int = 10**9) -> RationalComplex:
    return RationalComplex(
        Fraction(value.real).limit_denominator(den),
        Fraction(value.imag).limit_denominator(den),
    )


def _branch_values(n: int, eps: Fraction, component: int) -> list[complex]:
    """Critical values of xi(x) = component - x^n - eps*x over the x-plane."""
    coeffs = [float(n)] + [0.0] * (n - 2) + [float(eps)]
    crits = np.roots(coeffs) if n >= 2 else np.array([])
    values = [component - x**n - float(eps) * x for x in crits]
    values.sort(key=lambda z: (round(z.real, 12), round(z.imag, 12)))
    return values


def _loop_radius(center: complex, others: Sequence[complex], cap: Fraction) -> Fraction:
    spacing = min((abs(center - o) for o in others if abs(center - o) > 1e-12),
                  default=float(cap) * 3)
    return min(Fraction(cap), Fraction(spacing / 3).limit_denominator(10**6))


# ---------------------------------------------------------------------------
# built-in loops per family
# ---------------------------------------------------------------------------

def builtin_loops(fam: FamilySpec) -> list[ParameterLoop]:
    loops: list[ParameterLoop] = []
    base = fam.chart("main").base_map()

    def fixed_map(coeffs: Mapping[str, RationalComplex], overrides=None) -> AffineMap:
        b = dict(base)
        if overrides:
            b.update(overrides)
        for name in coeffs:
            b.setdefault(name, RC(0))
        return AffineMap.build(b, coeffs)

    if fam.name in ("special", "semi-gen", "mono-full"):
        # path (l0, xi0) = (1 - s, i s); circle of radius delta around s = 1
        delta = Fraction(1, 20)
        m = fixed_map({"l0": RC(-1), "xi0": RC(0, 1)})
        loops.append(
            ParameterLoop(
                "cusp",
                "main",
                tuple(
                    [_line(m, RC(0), RC(1 - delta))]
                    + [_full_circle(m, RC(1), delta, Fraction(1, 2))]
                    + [_line(m, RC(1 - delta), RC(0))]
                ),
            )
        )
    if fam.name == "special":
        m = fixed_map({"xi0": RC(1)})
        for sign, tag in ((1, "xi-plus"), (-1, "xi-minus")):
            loops.append(
                ParameterLoop(
                    tag, "main", tuple(_meridian(m, RC(0), RC(sign), Fraction(1, 5)))
                )
            )
    if fam.name == "semi-gen":
        loops.extend(_branch_loops(fam, chart="main", ramp=False))
    if fam.name == "generic":
        loops.extend(_branch_loops(fam, chart="main", ramp=True))
        if fam.n >= 2:
            loops.extend(_cusp_split_loops(fam))
    if fam.name == "mono-full":
        for i in range(1, fam.l):
            m_swap = AffineMap.build(
                {k: v for k, v in fam.chart(f"swap{i}").base},
                {"l9": RC(1)},
            )
            origin = RC(Fraction(-1, 4))
            loops.append(
                ParameterLoop(
                    f"vertical-swap-{i}",
                    f"swap{i}",
                    tuple(_meridian(m_swap, origin, RC(0), Fraction(1, 5))),
                )
            )
        loops.extend(_zero_transport_loops(fam))
        loops.extend(_branch_loops(fam, chart="main", ramp=True))
        if fam.n >= 2:
            loops.extend(_cusp_split_loops(fam))
    return loops


def _branch_loops(fam: FamilySpec, chart: str, ramp: bool) -> list[ParameterLoop]:
    """Meridians around the branch values of each smooth component over the
    line l0 = 1, with the linear perturbation eps switched on."""
    loops = []
    base = fam.chart(chart).base_map()
    eps = fam.eps
    for component in (1, -1):
        values = _branch_values(fam.n, eps, component)
        tag = "plus" if component == 1 else "minus"
        for k, center in enumerate(values, start=1):
            target = _snap(center)
            radius = _loop_radius(center, [v for v in values if v != center],
                                  Fraction(1, 5))
            m_loop = AffineMap.build(
                {**base, "xi1": RC(eps), "xi0": RC(0)},
                {"xi0": RC(1)},
            )
            segs = list(_meridian(m_loop, RC(0), target, radius))
            if ramp:
                m_ramp = AffineMap.build(base, {"xi1": RC(eps)})
                segs = (
                    [_line(m_ramp, RC(0), RC(1))]
                    + segs
                    + [_line(m_ramp, RC(1), RC(0))]
                )
            loops.append(ParameterLoop(f"branch-{tag}-{k}", chart, tuple(segs)))
    return loops


def _cusp_split_loops(fam: FamilySpec) -> list[ParameterLoop]:
    """Transport to the line through xi0 = i with the slope of p switched on,
    then meridians in l0 around the points where p divides the q-part."""
    loops = []
    base = fam.chart("main").base_map()
    eps2 = fam.eps2
    n = fam.n
    # cusp values: l0 = -eps2 * x0 with x0^n = -i
    cusps = []
    for k in range(n):
        x0 = cmath.exp(1j * (-pi / 2 + 2 * pi * k) / n)
        cusps.append(-float(eps2) * x0)
    cusps.sort(key=lambda z: (round(z.real, 12), round(z.imag, 12)))
    m_transport = AffineMap.build(
        base, {"l0": RC(-1), "l1": RC(eps2), "xi0": RC(0, 1)}
    )
    transport_in = _line(m_transport, RC(0), RC(1))
    transport_out = _line(m_transport, RC(1), RC(0))
    for k, center in enumerate(cusps, start=1):
        target = _snap(center)
        radius = _loop_radius(center, [v for v in cusps if v != center],
                              Fraction(eps2, 3))
        m_loop = AffineMap.build(
            {**base, "l0": RC(0), "l1": RC(eps2), "xi0": RC(0, 1)},
            {"l0": RC(1)},
        )
        loops.append(
            ParameterLoop(
                f"cusp-split-{k}",
                "main",
                tuple([transport_in] + _meridian(m_loop, RC(0), target, radius)
                      + [transport_out]),
            )
        )
    return loops


def _zero_transport_loops(fam: FamilySpec) -> list[ParameterLoop]:
    """The vertical root z_i travels around one horizontal puncture and back:
    out along a dipped path, around the unit circle at a safe radius, radially
    in, once around the puncture."""
    loops = []
    base = fam.chart("main").base_map()
    outer = Fraction(8, 5)
    dip = RC(0, Fraction(-1, 4))
    rr = Fraction(3, 20)
    for i in range(1, fam.l + 1):
        v0 = RC(_vertical_roots(fam.l)[i - 1])
        m = AffineMap.build(
            {k: v for k, v in base.items() if k != f"z{i}"}, {f"z{i}": RC(1)}
        )
        for j in range(1, fam.horizontal_count + 1):
            angle = Fraction(j - 1, fam.horizontal_count)  # turns; 2n-th roots
            cos_a = Fraction(math.cos(2 * pi * float(angle))).limit_denominator(10**9)
            sin_a = Fraction(math.sin(2 * pi * float(angle))).limit_denominator(10**9)
            puncture = RationalComplex(cos_a, sin_a)
            ring_in = RationalComplex(
                puncture.re * (1 + rr), puncture.im * (1 + rr)
            )
            ring_start = RC(outer)
            ring_at_angle = RationalComplex(outer * cos_a, outer * sin_a)
            out_path = [
                _line(m, v0, RationalComplex(v0.re, dip.im)),
                _line(m, RationalComplex(v0.re, dip.im),
                      RationalComplex(Fraction(outer), dip.im)),
                _line(m, RationalComplex(Fraction(outer), dip.im), ring_start),
                Segment("arc", m, center=RC(0), radius=outer,
                        angle_from=Fraction(0), turns=angle),
                _line(m, ring_at_angle, ring_in),
            ]
            circle = [_full_circle(m, puncture, rr, angle)]
            back = [
                _line(m, ring_in, ring_at_angle),
                Segment("arc", m, center=RC(0), radius=outer,
                        angle_from=angle, turns=-angle),
                _line(m, ring_start, RationalComplex(Fraction(outer), dip.im)),
                _line(m, RationalComplex(Fraction(outer), dip.im),
                      RationalComplex(v0.re, dip.im)),
                _line(m, RationalComplex(v0.re, dip.im), v0),
            ]
            loops.append(
                ParameterLoop(
                    f"zero-transport-{i}-{j}", "main",
                    tuple(out_path + circle + back),
                )
            )
    return loops


def builtin_loop(fam: FamilySpec, label: str) -> ParameterLoop:
    for loop in builtin_loops(fam):
        if loop.label == label:
            loop.check_closed()
            return loop
    raise FamilyError(
        f"unknown loop {label!r} for family {fam.name}; "
        f"available: {[lo.label for lo in builtin_loops(fam)]}"
    )


# ---------------------------------------------------------------------------
# JSON declaration of families and loops
# ---------------------------------------------------------------------------

def loop_to_json(loop: ParameterLoop) -> dict:
    segs = []
    for seg in loop.segments:
        entry = {
            "kind": seg.kind,
            "map": {
                "base": {k: v.to_json() for k, v in seg.map.base},
                "coeff": {k: v.to_json() for k, v in seg.map.coeff},
            },
        }
        if seg.kind == "line":
            entry["start"] = seg.start.to_json()
            entry["end"] = seg.end.to_json()
        else:
            entry.update(
                center=seg.center.to_json(),
                radius=_rat_text(seg.radius),
                angle_from=_rat_text(seg.angle_from),
                turns=_rat_text(seg.turns),
            )
        segs.append(entry)
    return {"label": loop.label, "chart": loop.chart, "segments": segs}


def loop_from_json(data: Mapping) -> ParameterLoop:
    segs = []
    for entry in data["segments"]:
        m = AffineMap(
            tuple(sorted(
                (k, RationalComplex.from_json(v))
                for k, v in entry["map"]["base"].items()
            )),
            tuple(sorted(
                (k, RationalComplex.from_json(v))
                for k, v in entry["map"]["coeff"].items()
            )),
        )
        if entry["kind"] == "line":
            segs.append(_line(m, RationalComplex.from_json(entry["start"]),
                              RationalComplex.from_json(entry["end"])))
        else:
            segs.append(Segment(
                "arc", m,
                center=RationalComplex.from_json(entry["center"]),
                radius=Fraction(entry["radius"]),
                angle_from=Fraction(entry["angle_from"]),
                turns=Fraction(entry["turns"]),
            ))
    return ParameterLoop(data["label"], data.get("chart", "main"), tuple(segs))


def family_from_json(data: Mapping) -> FamilySpec:
    return make_family(
        data["family"],
        int(data["n"]),
        int(data.get("l", 0)),
        Fraction(data.get("eps", "1/20")),
        Fraction(data.get("eps2", "1/20")),
    )
