"""Exact multivariate polynomial arithmetic and elimination.

Sparse integer-coefficient polynomials over named variables (x, y and the
parameter families l<i>, xi<i>, z<i>), Sylvester resultants computed by
fraction-free Bareiss elimination, the discriminant identities for the
cubic-in-y families, the cuspidal and degeneration equations of their
parameter discriminants, and the squared/cubed-factor splitting of
Weierstrass coefficient data.

Everything here is exact; the only division provided is exact division
(remainder checked), plus univariate gcd which the factor splitting needs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence, Union


class PolyError(ValueError):
    pass


_VAR_RE = re.compile(r"^(x|y|l(\d+)|xi(\d+)|z(\d+))$")


def _var_key(name: str) -> tuple:
    m = _VAR_RE.match(name)
    if not m:
        raise PolyError(f"unknown variable {name!r}")
    if name == "x":
        return (0, 0)
    if name == "y":
        return (1, 0)
    rank = {"l": 2, "x": 3, "z": 4}[name[0]]
    if name.startswith("xi"):
        rank = 3
        idx = int(name[2:])
    else:
        idx = int(name[1:])
    return (rank, idx)


class MultiPoly:
    """Sparse polynomial with arbitrary-precision integer coefficients.

    Immutable; ``variables`` is kept sorted in the canonical order and no
    zero coefficient is ever stored.
    """

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], int],
    ) -> None:
        order = sorted(dict.fromkeys(variables), key=_var_key)
        remap = [order.index(v) for v in variables]
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            if coeff == 0:
                continue
            new = [0] * len(order)
            for pos, e in enumerate(exps):
                if e:
                    new[remap[pos]] += e
            key = tuple(new)
            clean[key] = clean.get(key, 0) + coeff
            if clean[key] == 0:
                del clean[key]
        # drop variables that no longer occur
        used = [
            k for k, v in enumerate(order) if any(e[k] for e in clean)
        ]
        object.__setattr__(self, "variables", tuple(order[k] for k in used))
        object.__setattr__(
            self,
            "terms",
            {tuple(e[k] for k in used): c for e, c in clean.items()},
        )

    def __setattr__(self, *args) -> None:  # pragma: no cover
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls((), {(): int(c)} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls((), {})

    # -- basic structure -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> int:
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise PolyError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def _aligned(self, other: "MultiPoly") -> tuple[tuple[str, ...], dict, dict]:
        allvars = tuple(
            sorted(set(self.variables) | set(other.variables), key=_var_key)
        )

        def remap(p: "MultiPoly") -> dict:
            idx = [allvars.index(v) for v in p.variables]
            out = {}
            for exps, c in p.terms.items():
                key = [0] * len(allvars)
                for pos, e in enumerate(exps):
                    key[idx[pos]] = e
                out[tuple(key)] = c
            return out

        return allvars, remap(self), remap(other)

    # -- ring operations --------------------------------------------------
    def __add__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        allvars, a, b = self._aligned(other)
        for k, c in b.items():
            a[k] = a.get(k, 0) + c
        return MultiPoly(allvars, a)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return self + (-other if isinstance(other, MultiPoly) else -other)

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly.constant(other) - self

    def __mul__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero()
            return MultiPoly(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        allvars, a, b = self._aligned(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(allvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise PolyError("negative powers are not polynomials")
        out = MultiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure in one variable ----------------------------------------
    def degree(self, var: str) -> int:
        """Degree in var; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        if var not in self.variables:
            return 0
        k = self.variables.index(var)
        return max(e[k] for e in self.terms)

    def coefficients_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Split into coefficient polynomials of powers of var."""
        if var not in self.variables:
            return {} if self.is_zero() else {0: self}
        k = self.variables.index(var)
        rest = tuple(v for v in self.variables if v != var)
        buckets: dict[int, dict] = {}
        for exps, c in self.terms.items():
            key = tuple(e for pos, e in enumerate(exps) if pos != k)
            buckets.setdefault(exps[k], {})[key] = c
        return {d: MultiPoly(rest, t) for d, t in buckets.items()}

    def leading_coefficient(self, var: str) -> "MultiPoly":
        d = self.degree(var)
        if d < 0:
            return MultiPoly.zero()
        return self.coefficients_in(var).get(d, MultiPoly.zero())

    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.variables:
            return MultiPoly.zero()
        k = self.variables.index(var)
        out = {}
        for exps, c in self.terms.items():
            if exps[k] == 0:
                continue
            key = tuple(e - 1 if pos == k else e for pos, e in enumerate(exps))
            out[key] = out.get(key, 0) + c * exps[k]
        return MultiPoly(self.variables, out)

    def substitute(
        self, values: Mapping[str, Union["MultiPoly", int, Fraction]]
    ) -> "MultiPoly":
        """Exact substitution of integers, Fractions or polynomials.

        Fractional values must clear denominators in the result; otherwise a
        PolyError is raised.
        """
        out_num = MultiPoly.zero()
        denom = 1
        for exps, c in self.terms.items():
            term_num: MultiPoly | None = MultiPoly.constant(c)
            term_den = 1
            for pos, e in enumerate(exps):
                if not e:
                    continue
                name = self.variables[pos]
                if name in values:
                    v = values[name]
                    if isinstance(v, Fraction):
                        term_num = term_num * (v.numerator**e)
                        term_den *= v.denominator**e
                    elif isinstance(v, int):
                        term_num = term_num * (v**e)
                    else:
                        term_num = term_num * (v**e)
                else:
                    term_num = term_num * MultiPoly.variable(name) ** e
            # bring to the common denominator
            common = denom * term_den // gcd(denom, term_den)
            out_num = out_num * (common // denom) + term_num * (common // term_den)
            denom = common
        if denom != 1:
            q, r = _int_div_content(out_num, denom)
            if r:
                raise PolyError("substitution produced non-integer coefficients")
            return q
        return out_num

    def eval_numeric(self, point: Mapping[str, complex]) -> complex:
        out = 0j
        for exps, c in self.terms.items():
            val = complex(c)
            for pos, e in enumerate(exps):
                if e:
                    val *= point[self.variables[pos]] ** e
            out += val
        return out

    # -- content and division ----------------------------------------------
    def content(self) -> int:
        """Nonnegative gcd of all integer coefficients."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def primitive(self) -> "MultiPoly":
        """Divide out the content (sign preserved)."""
        g = self.content()
        if g in (0, 1):
            return self
        return MultiPoly(self.variables, {e: c // g for e, c in self.terms.items()})

    def _lead_term(self) -> tuple[tuple[int, ...], int]:
        # graded-lexicographic leading term in the canonical variable order
        key = max(self.terms, key=lambda e: (sum(e), e))
        return key, self.terms[key]

    def sort_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def exact_div(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        """Exact division; raises PolyError if the remainder is nonzero."""
        q = self.try_div(other)
        if q is None:
            raise PolyError("division is not exact")
        return q

    def try_div(self, other: Union["MultiPoly", int]) -> Optional["MultiPoly"]:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if other.is_zero():
            raise PolyError("division by zero")
        if self.is_zero():
            return MultiPoly.zero()
        allvars, rem, b = self._aligned(other)

        def lead(d: dict) -> tuple[tuple[int, ...], int]:
            key = max(d, key=lambda e: (sum(e), e))
            return key, d[key]

        lt_e, lt_c = lead(b)
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            re_, rc = lead(rem)
            diff = tuple(x - y for x, y in zip(re_, lt_e))
            if any(d < 0 for d in diff) or rc % lt_c:
                return None
            qc = rc // lt_c
            quot[diff] = quot.get(diff, 0) + qc
            for be, bc in b.items():
                key = tuple(x + y for x, y in zip(diff, be))
                nv = rem.get(key, 0) - qc * bc
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
        return MultiPoly(allvars, quot)

    # -- serialization -----------------------------------------------------
    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exps, c in self.sort_terms():
            factors = []
            for pos, e in enumerate(exps):
                if e == 1:
                    factors.append(self.variables[pos])
                elif e > 1:
                    factors.append(f"{self.variables[pos]}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if body and mag == 1:
                text = body
            elif body:
                text = f"{mag}*{body}"
            else:
                text = str(mag)
            parts.append(("- " if c < 0 else "+ ") + text)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        text = text.replace(" ", "")
        if not text:
            raise PolyError("empty polynomial text")
        if text == "0":
            return cls.zero()
        tokens = re.findall(r"[+-]?[^+-]+", text)
        out = cls.zero()
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            if not tok:
                raise PolyError("dangling sign in polynomial text")
            coeff = sign
            term = cls.constant(1)
            for factor in tok.split("*"):
                m = re.fullmatch(r"(\d+)|([a-z]+\d*)(?:\^(\d+))?", factor)
                if not m:
                    raise PolyError(f"cannot parse factor {factor!r}")
                if m.group(1):
                    coeff *= int(m.group(1))
                else:
                    name, exp = m.group(2), int(m.group(3) or 1)
                    term = term * cls.variable(name) ** exp
            out = out + term * coeff
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "variables": list(self.variables),
                "terms": [[list(e), c] for e, c in self.sort_terms()],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "MultiPoly":
        data = json.loads(text)
        return cls(
            tuple(data["variables"]),
            {tuple(e): c for e, c in data["terms"]},
        )

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"


def _expand_exps(
    p: MultiPoly, allvars: tuple[str, ...], exps: tuple[int, ...]
) -> tuple[int, ...]:
    out = [0] * len(allvars)
    for pos, e in enumerate(exps):
        out[allvars.index(p.variables[pos])] = e
    return tuple(out)


def _int_div_content(p: MultiPoly, d: int) -> tuple[MultiPoly, int]:
    terms = {}
    for e, c in p.terms.items():
        if c % d:
            return p, 1
        terms[e] = c // d
    return MultiPoly(p.variables, terms), 0


X = MultiPoly.variable("x")
Y = MultiPoly.variable("y")


def var(name: str) -> MultiPoly:
    return MultiPoly.variable(name)


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def sylvester_matrix(f: MultiPoly, g: MultiPoly, v: str) -> list[list[MultiPoly]]:
    m, n = f.degree(v), g.degree(v)
    if m <= 0 and n <= 0:
        raise PolyError(f"neither argument has positive degree in {v}")
    fc = f.coefficients_in(v)
    gc = g.coefficients_in(v)
    size = m + n
    zero = MultiPoly.zero()
    rows = []
    for k in range(n):  # rows carrying f
        row = [zero] * size
        for d in range(m + 1):
            row[k + m - d] = fc.get(d, zero)
        rows.append(row)
    for k in range(m):  # rows carrying g
        row = [zero] * size
        for d in range(n + 1):
            row[k + n - d] = gc.get(d, zero)
        rows.append(row)
    return rows


def bareiss_determinant(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant; all intermediate divisions are exact."""
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return MultiPoly.constant(1)
    sign = 1
    prev = MultiPoly.constant(1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            pivot = next(
                (r for r in range(k + 1, size) if not m[r][k].is_zero()), None
            )
            if pivot is None:
                return MultiPoly.zero()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = MultiPoly.zero()
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign > 0 else -det


def sylvester_resultant(f: MultiPoly, g: MultiPoly, v: str) -> MultiPoly:
    """Resultant in v: determinant of the Sylvester matrix, f-rows first.

    With one argument constant in v, the convention Res(c, g) = c^deg(g)
    applies; with both constant (or either zero) the elimination is
    degenerate and the zero/constant conventions below apply.
    """
    if f.is_zero() or g.is_zero():
        return MultiPoly.zero()
    m, n = f.degree(v), g.degree(v)
    if m <= 0 and n <= 0:
        raise PolyError(f"both arguments are constant in {v}")
    if m <= 0:
        return f**n
    if n <= 0:
        return g**m
    return bareiss_determinant(sylvester_matrix(f, g, v))


def discriminant(f: MultiPoly, v: str) -> MultiPoly:
    """Discriminant in v: (-1)^(d(d-1)/2) Res(f, df/dv) / lc."""
    d = f.degree(v)
    if d <= 0:
        raise PolyError(f"discriminant needs positive degree in {v}")
    res = sylvester_resultant(f, f.derivative(v), v)
    lead = f.leading_coefficient(v)
    out = res.try_div(lead)
    if out is None:
        raise PolyError("leading coefficient does not divide the resultant")
    return -out if (d * (d - 1) // 2) % 2 else out


# ---------------------------------------------------------------------------
# the cubic-in-y families
# ---------------------------------------------------------------------------

def cubic_family(p: MultiPoly, q: MultiPoly, r: MultiPoly) -> MultiPoly:
    """y^3 + 3 r y^2 - 3 p y + 2 q."""
    return Y**3 + 3 * r * Y**2 - 3 * p * Y + 2 * q


def bifurcation_poly(
    p: MultiPoly, q: MultiPoly, r: MultiPoly, a: MultiPoly
) -> MultiPoly:
    """a(x) times the y-discriminant of the cubic, integer content removed.

    For r = 0 the result is a * (p^3 - q^2) times a positive constant.
    """
    disc = discriminant(cubic_family(p, q, r), "y")
    if disc.is_zero():
        raise PolyError("non-reduced horizontal part: discriminant vanishes")
    return (a * disc).primitive()


def cusp_equation(p: MultiPoly, q: MultiPoly, r: MultiPoly) -> MultiPoly:
    """Eliminant of the locus of degenerate critical points: the resultant
    in x of p + r^2 and 2q - r^3, with integer content removed.

    A zero result signals a degenerate family (a common root at every
    parameter value)."""
    f1 = p + r * r
    f2 = 2 * q - r * r * r
    if f1.is_zero() or f2.is_zero():
        return MultiPoly.zero()
    if f1.degree("x") <= 0 and f2.degree("x") <= 0:
        raise PolyError("family without x-dependence has no cusp eliminant")
    return sylvester_resultant(f1, f2, "x").primitive()


@dataclass(frozen=True)
class FamilyShape:
    """Degree data of the cubic family: monic q of degree n, deg p <= d_p,
    deg r <= d_r, and an optional monic vertical factor of degree l."""

    n: int
    d_p: int
    d_r: int
    l: int = 0

    def __post_init__(self) -> None:
        if not (
            2 <= self.n
            and 0 <= 3 * self.d_p <= 2 * self.n
            and 0 <= 3 * self.d_r <= self.n
            and self.l >= 0
        ):
            raise PolyError(f"shape out of range: {self}")

    def monodromy_bounds_ok(self) -> bool:
        """The stronger hypothesis used for the monodromy statements (p not
        allowed to degenerate to a constant zero-degree bound)."""
        return 0 < 3 * self.d_p

    def symbolic(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        p = sum(
            (var(f"l{i}") * X**i for i in range(self.d_p + 1)), MultiPoly.zero()
        )
        q = X**self.n + sum(
            (var(f"xi{i}") * X**i for i in range(self.n)), MultiPoly.zero()
        )
        r = sum(
            (var(f"z{i}") * X**i for i in range(self.d_r + 1)), MultiPoly.zero()
        )
        return p, q, r


@dataclass
class DegenerationResult:
    poly: MultiPoly
    stripped: list[tuple[str, int]] = field(default_factory=list)
    leading_coefficient: Optional[int] = None

    def degree_in(self, v: str) -> int:
        return self.poly.degree(v)

    @property
    def normalized_leading(self) -> Optional[int]:
        """1 when the xi0-leading coefficient is a positive constant (so the
        equation is monic after dividing by it over the rationals); None when
        it depends on other parameters."""
        if self.leading_coefficient is not None and self.leading_coefficient > 0:
            return 1
        return None


def degeneration_equation(
    shape: FamilyShape,
    specialize: Mapping[str, int] | None = None,
) -> DegenerationResult:
    """Equation of parameters where the curve itself degenerates.

    Computed as the x-discriminant of the bifurcation polynomial with the
    cuspidal factors stripped: integer content, powers of the leading
    x-coefficient and powers of the cusp eliminant are divided out (each
    removal is recorded).  The result is normalized to positive leading
    coefficient in xi0, which is reported."""
    p, q, r = shape.symbolic()
    if specialize:
        p = p.substitute(specialize)
        q = q.substitute(specialize)
        r = r.substitute(specialize)
    bif = bifurcation_poly(p, q, r, MultiPoly.constant(1))
    cusp = cusp_equation(p, q, r)
    raw = sylvester_resultant(bif, bif.derivative("x"), "x")
    result = DegenerationResult(raw)

    def strip(candidate: MultiPoly, label: str) -> None:
        if candidate.is_constant() and abs(candidate.constant_value()) <= 1:
            return
        count = 0
        while True:
            quo = result.poly.try_div(candidate)
            if quo is None or quo.is_zero():
                break
            result.poly = quo
            count += 1
        if count:
            result.stripped.append((label, count))

    content = result.poly.content()
    if content > 1:
        result.poly = result.poly.primitive()
        result.stripped.append(("integer content", content))
    strip(bif.leading_coefficient("x"), "leading x-coefficient")
    strip(cusp, "cusp eliminant")
    content = result.poly.content()
    if content > 1:
        result.poly = result.poly.primitive()
        result.stripped.append(("integer content", content))
    lead = result.poly.leading_coefficient("xi0")
    if lead.is_constant() and lead.constant_value() < 0:
        result.poly = -result.poly
        lead = -lead
    if lead.is_constant():
        result.leading_coefficient = lead.constant_value()
    return result


# ---------------------------------------------------------------------------
# univariate helpers and the Weierstrass coefficient splitting
# ---------------------------------------------------------------------------

def _check_univariate(p: MultiPoly, v: str) -> None:
    if any(name != v for name in p.variables):
        raise PolyError(f"expected a polynomial in {v} only, got {p.variables}")


def univariate_gcd(f: MultiPoly, g: MultiPoly, v: str = "x") -> MultiPoly:
    """Primitive positive-leading gcd over the integers (subresultant Euclid)."""
    _check_univariate(f, v)
    _check_univariate(g, v)
    a, b = f.primitive(), g.primitive()
    if a.is_zero():
        a, b = b, a
    while not b.is_zero():
        # pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
        da, db = a.degree(v), b.degree(v)
        if da < db:
            a, b = b, a
            continue
        lc_b = b.leading_coefficient(v)
        rem = a * lc_b ** (da - db + 1)
        while not rem.is_zero() and rem.degree(v) >= db:
            d = rem.degree(v)
            factor = rem.leading_coefficient(v).exact_div(lc_b)
            rem = rem - b * factor * MultiPoly.variable(v) ** (d - db)
        a, b = b, rem.primitive()
    if a.is_zero():
        return a
    a = a.primitive()
    if a.leading_coefficient(v).constant_value() < 0:
        a = -a
    return a


@dataclass(frozen=True)
class WeierstrassSplit:
    a: MultiPoly
    p: MultiPoly
    q: MultiPoly


def weierstrass_factor(P: MultiPoly, Q: MultiPoly, l: int) -> WeierstrassSplit:
    """Split coefficient data P, Q into (a, p, q) with p a^2 = P, q a^3 = Q,
    a monic of degree l and p, q without common roots.

    Raises PolyError("fibre-type hypothesis violated") when no such
    splitting exists (wrong degrees, non-exact division, or a common root
    of the cofactors)."""
    _check_univariate(P, "x")
    _check_univariate(Q, "x")
    if P.is_zero() or Q.is_zero():
        raise PolyError("fibre-type hypothesis violated: zero coefficient data")
    dP, dQ = P.degree("x"), Q.degree("x")
    if dP % 2 or dQ % 3 or dP // 2 - l != dQ // 3 - l or dP // 2 < l:
        raise PolyError(
            f"fibre-type hypothesis violated: degrees ({dP}, {dQ}) do not fit l={l}"
        )
    if l == 0:
        a = MultiPoly.constant(1)
    else:
        # the common factor of (P, Q) is a^2 with a squarefree, so one more
        # gcd against the derivative recovers a itself
        g = univariate_gcd(P, Q)
        a = univariate_gcd(g, g.derivative("x"))
        lead = a.leading_coefficient("x")
        if a.degree("x") != l or lead.constant_value() != 1:
            raise PolyError(
                "fibre-type hypothesis violated: no monic squared factor of "
                f"degree {l}"
            )
    p = P.try_div(a * a)
    q = Q.try_div(a * a * a)
    if p is None or q is None:
        raise PolyError("fibre-type hypothesis violated: division is not exact")
    common = univariate_gcd(p, q)
    if common.degree("x") > 0:
        raise PolyError(
            "fibre-type hypothesis violated: cofactors share the root locus of "
            + common.to_text()
        )
    return WeierstrassSplit(a, p, q)
