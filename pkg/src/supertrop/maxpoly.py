"""Univariate supertropical polynomials.

A polynomial is a dense coefficient list indexed by exponent.  Evaluation
takes the dominant monomial supertropically, so ties and ghost coefficients
ghostify the value.  Roots are the points whose value ghost-surpasses -inf;
they come in two flavours: corner roots at the crossover of two tangible
essential monomials, and non-corner intervals where a ghost essential
monomial dominates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DegeneratePolynomialError, ParseError
from .semiring import (
    GHOST_KIND,
    NEG_INF,
    NEG_INF_KIND,
    ONE,
    TANGIBLE_KIND,
    Element,
    add,
    format_scalar,
    ghost_surpasses,
    mul,
    nu_equiv,
    parse_scalar,
)


class Polynomial:
    """Dense coefficient list, exponent 0 upward; trailing -inf trimmed.

    The identically -inf polynomial is stored as the single coefficient
    (-inf,), so the leading coefficient is -inf only in that case.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Element, ...]

    def __init__(self, coeffs: Iterable[Element]):
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1].kind == NEG_INF_KIND:
            cs.pop()
        if not cs:
            cs = [NEG_INF]
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_neg_inf(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].kind == NEG_INF_KIND

    def coeff(self, exponent: int) -> Element:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return NEG_INF

    def monomials(self) -> list[tuple[int, Element]]:
        """(exponent, coefficient) pairs of the non -inf coefficients."""
        return [(i, c) for i, c in enumerate(self.coeffs) if c.kind != NEG_INF_KIND]

    def has_ghost_coeff(self) -> bool:
        return any(c.kind == GHOST_KIND for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def poly_eval(f: Polynomial, x: Element) -> Element:
    """Supertropical sum of coeff(i) * x^i."""
    acc = f.coeffs[0]
    xp = ONE
    for c in f.coeffs[1:]:
        xp = mul(xp, x)
        if c.kind != NEG_INF_KIND:
            acc = add(acc, mul(c, xp))
    return acc


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    n = max(len(f.coeffs), len(g.coeffs))
    return Polynomial(add(f.coeff(i), g.coeff(i)) for i in range(n))


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_neg_inf or g.is_neg_inf:
        return Polynomial([NEG_INF])
    out = [NEG_INF] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a.kind == NEG_INF_KIND:
            continue
        for j, b in enumerate(g.coeffs):
            if b.kind == NEG_INF_KIND:
                continue
            out[i + j] = add(out[i + j], mul(a, b))
    return Polynomial(out)


def poly_pow(f: Polynomial, m: int) -> Polynomial:
    if m < 0:
        raise ValueError("poly_pow expects m >= 0")
    acc = Polynomial([ONE])
    for _ in range(m):
        acc = poly_mul(acc, f)
    return acc


def inflate(f: Polynomial, m: int) -> Polynomial:
    """Substitute x^m for x: coefficient at exponent i moves to i*m."""
    if m < 1:
        raise ValueError("inflate expects m >= 1")
    if m == 1 or f.is_neg_inf:
        return Polynomial(f.coeffs)
    out = [NEG_INF] * ((len(f.coeffs) - 1) * m + 1)
    for i, c in enumerate(f.coeffs):
        out[i * m] = c
    return Polynomial(out)


def _essential_exponents(f: Polynomial) -> list[int]:
    """Exponents of the essential monomials.

    A monomial is essential iff deleting it changes the evaluation map
    somewhere on tangible inputs (or at -inf).  Over the points
    (exponent, magnitude) this is exactly being a strict vertex of the
    upper concave envelope: a vertex dominates alone on an interval of
    positive length, while a monomial on the interior of an envelope edge
    only ever ties the two edge endpoints, so removing it changes neither
    the value nor the ghostness anywhere.
    """
    pts = [(i, c.value) for i, c in f.monomials()]
    if not pts:
        return []
    hull: list[tuple[int, Fraction | int]] = []
    for i, v in pts:
        while len(hull) >= 2:
            i1, v1 = hull[-2]
            i2, v2 = hull[-1]
            # Drop the middle point unless it lies strictly above the chord.
            if (v2 - v1) * (i - i1) > (v - v1) * (i2 - i1):
                break
            hull.pop()
        hull.append((i, v))
    return [i for i, _ in hull]


def essential(f: Polynomial) -> Polynomial:
    """Replace every inessential coefficient with -inf (same function pointwise)."""
    keep = set(_essential_exponents(f))
    return Polynomial(c if i in keep else NEG_INF for i, c in enumerate(f.coeffs))


@dataclass(frozen=True)
class Interval:
    """Closed interval of roots.  lo is tangible or -inf; hi is tangible,
    -inf (a degenerate point at -inf), or None meaning unbounded above."""

    lo: Element
    hi: Element | None

    def contains(self, x: Element) -> bool:
        if x.kind == NEG_INF_KIND:
            return self.lo.kind == NEG_INF_KIND
        if self.hi is not None and self.hi.kind == NEG_INF_KIND:
            return False
        if self.lo.kind != NEG_INF_KIND and x.value < self.lo.value:
            return False
        if self.hi is not None and x.value > self.hi.value:
            return False
        return True

    def __str__(self) -> str:
        hi = "+inf" if self.hi is None else format_scalar(self.hi)
        return f"[{format_scalar(self.lo)}, {hi}]"


@dataclass(frozen=True)
class RootSet:
    """Corner roots with multiplicities plus non-corner root intervals."""

    corner: tuple[tuple[Element, int], ...]
    noncorner: tuple[Interval, ...]

    def corner_values(self) -> tuple[Element, ...]:
        return tuple(v for v, _ in self.corner)

    def contains(self, x: Element) -> bool:
        """Membership by magnitude (ghost inputs are projected)."""
        if x.kind != NEG_INF_KIND and any(
            v.value == x.value for v, _ in self.corner
        ):
            return True
        return any(iv.contains(x) for iv in self.noncorner)

    def __str__(self) -> str:
        corner = ", ".join(f"({format_scalar(v)}, {m})" for v, m in self.corner) or "none"
        noncorner = ", ".join(str(iv) for iv in self.noncorner) or "none"
        return f"corner: {corner}; noncorner: {noncorner}"


def roots(f: Polynomial) -> RootSet:
    """Corner and non-corner roots of f.

    Working on the essential form, the crossover between consecutive
    essential monomials a_i x^i and a_j x^j (i < j) sits at the (j-i)-th
    root of a_i / a_j.  A crossover of two tangible monomials is a corner
    root of multiplicity j - i.  A ghost essential monomial dominates a
    closed interval on which every point is a root; a crossover against a
    ghost monomial is swallowed by that interval rather than listed as a
    corner.  If the constant coefficient is absent the single point -inf
    is a root as well.
    """
    if f.is_neg_inf:
        raise DegeneratePolynomialError("every point is a root of the -inf polynomial")
    es = essential(f)
    mons = es.monomials()
    # Crossover magnitudes between consecutive essential monomials.
    cross: list[Fraction | int] = []
    for (i, a), (j, b) in zip(mons, mons[1:]):
        q = Fraction(a.value - b.value, j - i)
        cross.append(q.numerator if q.denominator == 1 else q)

    corner: list[tuple[Element, int]] = []
    noncorner: list[Interval] = []
    for t, ((i, a), (j, b)) in enumerate(zip(mons, mons[1:])):
        if a.kind == TANGIBLE_KIND and b.kind == TANGIBLE_KIND:
            corner.append((Element(TANGIBLE_KIND, cross[t]), j - i))
    for t, (i, a) in enumerate(mons):
        if a.kind != GHOST_KIND:
            continue
        lo = NEG_INF if t == 0 else Element(TANGIBLE_KIND, cross[t - 1])
        hi = None if t == len(mons) - 1 else Element(TANGIBLE_KIND, cross[t])
        noncorner.append(Interval(lo, hi))
    # Merge intervals sharing an endpoint (consecutive ghost monomials).
    merged: list[Interval] = []
    for iv in noncorner:
        if merged and merged[-1].hi is not None and iv.lo.kind != NEG_INF_KIND \
                and merged[-1].hi.value == iv.lo.value:
            merged[-1] = Interval(merged[-1].lo, iv.hi)
        else:
            merged.append(iv)
    # -inf is a root whenever the constant term is absent; if the lowest
    # essential monomial is a ghost its interval already starts at -inf.
    lowest_exp, lowest_coeff = mons[0]
    if lowest_exp > 0 and lowest_coeff.kind == TANGIBLE_KIND:
        merged.insert(0, Interval(NEG_INF, NEG_INF))
    return RootSet(tuple(corner), tuple(merged))


def poly_ghost_surpasses(f: Polynomial, g: Polynomial) -> bool:
    """Coefficient-wise ghost surpassing (shorter operand padded with -inf)."""
    n = max(len(f.coeffs), len(g.coeffs))
    return all(ghost_surpasses(f.coeff(i), g.coeff(i)) for i in range(n))


def _comparison_grid(f: Polynomial, g: Polynomial) -> list[Element]:
    """Tangible points that decide any pointwise comparison of f and g.

    Both maps are piecewise linear in the magnitude with kind changes only
    where two monomials tie, so it suffices to sample every pairwise
    crossover of the combined monomials plus a midpoint inside each cell
    and a margin on both unbounded sides.
    """
    mons = f.monomials() + g.monomials()
    xs = set()
    for idx, (i, a) in enumerate(mons):
        for j, b in mons[idx + 1:]:
            if i != j:
                q = Fraction(a.value - b.value, j - i)
                xs.add(q.numerator if q.denominator == 1 else q)
    if not xs:
        return [Element(TANGIBLE_KIND, 0)]
    pts = sorted(xs)
    grid = [pts[0] - 1]
    for k, x in enumerate(pts):
        grid.append(x)
        if k + 1 < len(pts):
            mid = Fraction(x + pts[k + 1], 2)
            grid.append(mid.numerator if mid.denominator == 1 else mid)
    grid.append(pts[-1] + 1)
    return [Element(TANGIBLE_KIND, x) for x in grid]


def poly_value_surpasses(f: Polynomial, g: Polynomial) -> bool:
    """True iff eval(f, x) ghost-surpasses eval(g, x) at every point.

    Decided exactly by sampling the comparison grid together with -inf;
    this is the functional counterpart of poly_ghost_surpasses and is
    strictly weaker than it.
    """
    if not ghost_surpasses(poly_eval(f, NEG_INF), poly_eval(g, NEG_INF)):
        return False
    return all(ghost_surpasses(poly_eval(f, x), poly_eval(g, x))
               for x in _comparison_grid(f, g))


def poly_value_equal(f: Polynomial, g: Polynomial) -> bool:
    """True iff f and g define the same map, i.e. equal essential forms."""
    if poly_eval(f, NEG_INF) != poly_eval(g, NEG_INF):
        return False
    return all(poly_eval(f, x) == poly_eval(g, x) for x in _comparison_grid(f, g))


def poly_nu_equiv(f: Polynomial, g: Polynomial) -> bool:
    n = max(len(f.coeffs), len(g.coeffs))
    return all(nu_equiv(f.coeff(i), g.coeff(i)) for i in range(n))


# -- text form ---------------------------------------------------------------
#
# Comma-separated coefficients from exponent 0 upward in the scalar grammar,
# e.g. '2, 2, 0' for x^2 + 2x + 2.


def parse_poly(text: str) -> Polynomial:
    parts = text.split(",")
    if not parts or not text.strip():
        raise ParseError("empty polynomial text")
    return Polynomial(parse_scalar(p) for p in parts)


def format_poly(f: Polynomial) -> str:
    return ", ".join(format_scalar(c) for c in f.coeffs)
