"""Scalars of the supertropical semiring over exact rationals.

The carrier is T ∪ G ∪ {-inf}: tangible rationals T, their ghost copies G,
and -inf.  Addition is max, where a tie ghostifies the result (a + a = a^g);
multiplication is ordinary rational addition, with ghosts forming an ideal
and -inf absorbing.  Tangible 0 is the multiplicative unit, -inf the
additive one.

Values are exact rationals in canonical form: structural equality of
elements coincides with semantic equality, and ghostification is decided by
exact ties.  Integral values are stored as `int` and everything else as
`fractions.Fraction` (the two interoperate and hash alike, so this is purely
a fast path).  Elements are immutable and hashable.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NotInvertibleError, ParseError

# Element kinds.
NEG_INF_KIND = 0
TANGIBLE_KIND = 1
GHOST_KIND = 2

Rational = int | Fraction
_RationalLike = int | str | Fraction


def _canon(q: Fraction) -> Rational:
    return q.numerator if q.denominator == 1 else q


class Element:
    """One supertropical scalar: -inf, a tangible rational, or a ghost rational."""

    __slots__ = ("kind", "value")

    kind: int
    value: Rational | None

    def __init__(self, kind: int, value: Rational | None):
        self.kind = kind
        self.value = value

    # -- predicates ---------------------------------------------------------

    @property
    def is_neg_inf(self) -> bool:
        return self.kind == NEG_INF_KIND

    @property
    def is_tangible(self) -> bool:
        return self.kind == TANGIBLE_KIND

    @property
    def is_ghost(self) -> bool:
        return self.kind == GHOST_KIND

    @property
    def magnitude(self) -> Rational | None:
        """The underlying rational (None for -inf); two elements compare
        tropically through their magnitudes."""
        return self.value

    # -- operator sugar -----------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        return add(self, other)

    def __mul__(self, other: "Element") -> "Element":
        return mul(self, other)

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.kind == other.kind and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.kind, self.value))

    def __repr__(self) -> str:
        return f"Element({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


NEG_INF = Element(NEG_INF_KIND, None)
ONE = Element(TANGIBLE_KIND, 0)


def tangible(value: _RationalLike) -> Element:
    return Element(TANGIBLE_KIND, value if isinstance(value, int) else _canon(Fraction(value)))


def ghost(value: _RationalLike) -> Element:
    return Element(GHOST_KIND, value if isinstance(value, int) else _canon(Fraction(value)))


def add(a: Element, b: Element) -> Element:
    """Supertropical sum: the magnitude-larger argument; ties ghostify."""
    if a.kind == NEG_INF_KIND:
        return b
    if b.kind == NEG_INF_KIND:
        return a
    if a.value > b.value:
        return a
    if b.value > a.value:
        return b
    # Equal magnitudes: the sum is the ghost of that value.
    if a.kind == GHOST_KIND:
        return a
    if b.kind == GHOST_KIND:
        return b
    return Element(GHOST_KIND, a.value)


def mul(a: Element, b: Element) -> Element:
    """Supertropical product: magnitudes add; ghosts are an ideal; -inf absorbs."""
    if a.kind == NEG_INF_KIND or b.kind == NEG_INF_KIND:
        return NEG_INF
    kind = GHOST_KIND if (a.kind == GHOST_KIND or b.kind == GHOST_KIND) else TANGIBLE_KIND
    return Element(kind, a.value + b.value)


def power(a: Element, k: int) -> Element:
    """k-th multiplicative power, k >= 0; a^0 is the unit (tangible 0)."""
    if k < 0:
        raise ValueError("power expects a non-negative exponent; use invert for inverses")
    if k == 0:
        return ONE
    if a.kind == NEG_INF_KIND:
        return NEG_INF
    return Element(a.kind, a.value * k)


def to_ghost(a: Element) -> Element:
    """Project onto the ghost copy (fixes -inf)."""
    if a.kind == TANGIBLE_KIND:
        return Element(GHOST_KIND, a.value)
    return a


def to_tangible(a: Element) -> Element:
    """Pick the tangible representative of the magnitude (fixes -inf)."""
    if a.kind == GHOST_KIND:
        return Element(TANGIBLE_KIND, a.value)
    return a


def ghost_surpasses(a: Element, b: Element) -> bool:
    """True iff a equals b plus some ghost; the order replacing equality here.

    Concretely: a == b, or a is a ghost whose magnitude is >= that of b
    (-inf is surpassed by every ghost).
    """
    if a.kind == b.kind and a.value == b.value:
        return True
    if a.kind != GHOST_KIND:
        return False
    if b.kind == NEG_INF_KIND:
        return True
    return a.value >= b.value


def nu_equiv(a: Element, b: Element) -> bool:
    """True iff a and b have the same magnitude (equality after ghost projection)."""
    if a.kind == NEG_INF_KIND or b.kind == NEG_INF_KIND:
        return a.kind == b.kind
    return a.value == b.value


def invert(a: Element) -> Element:
    """Multiplicative inverse; only tangible scalars are invertible."""
    if a.kind != TANGIBLE_KIND:
        raise NotInvertibleError(f"{a} is not invertible (only tangible scalars are)")
    return Element(TANGIBLE_KIND, -a.value)


def kth_root(a: Element, k: int) -> Element:
    """The unique k-th root: same kind, magnitude divided by k (k >= 1)."""
    if k < 1:
        raise ValueError("kth_root expects k >= 1")
    if a.kind == NEG_INF_KIND:
        return NEG_INF
    return Element(a.kind, _canon(Fraction(a.value) / k))


# -- text form ---------------------------------------------------------------
#
# Grammar:  '-inf'  |  RATIONAL  |  RATIONAL 'g'
# where RATIONAL is an optional '-', digits, and an optional '/' digits part.
# parse_scalar(format_scalar(e)) == e, bit-exact.

_SCALAR_RE = re.compile(r"^(-?\d+(?:/\d+)?)(g?)$")


def parse_scalar(text: str) -> Element:
    s = text.strip()
    if s == "-inf":
        return NEG_INF
    m = _SCALAR_RE.match(s)
    if m is None:
        raise ParseError(f"bad scalar {text!r}: expected '-inf' or a rational like '3', '-1/2', '5g'")
    try:
        value = _canon(Fraction(m.group(1)))
    except ZeroDivisionError:
        raise ParseError(f"bad scalar {text!r}: zero denominator") from None
    kind = GHOST_KIND if m.group(2) else TANGIBLE_KIND
    return Element(kind, value)


def format_scalar(a: Element) -> str:
    if a.kind == NEG_INF_KIND:
        return "-inf"
    if a.kind == GHOST_KIND:
        return f"{a.value}g"
    return str(a.value)
