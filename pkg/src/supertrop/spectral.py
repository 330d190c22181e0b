"""Characteristic polynomials, eigenvalues, and tropical similarity."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import DimensionMismatchError, SizeCapExceededError
from .maxpoly import Polynomial, RootSet, roots
from .semiring import (
    GHOST_KIND,
    NEG_INF,
    ONE,
    Element,
    add,
    ghost_surpasses,
)
from .tropmat import (
    DEFAULT_DET_CAP,
    Matrix,
    _det_on,
    _require_square,
    identity,
    mat_mul,
    pseudo_inverse,
    scalar_mul,
    mat_add,
)


def char_poly(a: Matrix, cap: int = DEFAULT_DET_CAP) -> Polynomial:
    """Characteristic maxpolynomial of a square matrix.

    The coefficient of x^k (k < n) is the supertropical sum of the
    determinants of all (n-k) x (n-k) principal submatrices; the leading
    coefficient is the unit.  This subset-enumeration form is the primary
    definition here; det(xI + A) agrees with it pointwise and serves as an
    independent test oracle.
    """
    _require_square(a)
    n = a.rows
    if n > cap:
        raise SizeCapExceededError(f"char_poly capped at n <= {cap}, got n = {n}")
    coeffs = [NEG_INF] * (n + 1)
    coeffs[n] = ONE
    for size in range(1, n + 1):
        acc = NEG_INF
        for subset in combinations(range(n), size):
            acc = add(acc, _det_on(a.entries, a.cols, subset, subset))
        coeffs[n - size] = acc
    return Polynomial(coeffs)


def trace(a: Matrix) -> Element:
    _require_square(a)
    acc = NEG_INF
    for i in range(a.rows):
        acc = add(acc, a.at(i, i))
    return acc


def eigenvalues(a: Matrix, cap: int = DEFAULT_DET_CAP) -> RootSet:
    """Roots of the characteristic polynomial.  Corner values are tangible;
    -inf shows up as (part of) a non-corner interval, in particular as the
    degenerate point interval when the constant coefficient is -inf."""
    return roots(char_poly(a, cap))


def check_eigenpair(a: Matrix, v: Sequence[Element], alpha: Element) -> bool:
    """True iff A v ghost-surpasses alpha v entrywise.

    The vector must have no ghost entries and alpha must be tangible or
    -inf; ghost inputs are rejected rather than silently projected.
    """
    _require_square(a)
    if len(v) != a.rows:
        raise DimensionMismatchError(f"vector length {len(v)} does not match n = {a.rows}")
    if any(e.kind == GHOST_KIND for e in v):
        raise ValueError("eigenvector entries must be tangible or -inf")
    if alpha.kind == GHOST_KIND:
        raise ValueError("eigenvalue must be tangible or -inf")
    col = Matrix(a.rows, 1, v)
    av = mat_mul(a, col)
    alphav = scalar_mul(alpha, col)
    return all(ghost_surpasses(x, y) for x, y in zip(av.entries, alphav.entries))


def eval_at_matrix(f: Polynomial, a: Matrix) -> Matrix:
    """Substitute the matrix for the variable: sum of coeff(i) * A^i with
    A^0 = I, all supertropically."""
    _require_square(a)
    n = a.rows
    acc = scalar_mul(f.coeffs[0], identity(n))
    p = identity(n)
    for c in f.coeffs[1:]:
        p = mat_mul(p, a)
        if not c.is_neg_inf:
            acc = mat_add(acc, scalar_mul(c, p))
    return acc


def conjugate(a: Matrix, b: Matrix, cap: int = DEFAULT_DET_CAP) -> Matrix:
    """The conjugation pseudo_inverse(A) * B * A (defined whenever det(A)
    is not -inf)."""
    _require_square(a)
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatchError("conjugation needs matrices of equal order")
    return mat_mul(mat_mul(pseudo_inverse(a, cap), b), a)
