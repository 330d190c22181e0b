"""Shared test helpers: compact builders and independent oracles."""

from itertools import permutations

from supertrop import (
    Matrix,
    NEG_INF,
    ONE,
    Polynomial,
    add,
    mul,
    parse_scalar,
)


def el(s: str):
    return parse_scalar(s)


def mat(s: str) -> Matrix:
    """Build a matrix from 'row; row; ...' with space-separated scalars."""
    return Matrix.from_rows(
        [[parse_scalar(tok) for tok in row.split()] for row in s.split(";")]
    )


def poly(s: str) -> Polynomial:
    """Coefficients from exponent 0 upward, comma separated."""
    return Polynomial(parse_scalar(p) for p in s.split(","))


def naive_det(a: Matrix):
    """Independent permanent oracle: fold the scalar semiring ops over every
    permutation track, one at a time."""
    assert a.is_square
    n = a.rows
    acc = NEG_INF
    for perm in permutations(range(n)):
        track = ONE
        for i in range(n):
            track = mul(track, a.at(i, perm[i]))
        acc = add(acc, track)
    return acc
