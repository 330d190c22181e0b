"""Matrices over the supertropical semiring.

The determinant here is the tropical permanent: the supertropical sum over
all permutation tracks, so a maximum attained twice (or through a ghost
entry) comes out ghost.  Everything downstream (adjoint, pseudo-inverse,
definite forms, Kleene star) is built on exact enumeration; there is no
floating point and no assignment-problem shortcut, because such shortcuts
do not report tied optima.
"""

from __future__ import annotations

import enum
import json
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Literal, Sequence

from .errors import (
    BadIndicesError,
    DimensionMismatchError,
    NotDefiniteError,
    NotInvertibleError,
    NotNonSingularError,
    ParseError,
    SizeCapExceededError,
    StrictlySingularError,
)
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
    invert,
    mul,
    nu_equiv,
    parse_scalar,
    to_ghost,
    to_tangible,
)

DEFAULT_DET_CAP = 10


class SingularityClass(enum.Enum):
    NON_SINGULAR = "non_singular"          # det tangible
    SINGULAR = "singular"                  # det ghost
    STRICTLY_SINGULAR = "strictly_singular"  # det = -inf


class PseudoIdentityClass(enum.Enum):
    PSEUDO_IDENTITY = "pseudo_identity"
    GHOST_PSEUDO_IDENTITY = "ghost_pseudo_identity"
    NEITHER = "neither"


class Matrix:
    """Dense row-major matrix of Elements; immutable."""

    __slots__ = ("rows", "cols", "entries")

    rows: int
    cols: int
    entries: tuple[Element, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[Element]):
        es = tuple(entries)
        if rows < 1 or cols < 1:
            raise DimensionMismatchError("matrix dimensions must be positive")
        if len(es) != rows * cols:
            raise DimensionMismatchError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(es)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = es

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Element]]) -> "Matrix":
        if not rows or not rows[0]:
            raise DimensionMismatchError("matrix needs at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(len(rows), ncols, (e for r in rows for e in r))

    def at(self, i: int, j: int) -> Element:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Element, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_rows(self) -> list[list[Element]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn: Callable[[Element], Element]) -> "Matrix":
        return Matrix(self.rows, self.cols, (fn(e) for e in self.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_scalar(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def identity(n: int) -> Matrix:
    return Matrix(n, n, (ONE if i == j else NEG_INF for i in range(n) for j in range(n)))


def diag(values: Sequence[Element]) -> Matrix:
    n = len(values)
    return Matrix(n, n, (values[i] if i == j else NEG_INF for i in range(n) for j in range(n)))


def neg_inf_matrix(rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, (NEG_INF for _ in range(rows * cols)))


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise DimensionMismatchError(f"expected a square matrix, got {a.rows}x{a.cols}")


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatchError("entrywise sum needs equal shapes")
    return Matrix(a.rows, a.cols, (add(x, y) for x, y in zip(a.entries, b.entries)))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            acc = NEG_INF
            for k in range(a.cols):
                acc = add(acc, mul(arow[k], b.at(k, j)))
            out.append(acc)
    return Matrix(a.rows, b.cols, out)


def scalar_mul(c: Element, a: Matrix) -> Matrix:
    return a.map(lambda e: mul(c, e))


def mat_pow(a: Matrix, k: int) -> Matrix:
    _require_square(a)
    if k < 0:
        raise ValueError("mat_pow expects k >= 0")
    acc = identity(a.rows)
    for _ in range(k):
        acc = mat_mul(acc, a)
    return acc


@lru_cache(maxsize=None)
def _perms(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(k)))


def _det_on(entries: tuple[Element, ...], ncols: int,
            row_idx: Sequence[int], col_idx: Sequence[int]) -> Element:
    """Permanent of the submatrix given by row_idx x col_idx, as one fused
    enumeration: tracks through -inf are skipped, the best magnitude is kept,
    and the result ghosts when the best is tied or runs through a ghost."""
    k = len(row_idx)
    if k == 0:
        return ONE
    best = None
    best_ghost = False
    for perm in _perms(k):
        val = 0
        has_ghost = False
        dead = False
        for t in range(k):
            e = entries[row_idx[t] * ncols + col_idx[perm[t]]]
            kd = e.kind
            if kd == NEG_INF_KIND:
                dead = True
                break
            if kd == GHOST_KIND:
                has_ghost = True
            val += e.value
        if dead:
            continue
        if best is None or val > best:
            best = val
            best_ghost = has_ghost
        elif val == best:
            best_ghost = True
    if best is None:
        return NEG_INF
    return Element(GHOST_KIND if best_ghost else TANGIBLE_KIND, best)


def determinant(a: Matrix, cap: int = DEFAULT_DET_CAP) -> Element:
    """Tropical permanent over all n! permutation tracks (n <= cap)."""
    _require_square(a)
    if a.rows > cap:
        raise SizeCapExceededError(f"determinant capped at n <= {cap}, got n = {a.rows}")
    idx = range(a.rows)
    return _det_on(a.entries, a.cols, idx, idx)


def classify(a: Matrix, cap: int = DEFAULT_DET_CAP) -> SingularityClass:
    d = determinant(a, cap)
    if d.kind == TANGIBLE_KIND:
        return SingularityClass.NON_SINGULAR
    if d.kind == GHOST_KIND:
        return SingularityClass.SINGULAR
    return SingularityClass.STRICTLY_SINGULAR


def adjugate(a: Matrix, cap: int = DEFAULT_DET_CAP) -> Matrix:
    """Entry (i, j) is the determinant of the minor deleting row j, column i.

    The minor of a 1x1 matrix is empty and its determinant is the unit, so
    adjugate([[a]]) = [[0]].
    """
    _require_square(a)
    n = a.rows
    if n - 1 > cap:
        raise SizeCapExceededError(f"adjugate minors capped at n <= {cap}")
    out = []
    all_idx = list(range(n))
    for i in range(n):
        cols = [c for c in all_idx if c != i]
        for j in range(n):
            rows = [r for r in all_idx if r != j]
            out.append(_det_on(a.entries, a.cols, rows, cols))
    return Matrix(n, n, out)


def pseudo_inverse(a: Matrix, cap: int = DEFAULT_DET_CAP) -> Matrix:
    """The adjoint rescaled by the determinant: (1/det) adj(A) when det is
    tangible, and the ghost of that scaling when det is ghost.  Undefined
    for strictly singular matrices."""
    d = determinant(a, cap)
    if d.kind == NEG_INF_KIND:
        raise StrictlySingularError("pseudo-inverse undefined: det = -inf")
    if d.kind == TANGIBLE_KIND:
        scale = invert(d)
    else:
        scale = to_ghost(invert(to_tangible(d)))
    return scalar_mul(scale, adjugate(a, cap))


def pseudo_inverse_iter(a: Matrix, k: int, cap: int = DEFAULT_DET_CAP) -> Matrix:
    if k < 1:
        raise ValueError("pseudo_inverse_iter expects k >= 1")
    out = a
    for _ in range(k):
        out = pseudo_inverse(out, cap)
    return out


def pseudo_identity_class(m: Matrix, cap: int = DEFAULT_DET_CAP) -> PseudoIdentityClass:
    """Classify against the two pseudo-identity patterns: tangible-0 diagonal
    (plus non-singularity) or ghost-0 diagonal (plus singularity), ghost or
    -inf off the diagonal, and multiplicative idempotence."""
    _require_square(m)
    n = m.rows
    diag_entries = [m.at(i, i) for i in range(n)]
    if all(e == ONE for e in diag_entries):
        want = PseudoIdentityClass.PSEUDO_IDENTITY
    elif all(e.kind == GHOST_KIND and e.value == 0 for e in diag_entries):
        want = PseudoIdentityClass.GHOST_PSEUDO_IDENTITY
    else:
        return PseudoIdentityClass.NEITHER
    for i in range(n):
        for j in range(n):
            if i != j and m.at(i, j).kind == TANGIBLE_KIND:
                return PseudoIdentityClass.NEITHER
    if mat_mul(m, m) != m:
        return PseudoIdentityClass.NEITHER
    cls = classify(m, cap)
    if want is PseudoIdentityClass.PSEUDO_IDENTITY and cls is SingularityClass.NON_SINGULAR:
        return want
    if want is PseudoIdentityClass.GHOST_PSEUDO_IDENTITY and cls is SingularityClass.SINGULAR:
        return want
    return PseudoIdentityClass.NEITHER


def is_definite(a: Matrix, cap: int = DEFAULT_DET_CAP) -> bool:
    """Tangible 0 on the whole diagonal and determinant exactly tangible 0."""
    _require_square(a)
    if any(a.at(i, i) != ONE for i in range(a.rows)):
        return False
    return determinant(a, cap) == ONE


def _dominant_permutation(a: Matrix) -> tuple[int, ...]:
    """The unique permutation track attaining a tangible determinant."""
    n = a.rows
    best = None
    best_perm: tuple[int, ...] | None = None
    for perm in _perms(n):
        val = 0
        dead = False
        for i in range(n):
            e = a.at(i, perm[i])
            if e.kind == NEG_INF_KIND:
                dead = True
                break
            val += e.value
        if dead:
            continue
        if best is None or val > best:
            best = val
            best_perm = perm
    assert best_perm is not None
    return best_perm


Side = Literal["left", "right"]


def definite_form(a: Matrix, side: Side = "left",
                  cap: int = DEFAULT_DET_CAP) -> tuple[Matrix, Matrix]:
    """Factor a non-singular matrix through a definite one.

    Returns (conductor, definite) with A = conductor * definite for
    side='left' and A = definite * conductor for side='right'.  The
    conductor is a generalized permutation matrix carrying det(A): it holds
    the entries of the unique dominant permutation track, and the definite
    factor is A with that track rescaled onto a tangible-0 diagonal.  The
    factorization is verified before returning.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    det = determinant(a, cap)
    if det.kind != TANGIBLE_KIND:
        raise NotNonSingularError("definite form needs a tangible determinant")
    n = a.rows
    pi = _dominant_permutation(a)
    track = [a.at(i, pi[i]) for i in range(n)]
    conductor_entries = [[NEG_INF] * n for _ in range(n)]
    for i in range(n):
        conductor_entries[i][pi[i]] = track[i]
    conductor = Matrix.from_rows(conductor_entries)

    definite_rows = [[NEG_INF] * n for _ in range(n)]
    if side == "left":
        # Row pi[i] of the definite factor is row i of A divided by its
        # dominant entry.
        for i in range(n):
            inv = invert(track[i])
            for j in range(n):
                definite_rows[pi[i]][j] = mul(inv, a.at(i, j))
    else:
        # Column i of the definite factor is column pi[i] of A divided by
        # the dominant entry of row i.
        for i in range(n):
            inv = invert(track[i])
            for r in range(n):
                definite_rows[r][i] = mul(a.at(r, pi[i]), inv)
    definite = Matrix.from_rows(definite_rows)

    product = mat_mul(conductor, definite) if side == "left" else mat_mul(definite, conductor)
    assert product == a, "definite factorization failed to reassemble the input"
    assert is_definite(definite, cap), "definite factor is not definite"
    assert determinant(conductor, cap) == det, "conductor does not carry det(A)"
    return conductor, definite


def transposition_matrix(n: int, i: int, j: int) -> Matrix:
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise BadIndicesError(f"transposition needs distinct indices in range, got {i}, {j}")
    rows = identity(n).to_rows()
    rows[i], rows[j] = rows[j], rows[i]
    return Matrix.from_rows(rows)


def diag_multiplier_matrix(n: int, i: int, alpha: Element) -> Matrix:
    if not 0 <= i < n:
        raise BadIndicesError(f"index {i} out of range for n = {n}")
    if alpha.kind != TANGIBLE_KIND:
        raise NotInvertibleError("diagonal multiplier must be a tangible scalar")
    values = [ONE] * n
    values[i] = alpha
    return diag(values)


def gaussian_matrix(n: int, i: int, j: int, r: Element) -> Matrix:
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise BadIndicesError(f"gaussian matrix needs distinct indices in range, got {i}, {j}")
    rows = identity(n).to_rows()
    rows[i][j] = r
    return Matrix.from_rows(rows)


def is_invertible(a: Matrix) -> bool:
    """True iff the matrix is a generalized permutation matrix: exactly one
    entry per row and per column is not -inf, and that entry is tangible."""
    if not a.is_square:
        return False
    n = a.rows
    col_seen = [0] * n
    for i in range(n):
        hits = [j for j in range(n) if a.at(i, j).kind != NEG_INF_KIND]
        if len(hits) != 1 or a.at(i, hits[0]).kind != TANGIBLE_KIND:
            return False
        col_seen[hits[0]] += 1
    return all(c == 1 for c in col_seen)


def kleene_star(a: Matrix, cap: int = DEFAULT_DET_CAP,
                verify_stabilization: bool = False) -> Matrix:
    """Tropical closure I + A + A^2 + ... of a definite matrix, truncated at
    exponent n-1 where it stabilizes.

    The star is the tropical-side object: it is computed on magnitudes and
    returned with tangible entries, and is magnitude-equivalent to both
    pseudo_inverse(A) and mat_pow(A, n-1).  With verify_stabilization the
    sum is also iterated to its fixpoint and checked against the truncation.
    """
    if not is_definite(a, cap):
        raise NotDefiniteError("kleene star requires a definite matrix")
    n = a.rows
    grid = [e.value for e in a.entries]  # None encodes -inf

    def step(p: list) -> list:
        nxt: list = [None] * (n * n)
        for i in range(n):
            for j in range(n):
                best = None
                for t in range(n):
                    x = p[i * n + t]
                    y = grid[t * n + j]
                    if x is None or y is None:
                        continue
                    v = x + y
                    if best is None or v > best:
                        best = v
                nxt[i * n + j] = best
        return nxt

    def combine(x: list, y: list) -> list:
        return [a_ if (b_ is None or (a_ is not None and a_ >= b_)) else b_
                for a_, b_ in zip(x, y)]

    ident = [0 if i % (n + 1) == 0 else None for i in range(n * n)]
    acc, p = list(ident), list(ident)
    for _ in range(n - 1):
        p = step(p)
        acc = combine(acc, p)
    if verify_stabilization:
        fix, q, guard = list(acc), list(p), 0
        while True:
            q = step(q)
            grown = combine(fix, q)
            if grown == fix:
                break
            fix = grown
            guard += 1
            assert guard <= 4 * n + 4, "star failed to stabilize"
        assert fix == acc, "truncated star disagrees with the fixpoint"
    return Matrix(n, n, (NEG_INF if v is None else Element(TANGIBLE_KIND, v) for v in acc))


def mat_ghost_surpasses(a: Matrix, b: Matrix) -> bool:
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatchError("ghost surpassing needs equal shapes")
    return all(ghost_surpasses(x, y) for x, y in zip(a.entries, b.entries))


def mat_nu_equiv(a: Matrix, b: Matrix) -> bool:
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatchError("magnitude comparison needs equal shapes")
    return all(nu_equiv(x, y) for x, y in zip(a.entries, b.entries))


def is_ghost_matrix(a: Matrix) -> bool:
    """True iff every entry is ghost or -inf."""
    return all(e.kind != TANGIBLE_KIND for e in a.entries)


def hat_matrix(a: Matrix) -> Matrix:
    return a.map(to_tangible)


def nu_matrix(a: Matrix) -> Matrix:
    return a.map(to_ghost)


# -- JSON file format ---------------------------------------------------------
#
# {"rows": n, "cols": m, "entries": [["3", "-1/2g", ...], ...]}  (row-major,
# scalar grammar strings, strict: unknown keys rejected).


def matrix_to_dict(a: Matrix) -> dict:
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[format_scalar(e) for e in a.row(i)] for i in range(a.rows)],
    }


def matrix_from_dict(d: object) -> Matrix:
    if not isinstance(d, dict):
        raise ParseError("matrix JSON must be an object")
    extra = set(d) - {"rows", "cols", "entries"}
    if extra:
        raise ParseError(f"unknown keys in matrix JSON: {sorted(extra)}")
    missing = {"rows", "cols", "entries"} - set(d)
    if missing:
        raise ParseError(f"missing keys in matrix JSON: {sorted(missing)}")
    rows, cols, entries = d["rows"], d["cols"], d["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise ParseError("rows/cols must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"entries must be a list of {rows} rows")
    parsed = []
    for r in entries:
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"each row must be a list of {cols} scalars")
        for s in r:
            if not isinstance(s, str):
                raise ParseError("matrix entries must be scalar strings")
            parsed.append(parse_scalar(s))
    return Matrix(rows, cols, parsed)


def matrix_to_json(a: Matrix) -> str:
    return json.dumps(matrix_to_dict(a), indent=2) + "\n"


def matrix_from_json(text: str) -> Matrix:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return matrix_from_dict(d)


def load_matrix(path: str) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_json(fh.read())


def save_matrix(a: Matrix, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(matrix_to_json(a))
