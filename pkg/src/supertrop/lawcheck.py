"""Seeded random instance generation and mechanical law checking.

Every algebraic law the library relies on has a checker here that draws
random matrices and reports a structured verdict.  Checker failures are
library bugs and carry a replayable witness; the one exception is the
open coefficient range of the pseudo-inverse reversal conjecture, whose
violations are recorded as counterexample findings rather than failures.

All randomness flows from a single 64-bit seed; trial t uses a sub-seed
mixed from (seed, t), so reports are reproducible and trials independent.
"""

from __future__ import annotations

import dataclasses
import enum
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ConstraintUnsatisfiableError, NotDefiniteError, NotNonSingularError
from .maxpoly import (
    RootSet,
    essential,
    format_poly,
    inflate,
    poly_ghost_surpasses,
    poly_pow,
    poly_value_equal,
    poly_value_surpasses,
    roots,
)
from .semiring import (
    NEG_INF,
    ONE,
    Element,
    Rational,
    format_scalar,
    ghost,
    ghost_surpasses,
    kth_root,
    mul,
    power,
    tangible,
)
from .spectral import char_poly, conjugate, eval_at_matrix, trace
from .tropmat import (
    Matrix,
    SingularityClass,
    adjugate,
    classify,
    definite_form,
    determinant,
    is_definite,
    is_ghost_matrix,
    kleene_star,
    mat_ghost_surpasses,
    mat_mul,
    mat_nu_equiv,
    mat_pow,
    matrix_from_dict,
    matrix_to_dict,
    pseudo_inverse,
)

MAX_GEN_ATTEMPTS = 1000
_MIX = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


class Constraint(enum.Enum):
    NONE = "none"
    NON_SINGULAR = "non_singular"
    DEFINITE = "definite"
    TRIANGULAR = "triangular"
    INVERTIBLE = "invertible"


@dataclass(frozen=True)
class GenConfig:
    """Sampling configuration for random matrices."""

    n: int
    numerator_range: tuple[int, int] = (-10, 10)
    denominator: int = 1
    neginf_prob: Fraction = Fraction(1, 5)
    ghost_prob: Fraction = Fraction(1, 10)
    constraint: Constraint = Constraint.NONE
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        lo, hi = self.numerator_range
        if lo > hi:
            raise ValueError("empty numerator range")
        if self.denominator < 1:
            raise ValueError("denominator must be a positive integer")
        for p in (self.neginf_prob, self.ghost_prob):
            if not 0 <= p <= 1:
                raise ValueError("probabilities must lie in [0, 1]")
        if not 0 <= self.seed <= _MASK:
            raise ValueError("seed must fit in 64 unsigned bits")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "numerator_range": list(self.numerator_range),
            "denominator": self.denominator,
            "neginf_prob": str(self.neginf_prob),
            "ghost_prob": str(self.ghost_prob),
            "constraint": self.constraint.value,
            "seed": self.seed,
        }


def _sub_seed(seed: int, trial: int) -> int:
    return (seed * _MIX + trial + 1) & _MASK


def _draw_value(rng: random.Random, cfg: GenConfig) -> Rational:
    num = rng.randint(*cfg.numerator_range)
    if cfg.denominator == 1:
        return num
    q = Fraction(num, cfg.denominator)
    return q.numerator if q.denominator == 1 else q


def _draw_entry(rng: random.Random, cfg: GenConfig) -> Element:
    if rng.random() < cfg.neginf_prob:
        return NEG_INF
    v = _draw_value(rng, cfg)
    if rng.random() < cfg.ghost_prob:
        return ghost(v)
    return tangible(v)


def _draw_negative_entry(rng: random.Random, cfg: GenConfig) -> Element:
    """An entry conditioned on carrying a negative magnitude (or -inf).

    With all off-diagonal magnitudes negative, every non-identity cycle of
    a matrix with a tangible-0 diagonal is strictly dominated, so the
    matrix is definite outright.
    """
    for _ in range(MAX_GEN_ATTEMPTS):
        e = _draw_entry(rng, cfg)
        if e.is_neg_inf or e.value < 0:
            return e
    raise ConstraintUnsatisfiableError(
        "the numerator range admits no negative off-diagonal entries"
    )


# Unconditioned definite sampling dies out quickly with n (every cycle has
# to be dominated without ties), so after this many rejections the
# off-diagonal draw switches to negative-conditioned sampling.
_DEFINITE_FREE_ATTEMPTS = 100


def _gen_with_rng(rng: random.Random, cfg: GenConfig) -> Matrix:
    n = cfg.n
    for attempt in range(MAX_GEN_ATTEMPTS):
        if cfg.constraint is Constraint.INVERTIBLE:
            perm = list(range(n))
            rng.shuffle(perm)
            entries = [NEG_INF] * (n * n)
            for i in range(n):
                entries[i * n + perm[i]] = tangible(_draw_value(rng, cfg))
            return Matrix(n, n, entries)
        if cfg.constraint is Constraint.TRIANGULAR:
            # Upper triangular with a tangible diagonal, hence non-singular.
            entries = []
            for i in range(n):
                for j in range(n):
                    if j < i:
                        entries.append(NEG_INF)
                    elif j == i:
                        entries.append(tangible(_draw_value(rng, cfg)))
                    else:
                        entries.append(_draw_entry(rng, cfg))
            return Matrix(n, n, entries)
        if cfg.constraint is Constraint.DEFINITE:
            draw = _draw_entry if attempt < _DEFINITE_FREE_ATTEMPTS else _draw_negative_entry
            entries = [
                ONE if i == j else draw(rng, cfg)
                for i in range(n)
                for j in range(n)
            ]
            a = Matrix(n, n, entries)
            if is_definite(a):
                return a
            continue
        a = Matrix(n, n, (_draw_entry(rng, cfg) for _ in range(n * n)))
        if cfg.constraint is Constraint.NONE:
            return a
        if cfg.constraint is Constraint.NON_SINGULAR \
                and classify(a) is SingularityClass.NON_SINGULAR:
            return a
    raise ConstraintUnsatisfiableError(
        f"could not satisfy {cfg.constraint.value} in {MAX_GEN_ATTEMPTS} attempts"
    )


def gen_matrix(cfg: GenConfig) -> Matrix:
    """Deterministic function of cfg (including its seed)."""
    return _gen_with_rng(random.Random(cfg.seed), cfg)


# -- checkers ------------------------------------------------------------------


@dataclass
class TrialResult:
    ok: bool
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None


def _fmt_mat(a: Matrix) -> str:
    return "; ".join(" ".join(format_scalar(e) for e in a.row(i)) for i in range(a.rows))


def chk_det_product(a: Matrix, b: Matrix) -> TrialResult:
    """det(AB) ghost-surpasses det(A) det(B)."""
    lhs = determinant(mat_mul(a, b))
    rhs = mul(determinant(a), determinant(b))
    if ghost_surpasses(lhs, rhs):
        return TrialResult(True)
    return TrialResult(False, {"det_ab": format_scalar(lhs), "det_a_det_b": format_scalar(rhs)})


def chk_adj_rules(a: Matrix) -> TrialResult:
    """det(A adj(A)) = det(A)^n and det(adj(A)) = det(A)^(n-1), exactly."""
    n = a.rows
    d = determinant(a)
    adj = adjugate(a)
    bad = {}
    lhs1 = determinant(mat_mul(a, adj))
    if lhs1 != power(d, n):
        bad["det_a_adj"] = format_scalar(lhs1)
        bad["det_pow_n"] = format_scalar(power(d, n))
    lhs2 = determinant(adj)
    if lhs2 != power(d, n - 1):
        bad["det_adj"] = format_scalar(lhs2)
        bad["det_pow_n_minus_1"] = format_scalar(power(d, n - 1))
    return TrialResult(not bad, bad)


def chk_adj_product(a: Matrix, b: Matrix) -> TrialResult:
    """adj(AB) ghost-surpasses adj(B) adj(A), entrywise."""
    lhs = adjugate(mat_mul(a, b))
    rhs = mat_mul(adjugate(b), adjugate(a))
    if mat_ghost_surpasses(lhs, rhs):
        return TrialResult(True)
    return TrialResult(False, {"adj_ab": _fmt_mat(lhs), "adj_b_adj_a": _fmt_mat(rhs)})


def chk_nabla_period(a: Matrix, kmax: int = 4) -> TrialResult:
    """Iterated pseudo-inverses have period two in magnitude from the first
    application on, and the second iterate is P A^inv P for the left
    conductor P."""
    if classify(a) is not SingularityClass.NON_SINGULAR:
        raise NotNonSingularError("period check needs a non-singular matrix")
    its = [a]
    for _ in range(kmax):
        its.append(pseudo_inverse(its[-1]))
    bad = {}
    for k in range(1, kmax - 1):
        if not mat_nu_equiv(its[k], its[k + 2]):
            bad[f"iterate_{k}_vs_{k + 2}"] = f"{_fmt_mat(its[k])} | {_fmt_mat(its[k + 2])}"
    conductor, _ = definite_form(a, "left")
    sandwich = mat_mul(mat_mul(conductor, its[1]), conductor)
    if not mat_nu_equiv(its[2], sandwich):
        bad["conductor_sandwich"] = f"{_fmt_mat(its[2])} | {_fmt_mat(sandwich)}"
    return TrialResult(not bad, bad)


def chk_definite_stabilization(a: Matrix) -> TrialResult:
    """For definite A: the pseudo-inverse equals the adjoint and is definite;
    pseudo-inverse, its square, the Kleene star, A^(n-1) and both
    pseudo-identities all share one magnitude; and powers stabilize from
    exponent n-1 on."""
    if not is_definite(a):
        raise NotDefiniteError("stabilization check needs a definite matrix")
    n = a.rows
    pinv = pseudo_inverse(a)
    bad = {}
    if pinv != adjugate(a) or not is_definite(pinv):
        bad["pseudo_inverse_vs_adjoint"] = _fmt_mat(pinv)
    chain = {
        "double_pseudo_inverse": pseudo_inverse(pinv),
        "kleene_star": kleene_star(a),
        "power_n_minus_1": mat_pow(a, n - 1),
        "right_pseudo_identity": mat_mul(a, pinv),
        "left_pseudo_identity": mat_mul(pinv, a),
    }
    for name, m in chain.items():
        if not mat_nu_equiv(pinv, m):
            bad[name] = f"{_fmt_mat(pinv)} | {_fmt_mat(m)}"
    p = chain["power_n_minus_1"]
    for k in range(n - 1, n + 2):
        nxt = mat_mul(p, a)
        if not mat_nu_equiv(p, nxt):
            bad[f"power_{k}_vs_{k + 1}"] = f"{_fmt_mat(p)} | {_fmt_mat(nxt)}"
        p = nxt
    return TrialResult(not bad, bad)


def _rootset_samples(rs: RootSet) -> list[Element]:
    """Representative points of a root set: corner values, interval
    endpoints, interior points, and -inf where an interval reaches it."""
    pts: list[Element] = [v for v, _ in rs.corner]
    for iv in rs.noncorner:
        if iv.lo.is_neg_inf:
            pts.append(NEG_INF)
            if iv.hi is not None and iv.hi.is_neg_inf:
                continue
            ref = iv.hi.value if iv.hi is not None else 0
            pts.append(tangible(ref - 3))
        else:
            pts.append(iv.lo)
        if iv.hi is not None:
            pts.append(iv.hi)
            if not iv.lo.is_neg_inf:
                q = Fraction(iv.lo.value + iv.hi.value, 2)
                pts.append(tangible(q))
        else:
            ref = iv.lo.value if not iv.lo.is_neg_inf else 0
            pts.append(tangible(ref + 3))
    return pts


def chk_similarity(a: Matrix, b: Matrix) -> TrialResult:
    """The characteristic polynomial of the conjugate A^inv B A
    ghost-surpasses that of B coefficient-wise, with equality when the
    former is ghost-free; determinant and trace surpass as well; every
    eigenvalue of B remains one of the conjugate; and B satisfies the
    conjugate's polynomial in the ghost sense."""
    if classify(a) is not SingularityClass.NON_SINGULAR:
        raise NotNonSingularError("similarity check needs a non-singular conjugator")
    bp = conjugate(a, b)
    fp = char_poly(bp)
    fb = char_poly(b)
    bad = {}
    if not poly_ghost_surpasses(fp, fb):
        bad["charpoly"] = f"{format_poly(fp)} | {format_poly(fb)}"
    if not fp.has_ghost_coeff() and fp != fb:
        bad["tangible_equality"] = f"{format_poly(fp)} | {format_poly(fb)}"
    if not ghost_surpasses(determinant(bp), determinant(b)):
        bad["det"] = f"{determinant(bp)} | {determinant(b)}"
    if not ghost_surpasses(trace(bp), trace(b)):
        bad["trace"] = f"{trace(bp)} | {trace(b)}"
    rp = roots(fp)
    missing = [x for x in _rootset_samples(roots(fb)) if not rp.contains(x)]
    if missing:
        bad["eigenvalue_containment"] = ", ".join(format_scalar(x) for x in missing)
    if not is_ghost_matrix(eval_at_matrix(fp, b)):
        bad["conjugate_poly_at_b"] = _fmt_mat(eval_at_matrix(fp, b))
    return TrialResult(not bad, bad)


def chk_charpoly_power(a: Matrix, m: int) -> TrialResult:
    """Relations between the characteristic polynomials of A and A^m.

    The inflated polynomial of A^m surpasses the m-th power of A's as a
    function (pointwise ghost surpassing, decided exactly on the
    comparison grid); when the former is ghost-free the two define the
    same map.  Corner roots transfer both ways: corner roots of A power
    up into roots of A^m, and every corner root of A^m is the m-th power
    of a corner root of A.
    """
    if m < 2:
        raise ValueError("power check expects m >= 2")
    f_a = char_poly(a)
    f_am = char_poly(mat_pow(a, m))
    lhs = inflate(f_am, m)
    rhs = poly_pow(f_a, m)
    bad = {}
    if not poly_value_surpasses(lhs, rhs):
        bad[f"value_surpassing_m{m}"] = f"{format_poly(lhs)} | {format_poly(rhs)}"
    if not f_am.has_ghost_coeff():
        if essential(lhs) != essential(rhs) or not poly_value_equal(lhs, rhs):
            bad[f"tangible_equality_m{m}"] = f"{format_poly(lhs)} | {format_poly(rhs)}"
    roots_a = roots(f_a)
    roots_am = roots(f_am)
    up = [v for v, _ in roots_a.corner if not roots_am.contains(power(v, m))]
    if up:
        bad[f"root_power_containment_m{m}"] = ", ".join(format_scalar(v) for v in up)
    corner_values_a = {v.value for v, _ in roots_a.corner}
    down = [v for v, _ in roots_am.corner if kth_root(v, m).value not in corner_values_a]
    if down:
        bad[f"root_power_onto_m{m}"] = ", ".join(format_scalar(v) for v in down)
    return TrialResult(not bad, bad)


def chk_hamilton_cayley(a: Matrix) -> TrialResult:
    """A substituted into its own characteristic polynomial is ghost."""
    val = eval_at_matrix(char_poly(a), a)
    if is_ghost_matrix(val):
        return TrialResult(True)
    return TrialResult(False, {"char_poly_at_a": _fmt_mat(val)})


_OPEN_RANGE_NOTE = "open for n >= 5 at 1 <= k <= n-3"


def chk_reversal_conjecture(a: Matrix) -> TrialResult:
    """det(A) * coeff_k(f of A^inv) ghost-surpasses coeff_(n-k)(f of A).

    Coefficients k in {0, n-2, n-1, n} are proven and asserted, as is the
    whole range when n <= 4 or A is triangular.  A violation anywhere else
    is reported as a counterexample finding, not a failure.
    """
    d = determinant(a)
    if not d.is_tangible:
        raise NotNonSingularError("conjecture check needs a non-singular matrix")
    n = a.rows
    f_a = char_poly(a)
    f_inv = char_poly(pseudo_inverse(a))
    upper = all(a.at(i, j).is_neg_inf for i in range(n) for j in range(i))
    lower = all(a.at(i, j).is_neg_inf for i in range(n) for j in range(i + 1, n))
    all_asserted = n <= 4 or upper or lower
    asserted_bad = {}
    open_bad = {}
    for k in range(n + 1):
        lhs = mul(d, f_inv.coeff(k))
        rhs = f_a.coeff(n - k)
        if ghost_surpasses(lhs, rhs):
            continue
        entry = f"{format_scalar(lhs)} does not surpass {format_scalar(rhs)}"
        if all_asserted or k in (0, n - 2, n - 1, n):
            asserted_bad[f"coefficient_{k}"] = entry
        else:
            open_bad[f"coefficient_{k}"] = entry
    counter = None
    if open_bad:
        counter = dict(open_bad)
        counter["note"] = _OPEN_RANGE_NOTE
    return TrialResult(not asserted_bad, asserted_bad, counter)


def _charpoly_power_suite(a: Matrix) -> TrialResult:
    bad = {}
    for m in (2, 3):
        r = chk_charpoly_power(a, m)
        bad.update(r.details)
    return TrialResult(not bad, bad)


# -- runner --------------------------------------------------------------------


@dataclass(frozen=True)
class CheckDef:
    constraint: Constraint
    two_matrices: bool
    fn: Callable


CHECKS: dict[str, CheckDef] = {
    "det_product": CheckDef(Constraint.NONE, True, chk_det_product),
    "adj_rules": CheckDef(Constraint.NONE, False, chk_adj_rules),
    "adj_product": CheckDef(Constraint.NONE, True, chk_adj_product),
    "nabla_period": CheckDef(Constraint.NON_SINGULAR, False, chk_nabla_period),
    "definite_stabilization": CheckDef(Constraint.DEFINITE, False, chk_definite_stabilization),
    "similarity": CheckDef(Constraint.NON_SINGULAR, True, chk_similarity),
    "charpoly_power": CheckDef(Constraint.NONE, False, _charpoly_power_suite),
    "hamilton_cayley": CheckDef(Constraint.NONE, False, chk_hamilton_cayley),
    "reversal_conjecture": CheckDef(Constraint.NON_SINGULAR, False, chk_reversal_conjecture),
}

CHECK_IDS: tuple[str, ...] = tuple(CHECKS)


@dataclass
class CheckReport:
    check_id: str
    seed: int
    config: GenConfig
    trials: int
    passes: int
    failures: list[dict]
    counterexamples: list[dict]
    elapsed_ms: float

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "check_id": self.check_id,
            "seed": self.seed,
            "config": self.config.to_dict(),
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }
        if include_timing:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2) + "\n"


def run_check(check_id: str, cfg: GenConfig, trials: int) -> CheckReport:
    """Run one checker over seeded random instances.

    Trial t draws its inputs from a sub-seed of (cfg.seed, t); the first
    matrix honours the checker's constraint, a second one (where used) is
    unconstrained.  The report is a deterministic function of
    (check_id, cfg, trials).
    """
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}; known: {', '.join(CHECK_IDS)}")
    defn = CHECKS[check_id]
    t0 = time.perf_counter()
    passes = 0
    failures: list[dict] = []
    counterexamples: list[dict] = []
    for t in range(trials):
        rng = random.Random(_sub_seed(cfg.seed, t))
        a = _gen_with_rng(rng, dataclasses.replace(cfg, constraint=defn.constraint))
        inputs = {"A": matrix_to_dict(a)}
        args = [a]
        if defn.two_matrices:
            b = _gen_with_rng(rng, dataclasses.replace(cfg, constraint=Constraint.NONE))
            inputs["B"] = matrix_to_dict(b)
            args.append(b)
        res = defn.fn(*args)
        if res.ok:
            passes += 1
        else:
            failures.append({"trial": t, "inputs": inputs, "details": res.details})
        if res.counterexample is not None:
            counterexamples.append({"trial": t, "inputs": inputs, "details": res.counterexample})
    elapsed = (time.perf_counter() - t0) * 1000.0
    return CheckReport(check_id, cfg.seed, cfg, trials, passes, failures,
                       counterexamples, elapsed)


def run_suite(cfg: GenConfig, trials: int,
              suite: str | Sequence[str] = "all") -> list[CheckReport]:
    if suite == "all":
        ids: Sequence[str] = CHECK_IDS
    elif isinstance(suite, str):
        ids = [suite]
    else:
        ids = list(suite)
    return [run_check(cid, cfg, trials) for cid in ids]


def explore_conjecture(cfg: GenConfig, trials: int) -> CheckReport:
    """Search for counterexamples to the pseudo-inverse reversal conjecture."""
    if cfg.constraint is not Constraint.NON_SINGULAR:
        raise ValueError("explorer requires cfg.constraint = NON_SINGULAR")
    return run_check("reversal_conjecture", cfg, trials)


def replay(check_id: str, inputs: dict) -> TrialResult:
    """Re-run one check on witness inputs serialized in the matrix format."""
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}")
    defn = CHECKS[check_id]
    args = [matrix_from_dict(inputs["A"])]
    if defn.two_matrices:
        args.append(matrix_from_dict(inputs["B"]))
    return defn.fn(*args)
