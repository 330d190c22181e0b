"""Exact supertropical (max-plus with ghosts) linear algebra."""

from .errors import (
    BadIndicesError,
    ConstraintUnsatisfiableError,
    DegeneratePolynomialError,
    DimensionMismatchError,
    NotDefiniteError,
    NotInvertibleError,
    NotNonSingularError,
    ParseError,
    SizeCapExceededError,
    StrictlySingularError,
    SupertropicalError,
)
from .semiring import (
    NEG_INF,
    ONE,
    Element,
    add,
    format_scalar,
    ghost,
    ghost_surpasses,
    invert,
    kth_root,
    mul,
    nu_equiv,
    parse_scalar,
    power,
    tangible,
    to_ghost,
    to_tangible,
)
from .maxpoly import (
    Interval,
    Polynomial,
    RootSet,
    essential,
    format_poly,
    inflate,
    parse_poly,
    poly_add,
    poly_eval,
    poly_ghost_surpasses,
    poly_mul,
    poly_nu_equiv,
    poly_pow,
    poly_value_equal,
    poly_value_surpasses,
    roots,
)
from .tropmat import (
    DEFAULT_DET_CAP,
    Matrix,
    PseudoIdentityClass,
    SingularityClass,
    adjugate,
    classify,
    definite_form,
    determinant,
    diag,
    diag_multiplier_matrix,
    gaussian_matrix,
    hat_matrix,
    identity,
    is_definite,
    is_ghost_matrix,
    is_invertible,
    kleene_star,
    load_matrix,
    mat_add,
    mat_ghost_surpasses,
    mat_mul,
    mat_nu_equiv,
    mat_pow,
    matrix_from_dict,
    matrix_from_json,
    matrix_to_dict,
    matrix_to_json,
    neg_inf_matrix,
    nu_matrix,
    pseudo_identity_class,
    pseudo_inverse,
    pseudo_inverse_iter,
    save_matrix,
    scalar_mul,
    transposition_matrix,
)
from .spectral import (
    char_poly,
    check_eigenpair,
    conjugate,
    eigenvalues,
    eval_at_matrix,
    trace,
)
