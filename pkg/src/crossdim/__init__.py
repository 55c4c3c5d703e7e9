"""Exact semi-tensor product algebra and the quotient space of identity-lift classes."""
from .equivalence import (
    Factorization,
    MatrixClass,
    QuotientVector,
    ShapeRatio,
    class_of,
    classify,
    equivalent,
    equivalent_by_lift,
    is_multiple,
    lambda_gcd,
    root,
    theta,
)
from .errors import DomainError, ParseError
from .matrix import (
    Matrix,
    add,
    block,
    frobenius_inner,
    frobenius_norm_sq,
    identity,
    kron,
    lift,
    matmul,
    scale,
    sub,
    trace,
    transpose,
    zeros,
)
from .matrixio import parse_matrix
from .projection import ProjectionResult, project, residual_matrix, verify_minimality
from .quotient import (
    class_add,
    class_inner,
    class_scale,
    class_sub,
    convex_path,
    distance,
    distance_sq,
    embed,
    lminus,
    lplus,
    norm,
    norm_sq,
    transpose_class,
    weighted_inner,
    weighted_norm_sq,
    zero_class,
)
from .stp import stp

__version__ = "0.1.0"
