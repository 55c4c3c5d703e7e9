"""Orthogonal projection of a class onto one component index of its shape ratio.

For a root A at index b and a target index a, both sides are compared at
t = lcm(a, b).  Cutting A (x) I_{t/b} into k x k blocks, k = t/a, the nearest
X (x) I_k is obtained blockwise: X[i, j] = trace(block(i, j)) / k.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .equivalence import MatrixClass, class_of
from .errors import DomainError
from .matrix import ZERO, Matrix, lift
from .quotient import weighted_norm_sq
from .sampling import random_matrix, trial_rng


@dataclass(frozen=True)
class ProjectionResult:
    projection: MatrixClass
    residual: MatrixClass
    target_index: int
    lift_index: int
    block_size: int
    distance_sq_to_target: Fraction
    minimizer: Matrix  # the nearest matrix at the target index, before reduction to its root
    residual_lift: Matrix  # A (x) I_{t/b} - minimizer (x) I_k at the common lift


def _as_class(x):
    return x if isinstance(x, MatrixClass) else class_of(x)


def _check_target(alpha):
    if not isinstance(alpha, int) or alpha < 1:
        raise DomainError(f"project: target index must be a positive integer, got {alpha!r}")


def block_traces(a, k):
    """Matrix of traces of the k x k blocks of ``a``, each divided by k."""
    rows, cols = a.rows // k, a.cols // k
    n = a.cols
    e = a.entries
    out = []
    for i in range(rows):
        for j in range(cols):
            top = i * k * n + j * k
            out.append(sum((e[top + r * (n + 1)] for r in range(k)), ZERO) / k)
    return Matrix._raw(rows, cols, tuple(out))


def project(x, alpha):
    _check_target(alpha)
    x = _as_class(x)
    beta = x.index
    t = lcm(alpha, beta)
    k = t // alpha
    lifted = lift(x.root, t // beta)
    c = block_traces(lifted, k)
    e = lifted - lift(c, k)
    return ProjectionResult(
        projection=class_of(c),
        residual=class_of(e),
        target_index=alpha,
        lift_index=t,
        block_size=k,
        distance_sq_to_target=weighted_norm_sq(e),
        minimizer=c,
        residual_lift=e,
    )


def residual_matrix(x, alpha):
    """Lifted residual E = A (x) I_{t/b} - C (x) I_k at the common index t."""
    return project(x, alpha).residual_lift


def verify_minimality(x, alpha, trials, seed=0, bound=10, competitors=()):
    """Check that no competitor at index ``alpha`` is closer to ``x`` than its projection.

    Competitors are ``trials`` random matrices (trial i drawn from its own
    seeded stream) plus any given explicitly.  A tie is only allowed when the
    competitor is equivalent to the projection.
    """
    x = _as_class(x)
    res = project(x, alpha)
    best = res.distance_sq_to_target
    rows, cols = x.shape_ratio.shape(alpha)
    dist = _distance_to_index(x, alpha, res.lift_index)

    def ok(cand):
        d = dist(cand)
        if d < best:
            return False
        return d > best or class_of(cand) == res.projection

    for cand in competitors:
        if not ok(cand):
            return False
    return all(ok(random_matrix(trial_rng(seed, i), rows, cols, bound)) for i in range(trials))


def _distance_to_index(x, alpha, t):
    """Exact squared distance from ``x`` to matrices at index ``alpha``, in integer arithmetic.

    Both sides are lifted to index t and the Frobenius distance of the lifts
    is summed entrywise over a common denominator, then divided by t.
    """
    lifted = lift(x.root, t // x.index)
    den = lcm(*(e.denominator for e in lifted.entries))
    big = [e.numerator * (den // e.denominator) for e in lifted.entries]
    k = t // alpha
    n = lifted.cols

    def dist(cand):
        cden = lcm(*(e.denominator for e in cand.entries))
        cbig = [e.numerator * (cden // e.denominator) for e in cand.entries]
        total = 0
        for idx, a in enumerate(big):
            r, c = divmod(idx, n)
            b = cbig[(r // k) * cand.cols + c // k] if r % k == c % k else 0
            diff = a * cden - b * den
            total += diff * diff
        return Fraction(total, t * (den * cden) ** 2)

    return dist
