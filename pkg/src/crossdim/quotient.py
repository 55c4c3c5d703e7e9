"""Vector-space, inner-product and metric structure across matrix sizes.

Matrices of one shape ratio mu are added by lifting both to the least common
component index; the weighted inner product divides the Frobenius product of
those lifts by the common index, which makes it constant on equivalence
classes.  Everything here is exact.  Square roots appear only in :func:`norm`
and :func:`distance`, which return Decimals for display.

Functions taking classes also accept a bare Matrix and treat it as a
representative of its class.
"""
from decimal import Decimal
from fractions import Fraction
from math import gcd, isqrt, lcm

from .equivalence import MatrixClass, class_of, classify
from .errors import DomainError
from .matrix import frobenius_inner, frobenius_norm_sq, lift, scale, to_rational, transpose, zeros


def _rep(x):
    return x.root if isinstance(x, MatrixClass) else x


def _common_index(a, b, op):
    mu_a, p = classify(a)
    mu_b, q = classify(b)
    if mu_a != mu_b:
        raise DomainError(
            f"{op}: shape ratios differ ({a.rows}x{a.cols} has {mu_a}, {b.rows}x{b.cols} has {mu_b}); "
            "different M_mu components cannot be combined"
        )
    return p, q, lcm(p, q)


def lplus(a, b):
    p, q, t = _common_index(a, b, "lplus")
    return lift(a, t // p) + lift(b, t // q)


def lminus(a, b):
    p, q, t = _common_index(a, b, "lminus")
    return lift(a, t // p) - lift(b, t // q)


def weighted_inner(a, b):
    p, q, t = _common_index(a, b, "weighted_inner")
    return frobenius_inner(lift(a, t // p), lift(b, t // q)) / t


def weighted_norm_sq(a):
    return frobenius_norm_sq(a) / gcd(a.rows, a.cols)


def zero_class(mu):
    return MatrixClass._trusted(zeros(mu.mu_y, mu.mu_x))


def class_add(x, y):
    return class_of(lplus(_rep(x), _rep(y)))


def class_sub(x, y):
    return class_of(lminus(_rep(x), _rep(y)))


def class_scale(r, x):
    return class_of(scale(r, _rep(x)))


def class_inner(x, y):
    return weighted_inner(_rep(x), _rep(y))


def norm_sq(x):
    return weighted_norm_sq(_rep(x))


def distance_sq(x, y):
    # weighted norm is constant on classes, so the lifted difference need not be reduced
    return weighted_norm_sq(lminus(_rep(x), _rep(y)))


def sqrt_decimal(q, places=12):
    """Square root of a nonnegative rational, rounded half-up to ``places`` decimals."""
    q = Fraction(q)
    if q < 0:
        raise DomainError(f"square root of negative value {q}")
    if places < 0:
        raise DomainError(f"precision must be nonnegative, got {places}")
    # one guard digit, then round
    scaled = isqrt(q.numerator * 10 ** (2 * places + 2) // q.denominator)
    digits = (scaled + 5) // 10
    return Decimal(digits).scaleb(-places)


def exact_sqrt(q):
    """The rational square root of ``q`` if it has one, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def norm(x, places=12):
    return sqrt_decimal(norm_sq(x), places)


def distance(x, y, places=12):
    return sqrt_decimal(distance_sq(x, y), places)


def transpose_class(x):
    """<A> -> <A^T>, an isometry from the mu component onto the 1/mu component."""
    if isinstance(x, MatrixClass):
        # transposing keeps irreducibility: (C (x) I_k)^T = C^T (x) I_k
        return MatrixClass._trusted(transpose(x.root))
    return class_of(transpose(x))


def embed(x, k):
    """Representative root (x) I_k of the class of ``x``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"embed: factor must be a positive integer, got {k!r}")
    r = x.root if isinstance(x, MatrixClass) else class_of(x).root
    return lift(r, k)


def convex_path(x, y, lam):
    """The point lam*x + (1 - lam)*y on the segment from y to x, 0 <= lam <= 1."""
    lam = to_rational(lam)
    if not 0 <= lam <= 1:
        raise DomainError(f"convex_path: lambda must lie in [0, 1], got {lam}")
    a, b = _rep(x), _rep(y)
    _common_index(a, b, "convex_path")
    return class_of(lplus(scale(lam, a), scale(1 - lam, b)))

