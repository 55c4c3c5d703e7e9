"""Identity-lift equivalence of matrices and its canonical forms.

Two matrices are equivalent when A (x) I_a == B (x) I_b for some a, b >= 1.
Each class has a unique irreducible member, its root; every other member is
root (x) I_k.  Matrices with rows/cols = mu_y/mu_x (reduced) live in the shape
component M_mu, and an m x n matrix sits at index k = gcd(m, n) there.
"""
from dataclasses import dataclass
from math import gcd, lcm

from .errors import DomainError
from .matrix import ZERO, Matrix, lift


@dataclass(frozen=True, order=True)
class ShapeRatio:
    mu_y: int
    mu_x: int

    def __post_init__(self):
        if self.mu_y < 1 or self.mu_x < 1 or gcd(self.mu_y, self.mu_x) != 1:
            raise DomainError(f"shape ratio {self.mu_y}/{self.mu_x} is not reduced and positive")

    @classmethod
    def of(cls, rows, cols):
        g = gcd(rows, cols)
        return cls(rows // g, cols // g)

    def inverse(self):
        return ShapeRatio(self.mu_x, self.mu_y)

    def shape(self, k):
        """Matrix shape of component index ``k``."""
        return (k * self.mu_y, k * self.mu_x)

    def __str__(self):
        return f"{self.mu_y}/{self.mu_x}"


@dataclass(frozen=True)
class Factorization:
    """``divisor`` tensored with I_multiplicity."""

    divisor: Matrix
    multiplicity: int

    def expand(self):
        return lift(self.divisor, self.multiplicity)


def classify(a):
    """Return (mu, k) with a.rows == k * mu.mu_y and a.cols == k * mu.mu_x."""
    k = gcd(a.rows, a.cols)
    return ShapeRatio(a.rows // k, a.cols // k), k


def is_multiple(a, k):
    """The B with a == B (x) I_k, or None when no such B exists."""
    if k < 1 or a.rows % k or a.cols % k:
        return None
    if k == 1:
        return a
    rows, cols = a.rows // k, a.cols // k
    n = a.cols
    e = a.entries
    out = []
    for bi in range(rows):
        for bj in range(cols):
            top = bi * k * n + bj * k
            b = e[top]
            for r in range(k):
                start = top + r * n
                for s in range(k):
                    if e[start + s] != (b if r == s else ZERO):
                        return None
            out.append(b)
    return Matrix._raw(rows, cols, tuple(out))


def _divisors_desc(n):
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]), reverse=True)


def root(a):
    """Factor ``a`` as root (x) I_k with the root irreducible (k maximal)."""
    for k in _divisors_desc(gcd(a.rows, a.cols)):
        b = is_multiple(a, k)
        if b is not None:
            return Factorization(b, k)
    raise AssertionError("unreachable: k = 1 always succeeds")


def is_irreducible(a):
    return root(a).multiplicity == 1


def equivalent(a, b):
    """True iff a and b share a root."""
    if classify(a)[0] != classify(b)[0]:
        return False
    return root(a).divisor == root(b).divisor


def theta(a, b):
    """Least common multiple: the smallest common lift a (x) I_x == b (x) I_y, or None."""
    mu_a, ka = classify(a)
    mu_b, kb = classify(b)
    if mu_a != mu_b:
        return None
    t = lcm(ka, kb)
    la = lift(a, t // ka)
    return la if la == lift(b, t // kb) else None


def equivalent_by_lift(a, b):
    """Equivalence decided by comparing both matrices at their least common shape."""
    return theta(a, b) is not None


def lambda_gcd(a, b):
    """Greatest common divisor: the shared root, or None when a and b are not equivalent."""
    if classify(a)[0] != classify(b)[0]:
        return None
    ra = root(a).divisor
    return ra if ra == root(b).divisor else None


@dataclass(frozen=True)
class MatrixClass:
    """An equivalence class, held by its irreducible root.

    Build one with :func:`class_of`; the constructor rejects reducible roots.
    """

    root: Matrix

    def __post_init__(self):
        if not is_irreducible(self.root):
            raise DomainError(f"{self.root!r} is reducible and cannot be a class root")

    @classmethod
    def _trusted(cls, r):
        c = object.__new__(cls)
        object.__setattr__(c, "root", r)
        return c

    @property
    def shape_ratio(self):
        return ShapeRatio.of(self.root.rows, self.root.cols)

    @property
    def index(self):
        """Component index of the root (the smallest over the class)."""
        return gcd(self.root.rows, self.root.cols)

    def is_zero(self):
        return self.root.is_zero()

    def __repr__(self):
        return f"<{self.root!r}>"


# a class of the quotient space is the same object viewed as a vector
QuotientVector = MatrixClass


def class_of(a):
    return MatrixClass._trusted(root(a).divisor)
