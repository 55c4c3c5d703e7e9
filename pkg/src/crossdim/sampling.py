"""Random exact test data.

Every generator takes an explicit ``random.Random`` so callers control seeding.
"""
from fractions import Fraction
from random import Random

from .equivalence import class_of
from .matrix import Matrix


def random_rational(rng, bound=10):
    """Numerator in [-bound, bound], denominator in [1, bound]."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_matrix(rng, rows, cols, bound=10):
    return Matrix._raw(rows, cols, tuple(random_rational(rng, bound) for _ in range(rows * cols)))


def random_shape(rng, max_rows=4, max_cols=8):
    return rng.randint(1, max_rows), rng.randint(1, max_cols)


def random_class(rng, max_rows=4, max_cols=8, bound=10):
    return class_of(random_matrix(rng, *random_shape(rng, max_rows, max_cols), bound=bound))


def random_same_ratio(rng, mu, max_index=4, bound=10):
    """A random matrix in the mu component at an index drawn from 1..max_index."""
    k = rng.randint(1, max_index)
    return random_matrix(rng, k * mu.mu_y, k * mu.mu_x, bound)


def trial_rng(seed, trial):
    """Independent, reproducible stream for one trial of a seeded experiment."""
    return Random(f"{seed}:{trial}")
