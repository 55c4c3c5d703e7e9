"""Named randomized property suites, runnable from ``crossdim verify --suite NAME``.

Every check is exact: a single counterexample fails the suite.  Each suite
returns a list of :class:`Check` records; ``n`` is the number of random cases
and ``seed`` makes the run reproducible.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from random import Random

from . import equivalence as eq
from . import quotient as q
from .matrix import Matrix, frobenius_inner, identity, kron, lift
from .projection import project, verify_minimality
from .sampling import random_class, random_matrix, random_rational, random_shape, trial_rng
from .stp import stp

EXAMPLE_A = Matrix.from_rows([
    [1, 2, -3, 0, 2, 1],
    [2, 1, -2, -1, 1, 0],
    [0, -1, -1, 3, 1, -2],
])
EXAMPLE_TARGET = 2
EXAMPLE_PROJECTION = Matrix.from_rows([
    [1, 0, "1/3", 0],
    [0, "-1/3", 0, -1],
])
EXAMPLE_RESIDUAL = Matrix.from_rows([
    [0, 0, 2, 0, -3, 0, "-1/3", 0, 2, 0, 1, 0],
    [0, 0, 0, 2, 0, -3, 0, "-1/3", 0, 2, 0, 1],
    [2, 0, 0, 0, -2, 0, -1, 0, "2/3", 0, 0, 0],
    [0, 2, 0, "4/3", 0, -2, 0, -1, 0, 2, 0, 0],
    [0, 0, -1, 0, "-2/3", 0, 3, 0, 1, 0, -1, 0],
    [0, 0, 0, -1, 0, "-2/3", 0, 3, 0, 1, 0, -1],
])


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _first_failure(name, cases, predicate):
    count = 0
    for case in cases:
        count += 1
        if not predicate(case):
            return Check(name, False, f"counterexample {case!r}")
    return Check(name, True, f"{count} cases")


def _same_ratio_classes(rng, count, **kw):
    x = random_class(rng, **kw)
    mu = x.shape_ratio
    out = [x]
    while len(out) < count:
        k = rng.randint(1, 4)
        if k * mu.mu_y <= 8 and k * mu.mu_x <= 8:
            out.append(eq.class_of(random_matrix(rng, *mu.shape(k))))
    return out


def example_6_4(n=0, seed=0):
    res = project(EXAMPLE_A, EXAMPLE_TARGET)
    e_class = eq.class_of(res.residual_lift)
    checks = [
        Check("golden projection root", res.projection.root == EXAMPLE_PROJECTION, f"{res.projection.root!r}"),
        Check("golden residual matrix", res.residual_lift == EXAMPLE_RESIDUAL, f"{res.residual_lift.rows}x{res.residual_lift.cols}"),
        Check("projection orthogonal to residual", q.class_inner(res.projection, res.residual) == 0),
        Check(
            "Pythagoras",
            q.norm_sq(EXAMPLE_A) == q.norm_sq(res.projection) + q.norm_sq(res.residual),
            f"|A|^2={q.norm_sq(EXAMPLE_A)}, |P|^2={q.norm_sq(res.projection)}, |E|^2={q.norm_sq(res.residual)}",
        ),
        # recorded, not asserted: <E> is orthogonal to the projection, not to <A>
        Check("diagnostic (E|A)", True, f"class_inner(<E>, <A>) = {q.class_inner(e_class, EXAMPLE_A)}"),
    ]
    return checks


def orthogonality(n=1000, seed=0):
    def cases():
        for i in range(n):
            rng = trial_rng(seed, i)
            yield random_class(rng), rng.randint(1, 4)

    def holds(case):
        x, alpha = case
        r = project(x, alpha)
        return q.class_inner(r.projection, r.residual) == 0 and q.norm_sq(x) == q.norm_sq(r.projection) + q.norm_sq(r.residual)

    return [_first_failure("projection orthogonality and Pythagoras", cases(), holds)]


def representatives(n=1000, seed=0):
    def cases():
        for i in range(n):
            rng = trial_rng(seed, i)
            x, y = _same_ratio_classes(rng, 2)
            yield x, y, rng.randint(1, 5), rng.randint(1, 5)

    def holds(case):
        x, y, r, s = case
        lifted = q.weighted_inner(kron(x.root, identity(r)), kron(y.root, identity(s)))
        return lifted == q.weighted_inner(x.root, y.root)

    return [_first_failure("weighted inner product independent of representatives", cases(), holds)]


def kron_scaling(n=1000, seed=0):
    def cases():
        for i in range(n):
            rng = trial_rng(seed, i)
            m, c = random_shape(rng)
            yield random_matrix(rng, m, c), random_matrix(rng, m, c), rng.randint(1, 6)

    def holds(case):
        a, b, k = case
        ik = identity(k)
        return frobenius_inner(kron(a, ik), kron(b, ik)) == k * frobenius_inner(a, b)

    return [_first_failure("Frobenius product scales by k under identity lifts", cases(), holds)]


def inner_product(n=1000, seed=0):
    def cases():
        for i in range(n):
            rng = trial_rng(seed, i)
            x, y, z = _same_ratio_classes(rng, 3)
            yield x, y, z, random_rational(rng), random_rational(rng)

    def vector_space(case):
        x, y, z, a, b = case
        zero = q.zero_class(x.shape_ratio)
        return (
            q.class_add(q.class_add(x, y), z) == q.class_add(x, q.class_add(y, z))
            and q.class_add(x, y) == q.class_add(y, x)
            and q.class_add(x, zero) == x
            and q.class_add(x, q.class_scale(-1, x)) == zero
            and q.class_scale(a, q.class_add(x, y)) == q.class_add(q.class_scale(a, x), q.class_scale(a, y))
            and q.class_scale(a + b, x) == q.class_add(q.class_scale(a, x), q.class_scale(b, x))
            and q.class_scale(a * b, x) == q.class_scale(a, q.class_scale(b, x))
            and q.class_scale(1, x) == x
        )

    def axioms(case):
        x, y, z, a, _ = case
        ip = q.class_inner
        xx = ip(x, x)
        return (
            ip(q.class_add(x, y), z) == ip(x, z) + ip(y, z)
            and ip(x, y) == ip(y, x)
            and ip(q.class_scale(a, x), y) == a * ip(x, y)
            and xx >= 0
            and (xx == 0) == x.is_zero()
        )

    def parallelogram(case):
        x, y = case[0], case[1]
        return q.norm_sq(q.class_add(x, y)) + q.norm_sq(q.class_sub(x, y)) == 2 * q.norm_sq(x) + 2 * q.norm_sq(y)

    def schwarz(case):
        x, y = case[0], case[1]
        return q.class_inner(x, y) ** 2 <= q.norm_sq(x) * q.norm_sq(y)

    data = list(cases())
    return [
        _first_failure("vector-space axioms", data, vector_space),
        _first_failure("inner-product axioms", data, axioms),
        _first_failure("parallelogram law", data, parallelogram),
        _first_failure("Schwarz inequality (squared)", data, schwarz),
    ]


def triangle_holds(d_xy, d_yz, d_xz):
    """sqrt(d_xz) <= sqrt(d_xy) + sqrt(d_yz), decided on the squared distances."""
    gap = d_xz - d_xy - d_yz
    return gap <= 0 or gap * gap <= 4 * d_xy * d_yz


def metric(n=1000, seed=0):
    def cases():
        for i in range(n):
            rng = trial_rng(seed, i)
            yield tuple(_same_ratio_classes(rng, 3)) + (rng.randint(1, 4),)

    def holds(case):
        x, y, z, r = case
        d = q.distance_sq
        same = eq.class_of(lift(x.root, r))
        return (
            d(x, same) == 0
            and (d(x, y) == 0) == (x == y)
            and d(x, y) == d(y, x)
            and d(x, y) == q.norm_sq(q.class_sub(x, y))
            and triangle_holds(d(x, y), d(y, z), d(x, z))
        )

    return [_first_failure("metric axioms", cases(), holds)]


def equivalence(n=1000, seed=0):
    def cases():
        for i in range(n):
            rng = trial_rng(seed, i)
            r = random_matrix(rng, *random_shape(rng, 3, 3), bound=3)
            i_, j_ = rng.randint(1, 4), rng.randint(1, 4)
            a, b = lift(r, i_), lift(r, j_)
            if i % 2:
                pos = rng.randrange(b.rows * b.cols)
                entries = list(b.entries)
                entries[pos] += rng.choice([-1, 1]) * Fraction(rng.randint(1, 3))
                b = Matrix(b.rows, b.cols, entries)
            yield a, b, i_, j_

    def agree(case):
        a, b, _, _ = case
        return eq.equivalent(a, b) == eq.equivalent_by_lift(a, b)

    def maximal(case):
        a, b, i_, j_ = case
        for m, lifted_by in ((a, i_), (b, None)):
            f = eq.root(m)
            if lift(f.divisor, f.multiplicity) != m or not eq.is_irreducible(f.divisor):
                return False
            if lifted_by is not None and f.multiplicity % lifted_by:
                return False
            g = gcd(m.rows, m.cols)
            for j in range(1, g + 1):
                if g % j == 0 and eq.is_multiple(m, j) is not None and f.multiplicity % j:
                    return False
        return True

    data = list(cases())
    return [
        _first_failure("root-based and lift-based equivalence agree", data, agree),
        _first_failure("root reconstruction and maximality", data, maximal),
    ]


def _naive_product(a, b):
    return [[sum(a[i, r] * b[r, j] for r in range(a.cols)) for j in range(b.cols)] for i in range(a.rows)]


def stp_contracts(n=500, seed=0):
    def pairs():
        for i in range(n):
            rng = trial_rng(seed, i)
            m, k, c = (rng.randint(1, 4) for _ in range(3))
            yield random_matrix(rng, m, k), random_matrix(rng, k, c)

    def triples():
        for i in range(n):
            rng = trial_rng(seed + 1, i)
            yield tuple(random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4)) for _ in range(3))

    return [
        _first_failure("stp coincides with the ordinary product", pairs(), lambda ab: stp(*ab).tolist() == _naive_product(*ab)),
        _first_failure("stp is associative", triples(), lambda t: stp(stp(t[0], t[1]), t[2]) == stp(t[0], stp(t[1], t[2]))),
    ]


def isometry(n=500, seed=0):
    def cases():
        for i in range(n):
            rng = trial_rng(seed, i)
            x, y = _same_ratio_classes(rng, 2)
            # non-root representatives, so the embedding acts on genuine matrices
            yield x, y, lift(x.root, rng.randint(1, 3)), lift(y.root, rng.randint(1, 3)), rng.randint(1, 4)

    def transpose_ok(case):
        x, y = case[0], case[1]
        tx, ty = q.transpose_class(x), q.transpose_class(y)
        return q.distance_sq(tx, ty) == q.distance_sq(x, y) and q.transpose_class(tx) == x

    def embed_ok(case):
        x, y, a, b, k = case
        ik = identity(k)
        on_matrices = q.weighted_norm_sq(q.lminus(kron(a, ik), kron(b, ik))) == q.weighted_norm_sq(q.lminus(a, b))
        on_classes = q.distance_sq(eq.class_of(q.embed(x, k)), eq.class_of(q.embed(y, k))) == q.distance_sq(x, y)
        return on_matrices and on_classes

    data = list(cases())
    return [
        _first_failure("transpose is a distance-preserving involution", data, transpose_ok),
        _first_failure("identity-lift embedding preserves distance", data, embed_ok),
    ]


def minimality(n=100, seed=0, trials=1000):
    def instances():
        yield EXAMPLE_A, EXAMPLE_TARGET, Random(seed)
        for i in range(n):
            rng = trial_rng(seed, i)
            yield random_class(rng), rng.randint(1, 4), rng

    def holds(case):
        x, alpha, rng = case
        c = project(x, alpha).minimizer
        # the minimizer itself must tie; minimizer plus a nonzero step must lose
        competitors = [c, c + random_matrix(rng, c.rows, c.cols)]
        return verify_minimality(x, alpha, trials, seed=rng.randrange(2**32), competitors=competitors)

    return [_first_failure(f"no competitor beats the projection ({trials} per instance)", instances(), holds)]


SUITES = {
    "example-6-4": example_6_4,
    "orthogonality": orthogonality,
    "representatives": representatives,
    "kron-scaling": kron_scaling,
    "inner-product": inner_product,
    "metric": metric,
    "equivalence": equivalence,
    "stp": stp_contracts,
    "isometry": isometry,
    "minimality": minimality,
}


def run_suite(name, n=None, seed=0):
    if name == "all":
        return [c for key in SUITES for c in run_suite(key, n, seed)]
    fn = SUITES[name]
    return fn(seed=seed) if n is None else fn(n=n, seed=seed)
