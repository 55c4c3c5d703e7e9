from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crossdim import (
    DomainError,
    Matrix,
    class_add,
    class_inner,
    class_of,
    distance_sq,
    frobenius_inner,
    identity,
    kron,
    lift,
    norm_sq,
    project,
    residual_matrix,
    trace,
    block,
    verify_minimality,
    zero_class,
)
from crossdim.projection import _distance_to_index
from crossdim.sampling import random_matrix
from conftest import same_ratio, same_ratio_classes

M = Matrix.from_rows
D = M([[1, 0], [0, 3]])
EX_A = M([[1, 2, -3, 0, 2, 1], [2, 1, -2, -1, 1, 0], [0, -1, -1, 3, 1, -2]])


def test_already_in_target():
    a = M([[1, 2], [3, 5]])
    r = project(class_of(a), 2)
    assert r.projection == class_of(a)
    assert r.residual == zero_class(r.projection.shape_ratio)
    assert residual_matrix(a, 2).is_zero()


def test_diagonal_example():
    r = project(class_of(D), 1)
    assert r.block_size == 2 and r.lift_index == 2
    assert r.projection.root == M([[2]])
    assert r.residual.root == M([[-1, 0], [0, 1]])
    assert class_inner(r.projection, r.residual) == 0
    assert r.distance_sq_to_target == 1


def test_example_a_projection():
    r = project(EX_A, 2)
    assert (r.lift_index, r.block_size) == (6, 3)
    assert r.projection.root == M([[1, 0, "1/3", 0], [0, "-1/3", 0, -1]])
    e = residual_matrix(EX_A, 2)
    assert e.shape == (6, 12)
    assert frobenius_inner(kron(r.minimizer, identity(3)), e) == 0
    assert {e[3, 3], e[4, 4], e[2, 8]} == {Fraction(4, 3), Fraction(-2, 3), Fraction(2, 3)}


def test_minimizer_is_block_trace_average():
    r = project(EX_A, 2)
    lifted = lift(EX_A, 2)
    for i in range(2):
        for j in range(4):
            assert r.minimizer[i, j] == trace(block(lifted, i, j, 3)) / 3


def test_bad_target():
    with pytest.raises(DomainError):
        project(D, 0)


@st.composite
def instance(draw):
    (a,) = draw(same_ratio(1, max_index=4))
    return class_of(a), draw(st.integers(1, 4))


@given(instance())
def test_orthogonality_and_pythagoras(case):
    x, alpha = case
    r = project(x, alpha)
    assert class_inner(r.projection, r.residual) == 0
    assert norm_sq(x) == norm_sq(r.projection) + norm_sq(r.residual)
    assert r.distance_sq_to_target == norm_sq(r.residual) == distance_sq(x, r.projection)
    e = r.residual_lift
    assert frobenius_inner(lift(r.minimizer, r.block_size), e) == 0


@given(instance(), st.integers(1, 4))
def test_representative_independence(case, k):
    x, alpha = case
    assert project(lift(x.root, k), alpha).projection == project(x, alpha).projection


@given(instance())
def test_idempotent(case):
    x, alpha = case
    p = project(x, alpha).projection
    again = project(p, alpha)
    assert again.projection == p
    assert again.residual.is_zero()


@st.composite
def pair_instance(draw):
    x, y = draw(same_ratio_classes(2))
    return x, y, draw(st.integers(1, 4))


@given(pair_instance())
def test_linear(case):
    x, y, alpha = case
    lhs = project(class_add(x, y), alpha).projection
    assert lhs == class_add(project(x, alpha).projection, project(y, alpha).projection)


@given(instance(), st.integers(0, 2**16))
def test_fast_distance_matches_class_distance(case, seed):
    import random

    x, alpha = case
    r = project(x, alpha)
    dist = _distance_to_index(x, alpha, r.lift_index)
    cand = random_matrix(random.Random(seed), *x.shape_ratio.shape(alpha))
    assert dist(cand) == distance_sq(x, cand)
    assert dist(r.minimizer) == r.distance_sq_to_target


def test_minimality_example():
    assert verify_minimality(EX_A, 2, 200, seed=1)
    r = project(EX_A, 2)
    assert distance_sq(EX_A, r.minimizer) == r.distance_sq_to_target
    z = M([[0, 1, 0, 0], [0, 0, 0, 0]])
    assert distance_sq(EX_A, r.minimizer + z) > r.distance_sq_to_target
    assert verify_minimality(EX_A, 2, 0, competitors=[r.minimizer, r.minimizer + z])


def test_minimality_catches_a_wrong_projection(monkeypatch):
    import crossdim.projection as proj

    honest = proj.project

    def off_by_a_bit(x, alpha):
        r = honest(x, alpha)
        bad = r.minimizer + M([["1/10"]])
        return proj.ProjectionResult(
            projection=class_of(bad),
            residual=r.residual,
            target_index=alpha,
            lift_index=r.lift_index,
            block_size=r.block_size,
            distance_sq_to_target=distance_sq(x, bad),
            minimizer=bad,
            residual_lift=r.residual_lift,
        )

    monkeypatch.setattr(proj, "project", off_by_a_bit)
    assert not proj.verify_minimality(D, 1, 0, competitors=[M([[2]])])
    assert not proj.verify_minimality(D, 1, 200, seed=3)


@given(instance())
def test_minimality_random(case):
    x, alpha = case
    assert verify_minimality(x, alpha, 20, seed=7)
