from fractions import Fraction

from hypothesis import settings, strategies as st

from crossdim import Matrix, ShapeRatio, class_of

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=10)
small_ints = st.integers(min_value=-5, max_value=5).map(Fraction)


def matrices(rows, cols, elements=rationals):
    return st.lists(elements, min_size=rows * cols, max_size=rows * cols).map(lambda e: Matrix(rows, cols, e))


@st.composite
def any_matrix(draw, max_rows=4, max_cols=4, elements=rationals):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return draw(matrices(m, n, elements))


@st.composite
def same_shape(draw, count, max_rows=4, max_cols=4):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return tuple(draw(matrices(m, n)) for _ in range(count))


shape_ratios = st.sampled_from([ShapeRatio(1, 1), ShapeRatio(1, 2), ShapeRatio(2, 1), ShapeRatio(2, 3), ShapeRatio(1, 3)])


@st.composite
def same_ratio(draw, count, max_index=3, elements=rationals):
    """``count`` matrices of one shape ratio at independently drawn component indices."""
    mu = draw(shape_ratios)
    out = []
    for _ in range(count):
        k = draw(st.integers(1, max_index))
        out.append(draw(matrices(*mu.shape(k), elements=elements)))
    return tuple(out)


@st.composite
def same_ratio_classes(draw, count, max_index=3):
    return tuple(class_of(m) for m in draw(same_ratio(count, max_index)))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
