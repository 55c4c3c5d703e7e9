"""Exact dense matrices over the rationals.

Entries are :class:`fractions.Fraction`; a :class:`Matrix` is immutable and
stored row-major.  Floats are refused on input so that every value that enters
the library is exact.
"""
from fractions import Fraction
from numbers import Rational

from .errors import DomainError

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value):
    """Coerce ``value`` to a Fraction without passing through binary floating point."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        # Fraction parses "2/3", "-4" and "0.5" exactly
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact matrix entry")


class Matrix:
    """Immutable m x n matrix of Fractions, m, n >= 1."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows, cols, entries):
        if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
            raise DomainError(f"matrix dimensions must be positive, got {rows}x{cols}")
        entries = tuple(to_rational(e) for e in entries)
        if len(entries) != rows * cols:
            raise DomainError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self._init(rows, cols, entries)

    def _init(self, rows, cols, entries):
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, rows, cols, entries):
        # trusted path: entries is already a tuple of Fractions of the right length
        m = object.__new__(cls)
        m._init(rows, cols, entries)
        return m

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DomainError("empty matrices are not allowed")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise DomainError(f"ragged rows: row 0 has {width} entries, row {i} has {len(r)}")
        return cls(len(rows), width, [e for r in rows for e in r])

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self):
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.rows, self.cols, self.entries)))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return Matrix._raw(self.rows, self.cols, tuple(-e for e in self.entries))

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            return NotImplemented
        return scale(scalar, self)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return matmul(self, other)

    @property
    def T(self):
        return transpose(self)


def zeros(rows, cols):
    if rows < 1 or cols < 1:
        raise DomainError(f"matrix dimensions must be positive, got {rows}x{cols}")
    return Matrix._raw(rows, cols, (ZERO,) * (rows * cols))


def identity(k):
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"identity size must be a positive integer, got {k!r}")
    return Matrix._raw(k, k, tuple(ONE if i == j else ZERO for i in range(k) for j in range(k)))


def kron(a, b):
    """Kronecker product; entry (i*p + r, j*q + s) is a[i, j] * b[r, s]."""
    m, n, p, q = a.rows, a.cols, b.rows, b.cols
    out = []
    for i in range(m):
        arow = a.row(i)
        for r in range(p):
            brow = b.row(r)
            for x in arow:
                if x:
                    out.extend(x * y for y in brow)
                else:
                    out.extend((ZERO,) * q)
    return Matrix._raw(m * p, n * q, tuple(out))


def lift(a, k):
    """``a`` tensored with the k x k identity, built without the dense identity."""
    if k == 1:
        return a
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"lift factor must be a positive integer, got {k!r}")
    n = a.cols
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for r in range(k):
            line = [ZERO] * (n * k)
            line[r::k] = arow
            out.extend(line)
    return Matrix._raw(a.rows * k, n * k, tuple(out))


def _same_shape(a, b, op):
    if a.shape != b.shape:
        raise DomainError(f"{op}: shapes differ ({a.rows}x{a.cols} vs {b.rows}x{b.cols})")


def frobenius_inner(a, b):
    _same_shape(a, b, "frobenius_inner")
    return sum((x * y for x, y in zip(a.entries, b.entries) if x and y), ZERO)


def frobenius_norm_sq(a):
    return sum((x * x for x in a.entries if x), ZERO)


def add(a, b):
    _same_shape(a, b, "add")
    return Matrix._raw(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))


def sub(a, b):
    _same_shape(a, b, "sub")
    return Matrix._raw(a.rows, a.cols, tuple(x - y for x, y in zip(a.entries, b.entries)))


def scale(r, a):
    r = to_rational(r)
    return Matrix._raw(a.rows, a.cols, tuple(r * x for x in a.entries))


def transpose(a):
    return Matrix._raw(a.cols, a.rows, tuple(a.entries[i * a.cols + j] for j in range(a.cols) for i in range(a.rows)))


def trace(a):
    if a.rows != a.cols:
        raise DomainError(f"trace: matrix must be square, got {a.rows}x{a.cols}")
    return sum((a.entries[i * a.cols + i] for i in range(a.rows)), ZERO)


def matmul(a, b):
    """Conventional product; requires cols(a) == rows(b)."""
    if a.cols != b.rows:
        raise DomainError(f"matmul: inner dimensions differ ({a.rows}x{a.cols} times {b.rows}x{b.cols})")
    cols_b = [b.entries[j::b.cols] for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for col in cols_b:
            out.append(sum((x * y for x, y in zip(arow, col) if x and y), ZERO))
    return Matrix._raw(a.rows, b.cols, tuple(out))


def block(a, i, j, k):
    """The k x k submatrix at block position (i, j) of ``a`` cut into k x k blocks."""
    if not isinstance(k, int) or k < 1 or a.rows % k or a.cols % k:
        raise DomainError(f"block: {a.rows}x{a.cols} matrix does not split into {k}x{k} blocks")
    if not (0 <= i < a.rows // k and 0 <= j < a.cols // k):
        raise DomainError(f"block: position ({i}, {j}) outside the {a.rows // k}x{a.cols // k} block grid")
    out = []
    for r in range(i * k, (i + 1) * k):
        out.extend(a.entries[r * a.cols + j * k: r * a.cols + (j + 1) * k])
    return Matrix._raw(k, k, tuple(out))
