"""Semi-tensor product."""
from math import lcm

from .matrix import lift, matmul


def stp(a, b):
    """Left semi-tensor product of an m x n and a p x q matrix.

    With t = lcm(n, p) the result is (a (x) I_{t/n}) (b (x) I_{t/p}), an
    (m t/n) x (q t/p) matrix.  When n == p this is the ordinary product.
    """
    n, p = a.cols, b.rows
    if n == p:
        return matmul(a, b)
    t = lcm(n, p)
    out = matmul(lift(a, t // n), lift(b, t // p))
    assert out.shape == (a.rows * t // n, b.cols * t // p)
    return out
