"""Determinant evaluation of the domain-wall state sum.

For parameters X, Y the state sum equals

    (-1)^n * (prod_i q^((y_i-x_i)/2)) * prod_{i,j} [x_i-y_j][x_i-y_j-1]
    -----------------------------------------------------------------  * det M
      (prod_{j<i} [x_i-x_j]) * (prod_{i<j} [y_i-y_j])

with M_{i,j} = 1 / ([x_i-y_j][x_i-y_j-1]).  Rather than build the rational
entries and cancel, ik_z clears denominators first: with
e_{i,j} = d(x_i-y_j) * d(x_i-y_j-1) for d(a) = q^(a/2)-q^(-a/2), the matrix
E'_{i,j} = prod_{k != j} e_{i,k} is polynomial, every bracket power of
b = q^(1/2)-q^(-1/2) collapses to b^(n^2-n) in the denominator, and

    Z = (-1)^n * q^(sum (y_i-x_i)/2) * det E'
        over b^(n^2-n) * prod_{j<i} d(x_i-x_j) * prod_{i<j} d(y_i-y_j).

The result is reduced to a genuine Laurent polynomial whenever it is one.
"""

from __future__ import annotations

from math import lcm

from .brackets import bracket_ratio, qdiff
from .laurent import LaurentPoly, NonDivisible, RatFunc, divide_exact
from .matrices import RingMatrix, det_exact
from .sixvertex import SpectralParams


class IkInstance:
    """Validated parameter set for the determinant formula."""

    __slots__ = ("params", "scale")

    def __init__(self, params):
        if not isinstance(params, SpectralParams):
            params = SpectralParams(*params)
        n = params.n
        for i in range(n):
            for j in range(n):
                if params.label(i, j) in (0, 1):
                    raise ValueError(
                        f"singular entry: x_{i} - y_{j} = {params.label(i, j)}"
                        " makes a bracket in M vanish")
        for i in range(n):
            for j in range(i + 1, n):
                if params.xs[i] == params.xs[j]:
                    raise ValueError(f"x_{i} = x_{j}: prefactor denominator vanishes")
                if params.ys[i] == params.ys[j]:
                    raise ValueError(f"y_{i} = y_{j}: prefactor denominator vanishes")
        self.params = params
        self.scale = params.scale

    @property
    def n(self):
        return self.params.n


def ik_matrix(inst):
    """The n x n matrix M with entries 1/([x_i-y_j][x_i-y_j-1])."""
    p = inst.params
    scale = inst.scale

    def entry(i, j):
        v = p.label(i, j)
        return (bracket_ratio(v, scale) * bracket_ratio(v - 1, scale)).reciprocal()

    return RingMatrix.from_fn(inst.n, inst.n, entry)


def ik_z(inst):
    """The determinant side of the state-sum identity, exact."""
    p = inst.params
    n = inst.n
    scale = inst.scale
    e = [[qdiff(p.label(i, j), scale) * qdiff(p.label(i, j) - 1, scale)
          for j in range(n)] for i in range(n)]
    cleared = []
    for i in range(n):
        prefix = [None] * (n + 1)
        suffix = [None] * (n + 1)
        prefix[0] = LaurentPoly.one(1, scale)
        suffix[n] = prefix[0]
        for k in range(n):
            prefix[k + 1] = prefix[k] * e[i][k]
            suffix[n - 1 - k] = suffix[n - k] * e[i][n - 1 - k]
        cleared.append([prefix[j] * suffix[j + 1] for j in range(n)])
    det = det_exact(RingMatrix(cleared))
    shift = sum(y - x for x, y in zip(p.xs, p.ys))
    mono = LaurentPoly.var_power(shift / 2, scale)
    num = mono * det
    if n % 2:
        num = -num
    den = qdiff(1, scale) ** (n * n - n)
    for i in range(n):
        for j in range(i):
            den = den * qdiff(p.xs[i] - p.xs[j], scale)
    for i in range(n):
        for j in range(i + 1, n):
            den = den * qdiff(p.ys[i] - p.ys[j], scale)
    try:
        return RatFunc(divide_exact(num, den))
    except NonDivisible:
        return RatFunc(num, den)
