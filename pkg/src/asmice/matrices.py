"""Exact determinants over the rings used in this package.

Supported entry types: int, Fraction, Cyclotomic, LaurentPoly, RatFunc.
The default pipeline clears RatFunc denominators row by row, runs
fraction-free Bareiss elimination over the polynomial ring (every division
in Bareiss is exact there), and divides the cleared determinant back out.
A cofactor (bitmask subset DP) expansion is kept as an independent method;
it works over any commutative ring and serves as a cross-check oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, RatFunc, divide_exact


class RingMatrix:
    """Immutable rectangular matrix over an arbitrary commutative ring."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def from_fn(cls, nrows, ncols, fn):
        return cls([[fn(i, j) for j in range(ncols)] for i in range(nrows)])

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def map_entries(self, fn):
        return RingMatrix([[fn(x) for x in row] for row in self.rows])

    def transpose(self):
        return RingMatrix(list(zip(*self.rows)))

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"RingMatrix({self.nrows}x{self.ncols})"


def det_exact(matrix, method="auto"):
    """Exact determinant; method is 'auto', 'bareiss' or 'cofactor'."""
    if not matrix.is_square:
        raise ValueError("determinant of a non-square matrix")
    if method == "cofactor":
        return _det_cofactor(matrix)
    if method not in ("auto", "bareiss"):
        raise ValueError(f"unknown determinant method {method!r}")
    if any(isinstance(x, RatFunc) for row in matrix.rows for x in row):
        return _det_cleared(matrix)
    return _det_bareiss(matrix.rows)


def _det_cleared(matrix):
    """Clear RatFunc denominators by rows, then Bareiss over polynomials.

    With row multipliers R_i = prod_j den_ij the cleared matrix
    B_ij = num_ij * prod_{k != j} den_ik equals M_ij * R_i, so
    det(M) = det(B) / prod_i R_i, returned unreduced as a RatFunc.
    """
    n = matrix.nrows
    entries = [[_as_ratfunc(matrix[i, j]) for j in range(n)] for i in range(n)]
    cleared = []
    den_total = None
    for i in range(n):
        dens = [entries[i][j].den for j in range(n)]
        prefix = [None] * (n + 1)
        suffix = [None] * (n + 1)
        prefix[0] = LaurentPoly.one(dens[0].nvars, dens[0].scale)
        suffix[n] = prefix[0]
        for k in range(n):
            prefix[k + 1] = prefix[k] * dens[k]
            suffix[n - 1 - k] = suffix[n - k] * dens[n - 1 - k]
        cleared.append([entries[i][j].num * prefix[j] * suffix[j + 1]
                        for j in range(n)])
        den_total = prefix[n] if den_total is None else den_total * prefix[n]
    return RatFunc(_det_bareiss(cleared), den_total)


def _det_bareiss(rows):
    """Fraction-free Bareiss elimination with row pivoting."""
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return _ring_zero(a[k][k])
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = t if prev is None else _exact_div(t, prev)
            a[i][k] = _ring_zero(a[i][k])
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def _det_cofactor(matrix):
    """Subset DP over column masks; O(2^n * n) ring operations.

    dp[mask] is the determinant-like sum for the top r rows using the
    column set in mask (r = popcount).  Division-free, so it is valid
    over any commutative ring and independent of the Bareiss path.
    """
    n = matrix.nrows
    rows = matrix.rows
    dp = {(1 << j): rows[0][j] for j in range(n)}
    for r in range(1, n):
        ndp = {}
        for mask, val in dp.items():
            used_below = 0
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    used_below += 1
                    continue
                term = val * rows[r][j]
                if (r - used_below) % 2:
                    term = -term
                nmask = mask | bit
                ndp[nmask] = ndp[nmask] + term if nmask in ndp else term
        dp = ndp
    return dp[(1 << n) - 1]


def _exact_div(value, divisor):
    if isinstance(value, LaurentPoly):
        return divide_exact(value, divisor)
    if isinstance(value, int) and isinstance(divisor, int):
        q, r = divmod(value, divisor)
        if r:
            raise ArithmeticError("inexact integer division in Bareiss step")
        return q
    return value / divisor


def _ring_zero(sample):
    if isinstance(sample, LaurentPoly):
        return LaurentPoly.zero(sample.nvars, sample.scale)
    if isinstance(sample, RatFunc):
        return RatFunc(LaurentPoly.zero(sample.num.nvars, sample.num.scale))
    if isinstance(sample, Fraction):
        return Fraction(0)
    return 0


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc(x)
    raise TypeError(f"cannot clear denominators of {type(x).__name__}")
