"""Exact rational matrices.

Rank goes through fraction-free (Bareiss) elimination on an integer
matrix obtained by clearing denominators row by row; nullspaces use plain
Gauss-Jordan over ``Fraction``.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from ._native import bareiss_rank
from .errors import DomainError


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows, ncols=None):
        entries = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise DomainError("ragged matrix")
        return cls(len(entries), ncols, entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self):
        return [list(r) for r in self.entries]

    def __matmul__(self, other):
        return ExactMatrix.from_rows(matmul(self.entries, other.entries, self.cols), other.cols)

    def __add__(self, other):
        return ExactMatrix.from_rows(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.cols
        )

    def scale(self, c):
        return ExactMatrix.from_rows([[c * a for a in r] for r in self.entries], self.cols)

    def transpose(self):
        return ExactMatrix.from_rows(transpose(self.entries, self.cols), self.rows)

    def trace(self):
        return sum((self.entries[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def rank(self):
        return rank(self.entries)

    def is_zero(self):
        return all(x == 0 for r in self.entries for x in r)


def transpose(a, ncols=None):
    if ncols is None:
        ncols = len(a[0]) if a else 0
    return [[row[j] for row in a] for j in range(ncols)]


def matmul(a, b, inner=None):
    if inner is None:
        inner = len(b)
    if a and len(a[0]) != inner:
        raise DomainError("matrix dimensions do not match")
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * ncols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(ncols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def integer_rows(a):
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in a:
        fr = [Fraction(x) for x in row]
        lcm = 1
        for x in fr:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in fr])
    return out


def rank(a):
    if not a or not len(a[0]):
        return 0
    return bareiss_rank(integer_rows(a))


def rref(a):
    """Reduced row echelon form over the rationals and the pivot columns."""
    m = [[Fraction(x) for x in row] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(a, ncols=None):
    """Basis of {x : a x = 0} as a list of column vectors (lists)."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][fcol]
        basis.append(v)
    return basis
