"""Ground truth from the group algebra of S_n acting on tensor powers.

Nothing here touches symmetric functions: Young symmetrizers are built as
explicit group-algebra elements, made idempotent by solving for their
scalar, and their images on (C^d)^{tensor n} are measured by exact rank.
The tableau filling is row-major (1..lam_1 in the first row, and so on).
"""
import itertools
import math
from fractions import Fraction
from types import MappingProxyType

from ._native import place_permutation
from .errors import CapExceededError, DomainError
from .linalg import ExactMatrix, rank
from .partitions import Partition

MAX_N = 5
MAX_TENSOR_DIM = 10 ** 4


def compose(a, b):
    """(a b)(i) = a(b(i)) on 1-indexed one-line permutations."""
    return tuple(a[x - 1] for x in b)


def sign(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def identity(n):
    return tuple(range(1, n + 1))


def cycle_type(perm):
    seen = set()
    lengths = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        k, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x - 1]
            k += 1
        lengths.append(k)
    return Partition(sorted(lengths, reverse=True))


def transposition(n, i, j):
    perm = list(range(1, n + 1))
    perm[i - 1], perm[j - 1] = j, i
    return tuple(perm)


class GroupAlgebraElement:
    """Sparse element of Q[S_n]: one-line permutation (1-indexed) -> Fraction."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for perm, c in (terms or {}).items():
            perm = tuple(perm)
            if sorted(perm) != list(range(1, n + 1)):
                raise DomainError(f"{perm} is not a permutation of 1..{n}")
            c = Fraction(c)
            v = clean.get(perm, 0) + c
            if v:
                clean[perm] = v
            else:
                clean.pop(perm, None)
        self._terms = clean

    @classmethod
    def _raw(cls, n, terms):
        self = object.__new__(cls)
        self.n = n
        self._terms = terms
        return self

    @classmethod
    def of(cls, perm):
        return cls(len(perm), {tuple(perm): 1})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return GroupAlgebraElement._raw(self.n, {k: c * v for k, v in self._terms.items()} if c else {})
        if other.n != self.n:
            raise DomainError("group algebras of different degrees")
        out = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                ab = compose(a, b)
                v = out.get(ab, 0) + x * y
                if v:
                    out[ab] = v
                else:
                    del out[ab]
        return GroupAlgebraElement._raw(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        out = dict(self._terms)
        for k, v in other._terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return GroupAlgebraElement._raw(self.n, out)

    def __sub__(self, other):
        return self + other * -1

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*{list(p)}" for p, c in sorted(self._terms.items()))
        return f"GroupAlgebraElement({self.n}, {body or '0'})"


def _guard_shape(lam):
    lam = Partition(lam)
    if sum(lam) > MAX_N:
        raise CapExceededError(f"oracle only handles |lambda| <= {MAX_N}, got {sum(lam)}")
    return lam


def tableau_rows(lam):
    """Row-major filling: row i holds consecutive labels."""
    rows, nxt = [], 1
    for length in lam:
        rows.append(list(range(nxt, nxt + length)))
        nxt += length
    return rows


def tableau_columns(lam):
    rows = tableau_rows(lam)
    return [[row[j] for row in rows if len(row) > j] for j in range(lam[0] if lam else 0)]


def _block_permutations(n, blocks):
    """All permutations of 1..n preserving each block setwise."""
    choices = [list(itertools.permutations(b)) for b in blocks]
    for combo in itertools.product(*choices):
        perm = list(range(1, n + 1))
        for block, image in zip(blocks, combo):
            for src, dst in zip(block, image):
                perm[src - 1] = dst
        yield tuple(perm)


def row_column_symmetrizers(lam):
    """Normalized row symmetrizer p^S and column antisymmetrizer p^A (both idempotent)."""
    lam = _guard_shape(lam)
    n = sum(lam)
    row_perms = list(_block_permutations(n, tableau_rows(lam)))
    col_perms = list(_block_permutations(n, tableau_columns(lam)))
    ps = GroupAlgebraElement._raw(n, {g: Fraction(1, len(row_perms)) for g in row_perms})
    pa = GroupAlgebraElement._raw(n, {g: Fraction(sign(g), len(col_perms)) for g in col_perms})
    return ps, pa


def _idempotent_scalar(q):
    """kappa with q^2 = kappa q."""
    sq = q * q
    key = next(iter(q.terms))
    kappa = sq.terms.get(key, Fraction(0)) / q.terms[key]
    if kappa == 0:
        raise AssertionError("Young symmetrizer product squares to zero")
    if sq != q * kappa:
        raise AssertionError("p^A p^S is not a multiple of an idempotent")
    return kappa


def young_symmetrizer(lam):
    """The idempotent c * p^A p^S, with c fixed by requiring e^2 = e."""
    ps, pa = row_column_symmetrizers(lam)
    q = pa * ps
    return q * (1 / _idempotent_scalar(q))


def symmetrizer_constant(lam):
    """c such that the idempotent is c * (sum of signed column perms)(sum of row perms)."""
    lam = _guard_shape(lam)
    ps, pa = row_column_symmetrizers(lam)
    kappa = _idempotent_scalar(pa * ps)
    n_rows = math.prod(math.factorial(k) for k in lam)
    n_cols = math.prod(math.factorial(len(c)) for c in tableau_columns(lam))
    return 1 / (kappa * n_rows * n_cols)


def _guard_tensor(n, d):
    if d < 0:
        raise DomainError("dimension must be nonnegative")
    if d ** n > MAX_TENSOR_DIM:
        raise CapExceededError(f"tensor power of dimension {d}^{n} exceeds {MAX_TENSOR_DIM}")


def action_matrix(a, d):
    """Matrix of ``a`` on (C^d)^{tensor n}, permutations acting by moving tensor slots."""
    n = a.n
    _guard_tensor(n, d)
    size = d ** n
    rows = [[Fraction(0)] * size for _ in range(size)]
    for perm, c in a.terms.items():
        target = place_permutation([x - 1 for x in perm], d)
        for col, row in enumerate(target):
            rows[row][col] += c
    return ExactMatrix(size, size, tuple(tuple(r) for r in rows))


def _weight_classes(n, d):
    """Basis tensors grouped by their multiset of indices (S_n preserves each group)."""
    classes = {}
    for idx, digits in enumerate(itertools.product(range(d), repeat=n)):
        classes.setdefault(tuple(sorted(digits)), []).append(idx)
    return list(classes.values())


def schur_image_dim(lam, d):
    """Rank of the Young symmetrizer acting on (C^d)^{tensor |lam|}.

    Computed block by block over weight spaces, which the action preserves.
    """
    lam = _guard_shape(lam)
    n = sum(lam)
    _guard_tensor(n, d)
    e = young_symmetrizer(lam)
    targets = [(place_permutation([x - 1 for x in perm], d), c) for perm, c in e.terms.items()]
    total = 0
    for cls in _weight_classes(n, d):
        pos = {idx: i for i, idx in enumerate(cls)}
        block = [[Fraction(0)] * len(cls) for _ in cls]
        for target, c in targets:
            for idx in cls:
                block[pos[target[idx]]][pos[idx]] += c
        total += rank(block)
    return total
