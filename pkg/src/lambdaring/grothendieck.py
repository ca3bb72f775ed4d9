"""The positive cone, the sign rule for co-negation, and two-term complexes.

A Schur-positive element is a finite multiset of irreducibles. Complexes
are stored one irreducible at a time: by Schur's lemma an equivariant map
between isotypic pieces is just a matrix between multiplicity spaces.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .characters import tensor_with_sign
from .errors import DomainError
from .linalg import matmul, nullspace, rank, transpose
from .partitions import Partition, partitions_up_to, sort_key
from .symfunc import SymFunc, format_coeff, mul


class PosElement:
    """Nonnegative integer combination of Schur functions, e.g. ``{(2,): 1, (1, 1): 2}``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for lam, k in (terms or {}).items():
            if isinstance(k, Fraction):
                if k.denominator != 1:
                    raise DomainError(f"multiplicity {k} is not an integer")
                k = k.numerator
            if k != int(k) or k < 0:
                raise DomainError(f"multiplicity {k} must be a nonnegative integer")
            if k:
                clean[Partition(lam)] = int(k)
        self._terms = clean

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def component(self, n):
        """The degree-n piece rho(n)."""
        return PosElement({lam: k for lam, k in self._terms.items() if sum(lam) == n})

    def degrees(self):
        return sorted({sum(lam) for lam in self._terms})

    def embed(self, cap=None):
        return SymFunc("s", self._terms, cap=cap)

    def __eq__(self, other):
        if isinstance(other, PosElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for lam, k in other._terms.items():
            out[lam] = out.get(lam, 0) + k
        return PosElement(out)

    def __mul__(self, other):
        ok, prod = is_schur_positive(mul(self.embed(), other.embed()))
        if not ok:
            raise AssertionError("product of Schur-positive elements left the positive cone")
        return prod

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"PosElement({dict(self.items())!r})"

    def to_json(self):
        return [{"partition": list(lam), "mult": k} for lam, k in self.items()]


def is_schur_positive(f):
    """(True, PosElement) when f has nonnegative integer Schur coefficients, else (False, None)."""
    terms = f.to_basis("s").terms
    for c in terms.values():
        if c < 0 or c.denominator != 1:
            return False, None
    return True, PosElement({lam: c.numerator for lam, c in terms.items()})


def split_pos_neg(f):
    """Unique (f+, f-) with disjoint supports and f = f+ - f- in the Schur basis."""
    pos, neg = {}, {}
    for lam, c in f.to_basis("s").terms.items():
        if c.denominator != 1:
            raise DomainError(f"coefficient {c} of s{list(lam)} is not an integer")
        if c > 0:
            pos[lam] = c.numerator
        else:
            neg[lam] = -c.numerator
    return PosElement(pos), PosElement(neg)


def conegation_sign_rule(rho, cap=None):
    """sum_n (-1)^n [rho(n)][det(n)]: twist each irreducible by the sign character."""
    terms = {}
    for lam, k in rho.terms.items():
        nu = tensor_with_sign(lam)
        terms[nu] = terms.get(nu, 0) + (-k if sum(lam) % 2 else k)
    return SymFunc("s", terms, cap=cap)


# two-term complexes --------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """Multiplicity data of one irreducible: d0 is m1 x m0, d1 is m0 x m1."""

    m0: int
    m1: int
    d0: tuple
    d1: tuple


def _as_matrix(rows, nrows, ncols, name):
    rows = [list(r) for r in (rows or [])]
    if nrows == 0 or ncols == 0:
        if any(r for r in rows) and not (len(rows) == nrows and all(len(r) == ncols for r in rows)):
            raise DomainError(f"{name} must be {nrows}x{ncols}")
        return tuple(tuple() for _ in range(nrows))
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise DomainError(f"{name} must be {nrows}x{ncols}")
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def _is_zero(a):
    return all(x == 0 for r in a for x in r)


class TwoTermComplex:
    """Z/2-graded complex C0 <-> C1 with d1 d0 = 0 and d0 d1 = 0, per irreducible."""

    def __init__(self, blocks):
        clean = {}
        for lam, spec in blocks.items():
            lam = Partition(lam)
            if isinstance(spec, Block):
                m0, m1, d0, d1 = spec.m0, spec.m1, spec.d0, spec.d1
            else:
                m0, m1, d0, d1 = spec
            if m0 < 0 or m1 < 0:
                raise DomainError("multiplicities must be nonnegative")
            d0 = _as_matrix(d0, m1, m0, f"D0 at {lam}")
            d1 = _as_matrix(d1, m0, m1, f"D1 at {lam}")
            if m0 and m1:
                if not _is_zero(matmul(d1, d0, m1)) or not _is_zero(matmul(d0, d1, m0)):
                    raise DomainError(f"differentials at {list(lam)} do not compose to zero")
            if m0 or m1:
                clean[lam] = Block(m0, m1, d0, d1)
        self.blocks = MappingProxyType(clean)

    def items(self):
        return sorted(self.blocks.items(), key=lambda kv: sort_key(kv[0]))

    def chains(self):
        c0 = PosElement({lam: b.m0 for lam, b in self.blocks.items()})
        c1 = PosElement({lam: b.m1 for lam, b in self.blocks.items()})
        return c0, c1

    def to_json(self):
        return [
            {
                "partition": list(lam),
                "m0": b.m0,
                "m1": b.m1,
                "D0": [[format_coeff(x) for x in r] for r in b.d0],
                "D1": [[format_coeff(x) for x in r] for r in b.d1],
            }
            for lam, b in self.items()
        ]

    @classmethod
    def from_json(cls, data):
        blocks = {}
        for entry in data:
            lam = Partition(entry["partition"])
            if lam in blocks:
                raise DomainError(f"partition {list(lam)} listed twice")
            blocks[lam] = (
                int(entry["m0"]),
                int(entry["m1"]),
                [[Fraction(x) for x in r] for r in entry.get("D0", [])],
                [[Fraction(x) for x in r] for r in entry.get("D1", [])],
            )
        return cls(blocks)


def homology(complex_):
    """(H0, H1) multiplicities: m0 - rk d0 - rk d1 and m1 - rk d0 - rk d1."""
    h0, h1 = {}, {}
    for lam, b in complex_.blocks.items():
        r0 = rank(b.d0) if b.m0 and b.m1 else 0
        r1 = rank(b.d1) if b.m0 and b.m1 else 0
        a, c = b.m0 - r0 - r1, b.m1 - r0 - r1
        if a < 0 or c < 0:
            raise DomainError(f"inconsistent ranks at {list(lam)}")
        h0[lam], h1[lam] = a, c
    return PosElement(h0), PosElement(h1)


def euler_char(complex_, cap=None):
    """[C0] - [C1] in the Schur basis."""
    return SymFunc("s", {lam: b.m0 - b.m1 for lam, b in complex_.blocks.items()}, cap=cap)


def mapping_cone_Mx():
    """The cone of the identity on the generator: x --1--> x, x --0--> x."""
    return TwoTermComplex({(1,): (1, 1, [[1]], [[0]])})


def _random_fraction(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def random_complex(rng=None, max_size=3, max_mult=3, max_terms=4):
    """A random valid complex; d1 is built from kernels of d0 so both compositions vanish."""
    rng = rng or random.Random()
    shapes = partitions_up_to(max_size)
    chosen = rng.sample(shapes, rng.randint(1, min(max_terms, len(shapes))))
    blocks = {}
    for lam in chosen:
        m0, m1 = rng.randint(0, max_mult), rng.randint(0, max_mult)
        if not (m0 and m1):
            blocks[lam] = (m0, m1, [], [])
            continue
        r = rng.randint(0, min(m0, m1))
        left = [[_random_fraction(rng) for _ in range(r)] for _ in range(m1)]
        right = [[_random_fraction(rng) for _ in range(m0)] for _ in range(r)]
        d0 = matmul(left, right, r) if r else [[Fraction(0)] * m0 for _ in range(m1)]
        ker = nullspace(d0, m0)  # vectors v with d0 v = 0, length m0
        coker = nullspace(transpose(d0, m0), m1)  # w with w^T d0 = 0, length m1
        d1 = [[Fraction(0)] * m1 for _ in range(m0)]
        for v in ker:
            for w in coker:
                c = _random_fraction(rng) if rng.random() < 0.7 else Fraction(0)
                if c:
                    for i in range(m0):
                        for j in range(m1):
                            d1[i][j] += c * v[i] * w[j]
        blocks[lam] = (m0, m1, d0, d1)
    return TwoTermComplex(blocks)
