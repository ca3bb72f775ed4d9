"""Character tables of the symmetric groups, computed exactly.

Tables are built with the Murnaghan-Nakayama rule (see ``_native``) and
cached per ``n``; the cache is lock-guarded so concurrent first access
builds each table once.
"""
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

from . import config
from ._native import mn_table
from .errors import CapExceededError, DomainError
from .partitions import Partition, multiplicities, partitions_of, size


def centralizer_order(mu):
    """z(mu) = prod_i i^{m_i} m_i!"""
    z = 1
    for part, mult in multiplicities(mu).items():
        z *= part ** mult * math.factorial(mult)
    return z


def cycle_sign(mu):
    """Sign of any permutation of cycle type ``mu``."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


@dataclass(frozen=True)
class CharacterTable:
    """``values[lam][mu]`` is chi^lam at cycle type mu; rows/cols in reverse-lex order."""

    n: int
    shapes: tuple
    values: MappingProxyType = field(repr=False)
    z: MappingProxyType = field(repr=False)

    def __call__(self, lam, mu):
        return self.values[lam][mu]

    def row(self, lam):
        return self.values[lam]

    def as_matrix(self):
        return [[self.values[lam][mu] for mu in self.shapes] for lam in self.shapes]

    def sign_row(self):
        return self.values[Partition._trusted((1,) * self.n)] if self.n else self.values[()]

    def format(self):
        """Aligned integer table, one row per irreducible."""
        labels = [_label(p) for p in self.shapes]
        cells = [[str(v) for v in row] for row in self.as_matrix()]
        zrow = [str(self.z[mu]) for mu in self.shapes]
        lw = max([len(s) for s in labels] + [1])
        widths = [
            max(len(labels[j]), len(zrow[j]), *(len(r[j]) for r in cells))
            for j in range(len(self.shapes))
        ]
        lines = [" " * lw + " | " + "  ".join(l.rjust(w) for l, w in zip(labels, widths))]
        lines.append("-" * len(lines[0]))
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(lw) + " | " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))
        lines.append("-" * len(lines[0]))
        lines.append("z".rjust(lw) + " | " + "  ".join(c.rjust(w) for c, w in zip(zrow, widths)))
        return "\n".join(lines)

    def to_json(self):
        return {
            "n": self.n,
            "partitions": [list(p) for p in self.shapes],
            "values": [[str(v) for v in row] for row in self.as_matrix()],
            "z": [str(self.z[mu]) for mu in self.shapes],
        }


def _label(p):
    return "(" + ",".join(map(str, p)) + ")"


_tables = {}
_lock = threading.Lock()


def char_table(n, cap=None):
    if cap is None:
        cap = config.get_cap()
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > cap:
        raise CapExceededError(f"character table for n={n} exceeds the cap {cap}")
    table = _tables.get(n)
    if table is not None:
        return table
    with _lock:
        table = _tables.get(n)
        if table is None:
            table = _build(n)
            _tables[n] = table
    return table


def _build(n):
    shapes = tuple(partitions_of(n))
    raw = mn_table(shapes, shapes)
    values = MappingProxyType(
        {lam: MappingProxyType(dict(zip(shapes, row))) for lam, row in zip(shapes, raw)}
    )
    z = MappingProxyType({mu: centralizer_order(mu) for mu in shapes})
    return CharacterTable(n=n, shapes=shapes, values=values, z=z)


def character(lam, mu):
    if size(lam) != size(mu):
        raise DomainError(f"sizes differ: {lam} vs {mu}")
    return char_table(size(lam))(Partition(lam), Partition(mu))


def tensor_with_sign(lam):
    """Irreducible nu with chi^nu = chi^lam * sign, found by matching table rows."""
    lam = Partition(lam)
    table = char_table(size(lam))
    twisted = {mu: table(lam, mu) * cycle_sign(mu) for mu in table.shapes}
    for nu in table.shapes:
        if all(table(nu, mu) == v for mu, v in twisted.items()):
            return nu
    raise AssertionError(f"no irreducible matches the sign twist of {lam}")


def kronecker_coeff(lam, mu, nu):
    """Multiplicity of nu in the internal tensor product of lam and mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = size(lam)
    if size(mu) != n or size(nu) != n:
        raise DomainError(f"Kronecker coefficient needs equal sizes, got {lam}, {mu}, {nu}")
    table = char_table(n)
    total = Fraction(0)
    for rho in table.shapes:
        total += Fraction(table(lam, rho) * table(mu, rho) * table(nu, rho), table.z[rho])
    if total.denominator != 1 or total < 0:
        raise AssertionError(f"non-integral Kronecker coefficient {total}")
    return int(total)
