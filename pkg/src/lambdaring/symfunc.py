"""The ring of symmetric functions over the rationals.

Elements are sparse maps partition -> Fraction tagged with one of five
bases. Arithmetic happens in the power-sum basis, where products simply
concatenate partitions; the Schur basis is the hub for every change of
basis (characters for p, the Kostka matrix for h, e and m).
"""
import functools
from fractions import Fraction
from types import MappingProxyType

from . import config, polynomial
from .characters import char_table
from .errors import DomainError
from .partitions import (
    Partition,
    conjugate,
    hooks_and_contents,
    normalize,
    partitions_of,
    sort_key,
)

BASES = ("m", "e", "h", "p", "s")


def _check_basis(tag):
    if tag not in BASES:
        raise DomainError(f"unknown basis {tag!r}; expected one of {', '.join(BASES)}")
    return tag


def _clean(terms):
    return {lam: c for lam, c in terms.items() if c}


class SymFunc:
    """An immutable element of the ring of symmetric functions.

    >>> s(1) * s(1) == s(2) + s(1, 1)
    True
    """

    __slots__ = ("basis", "_terms", "cap", "_p", "_hash")

    def __init__(self, basis, terms=None, cap=None):
        self.basis = _check_basis(basis)
        self.cap = config.get_cap() if cap is None else cap
        clean = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            clean[lam] = clean.get(lam, 0) + c
            if not clean[lam]:
                del clean[lam]
        for lam in clean:
            config.check_degree(sum(lam), self.cap)
        self._terms = clean
        self._p = clean if basis == "p" else None
        self._hash = None

    @classmethod
    def _raw(cls, basis, terms, cap):
        # trusted path: terms already clean, keys are Partitions within cap
        self = object.__new__(cls)
        self.basis = basis
        self.cap = cap
        self._terms = terms
        self._p = terms if basis == "p" else None
        self._hash = None
        return self

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical order (ascending degree, reverse-lex)."""
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def coefficient(self, lam):
        return self._terms.get(Partition(lam), Fraction(0))

    @property
    def degree(self):
        return max((sum(lam) for lam in self._terms), default=0)

    def is_zero(self):
        return not self._terms

    def is_homogeneous(self):
        return len({sum(lam) for lam in self._terms}) <= 1

    def homogeneous_component(self, n):
        return SymFunc._raw(self.basis, {l: c for l, c in self._terms.items() if sum(l) == n}, self.cap)

    def constant_term(self):
        return self._terms.get((), Fraction(0))

    def p_terms(self):
        if self._p is None:
            self._p = _convert(self._terms, self.basis, "p")
        return self._p

    def to_basis(self, target):
        _check_basis(target)
        if target == self.basis:
            return self
        if target == "p":
            return SymFunc._raw("p", self.p_terms(), self.cap)
        return SymFunc._raw(target, _convert(self._terms, self.basis, target), self.cap)

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SymFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return SymFunc._raw(self.basis, {Partition._trusted(()): Fraction(other)} if other else {}, self.cap)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, scale(-1, other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, scale(-1, self))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        if isinstance(other, SymFunc):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError("exponent must be a nonnegative integer")
        out = self._coerce(1)
        for _ in range(k):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.p_terms() == other.p_terms()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.p_terms().items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"SymFunc({self.basis!r}, {format_symfunc(self)!r})"

    def __str__(self):
        return format_symfunc(self)


# constructors ---------------------------------------------------------------


def basis_element(basis, *parts, cap=None):
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        parts = parts[0]
    return SymFunc(basis, {Partition(parts): 1}, cap=cap)


def constant(c, basis="s", cap=None):
    return SymFunc(basis, {(): c}, cap=cap)


def zero(basis="s", cap=None):
    return SymFunc(basis, {}, cap=cap)


def s(*parts, cap=None):
    return basis_element("s", *parts, cap=cap)


def p(*parts, cap=None):
    return basis_element("p", *parts, cap=cap)


def h(*parts, cap=None):
    return basis_element("h", *parts, cap=cap)


def e(*parts, cap=None):
    return basis_element("e", *parts, cap=cap)


def m(*parts, cap=None):
    return basis_element("m", *parts, cap=cap)


def from_p(terms, basis, cap):
    """Wrap p-basis ``terms`` (clean, trusted) and convert to ``basis``."""
    f = SymFunc._raw("p", terms, cap)
    return f.to_basis(basis)


# change of basis ------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _s_to_p(lam):
    table = char_table(sum(lam), cap=sum(lam))
    return {mu: Fraction(table(lam, mu), table.z[mu]) for mu in table.shapes if table(lam, mu)}


@functools.lru_cache(maxsize=None)
def _p_to_s(mu):
    table = char_table(sum(mu), cap=sum(mu))
    return {lam: Fraction(table(lam, mu)) for lam in table.shapes if table(lam, mu)}


@functools.lru_cache(maxsize=None)
def kostka_matrix(n):
    """``K[lam][mu]``: coefficient of m_mu in s_lam, i.e. of s_lam in h_mu."""
    table = char_table(n, cap=n)
    shapes = table.shapes
    # h_mu in the p basis, as a product of h_k = sum_rho p_rho / z_rho
    K = {lam: {} for lam in shapes}
    for mu in shapes:
        hp = {Partition._trusted(()): Fraction(1)}
        for k in mu:
            hp = _mul_p(hp, _h_in_p(k))
        for lam in shapes:
            v = sum(table(lam, rho) * c for rho, c in hp.items())
            if v:
                if v.denominator != 1:
                    raise AssertionError(f"non-integral Kostka number K[{lam}][{mu}] = {v}")
                K[lam][mu] = int(v)
    return MappingProxyType({lam: MappingProxyType(row) for lam, row in K.items()})


@functools.lru_cache(maxsize=None)
def _h_in_p(k):
    table = char_table(k, cap=k)
    return {rho: Fraction(1, table.z[rho]) for rho in table.shapes}


def _index(n):
    return {lam: i for i, lam in enumerate(partitions_of(n))}


def _solve_upper_unitriangular(K, n, rhs, transpose):
    """Solve for x in ``sum_mu x_mu K[.][mu] = rhs`` (or the transposed system).

    K is unitriangular in reverse-lex order, so this is integer back
    substitution when ``rhs`` is integral.
    """
    shapes = partitions_of(n)
    x = {}
    if not transpose:
        # rhs[mu] = sum_lam x[lam] K[lam][mu]; K[lam][mu] != 0 only for lam <= mu in order
        for mu in shapes:
            v = rhs.get(mu, 0) - sum(x[lam] * K[lam].get(mu, 0) for lam in x)
            if v:
                x[mu] = v
    else:
        # rhs[lam] = sum_mu K[lam][mu] x[mu]; process from the end
        for lam in reversed(shapes):
            v = rhs.get(lam, 0) - sum(K[lam].get(mu, 0) * x[mu] for mu in x)
            if v:
                x[lam] = v
    return x


def _by_degree(terms):
    groups = {}
    for lam, c in terms.items():
        groups.setdefault(sum(lam), {})[lam] = c
    return groups


def _linear(terms, image):
    out = {}
    for lam, c in terms.items():
        for mu, v in image(lam).items():
            w = out.get(mu, 0) + c * v
            if w:
                out[mu] = w
            else:
                out.pop(mu, None)
    return out


def _to_s(terms, basis):
    if basis == "s":
        return dict(terms)
    if basis == "p":
        return _linear(terms, _p_to_s)
    if basis == "h":
        # s-coefficients of h_mu are K[lam][mu]
        return _linear(terms, lambda mu: {lam: Fraction(row[mu]) for lam, row in kostka_matrix(sum(mu)).items() if mu in row})
    if basis == "e":
        # e_mu = omega(h_mu): s-coefficient of s_lam is K[lam'][mu]
        return _linear(
            terms,
            lambda mu: {conjugate(lam): Fraction(row[mu]) for lam, row in kostka_matrix(sum(mu)).items() if mu in row},
        )
    if basis == "m":
        out = {}
        for n, group in _by_degree(terms).items():
            K = kostka_matrix(n)
            # m = K^{-1} s: solve sum_lam x_lam K[lam][mu] = c_mu
            for lam, v in _solve_upper_unitriangular(K, n, group, transpose=False).items():
                out[lam] = out.get(lam, 0) + v
        return _clean(out)
    raise DomainError(f"unknown basis {basis!r}")


def _from_s(terms, basis):
    if basis == "s":
        return dict(terms)
    if basis == "p":
        return _linear(terms, _s_to_p)
    if basis == "m":
        return _linear(terms, lambda lam: {mu: Fraction(v) for mu, v in kostka_matrix(sum(lam))[lam].items()})
    if basis in ("h", "e"):
        out = {}
        for n, group in _by_degree(terms).items():
            K = kostka_matrix(n)
            if basis == "e":
                group = {conjugate(lam): c for lam, c in group.items()}
            # group[lam] = sum_mu K[lam][mu] x[mu]
            for mu, v in _solve_upper_unitriangular(K, n, group, transpose=True).items():
                out[mu] = out.get(mu, 0) + v
        return _clean(out)
    raise DomainError(f"unknown basis {basis!r}")


def _convert(terms, source, target):
    if source == target:
        return dict(terms)
    return _from_s(_to_s(terms, source), target)


def to_basis(f, target):
    return f.to_basis(target)


# arithmetic -----------------------------------------------------------------


def _mul_p(a, b):
    out = {}
    for mu, c1 in a.items():
        for nu, c2 in b.items():
            lam = normalize(mu + nu) if mu and nu else (mu or nu)
            v = out.get(lam, 0) + c1 * c2
            if v:
                out[lam] = v
            else:
                del out[lam]
    return out


def mul_p_terms(a, b):
    """Product of two p-basis term dicts."""
    return _mul_p(a, b)


def add(f, g):
    cap = min(f.cap, g.cap)
    g = g.to_basis(f.basis)
    out = dict(f._terms)
    for lam, c in g._terms.items():
        config.check_degree(sum(lam), cap)
        v = out.get(lam, 0) + c
        if v:
            out[lam] = v
        else:
            del out[lam]
    return SymFunc._raw(f.basis, out, cap)


def scale(c, f):
    c = Fraction(c)
    if not c:
        return SymFunc._raw(f.basis, {}, f.cap)
    return SymFunc._raw(f.basis, {lam: c * v for lam, v in f._terms.items()}, f.cap)


def mul(f, g):
    """Product, returned in the basis of ``f``."""
    cap = min(f.cap, g.cap)
    config.check_degree(f.degree + g.degree, cap, "product degree")
    return from_p(_mul_p(f.p_terms(), g.p_terms()), f.basis, cap)


def lr_coeff(mu, nu, lam):
    """Coefficient of s_lam in s_mu * s_nu."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if sum(mu) + sum(nu) != sum(lam):
        raise DomainError(f"|{mu}| + |{nu}| != |{lam}|")
    cap = max(config.get_cap(), sum(lam))
    prod = mul(s(mu, cap=cap), s(nu, cap=cap))
    c = prod.coefficient(lam)
    if c.denominator != 1 or c < 0:
        raise AssertionError(f"invalid Littlewood-Richardson coefficient {c}")
    return int(c)


# specializations ------------------------------------------------------------


def eval_adams(f, phi):
    """Image of ``f`` under the ring map p_n -> phi(n).

    ``phi`` is a callable or a mapping from positive integers to rationals.
    """
    lookup = _as_lookup(phi)
    cache = {}
    total = Fraction(0)
    for mu, c in f.p_terms().items():
        term = c
        for k in mu:
            if k not in cache:
                cache[k] = Fraction(lookup(k))
            term *= cache[k]
            if not term:
                break
        total += term
    return total


def _as_lookup(phi):
    if callable(phi):
        return phi

    def lookup(k):
        try:
            return phi[k]
        except (KeyError, IndexError):
            raise DomainError(f"no value supplied for p_{k}") from None

    return lookup


def principal_schur(lam, d):
    """s_lam(1^d) by the hook-content formula."""
    num = Fraction(1)
    for hook, content in hooks_and_contents(lam):
        num *= Fraction(d + content, hook)
        if not num:
            break
    return num


def eval_principal(f, d):
    """f evaluated at d variables all equal to 1 (hook-content per Schur term)."""
    total = Fraction(0)
    for lam, c in f.to_basis("s")._terms.items():
        total += c * principal_schur(lam, d)
    return total


def expand_polynomial(f, nvars):
    """f as a polynomial in ``nvars`` commuting variables."""
    out = {}
    for mu, c in f.p_terms().items():
        out = polynomial.add(out, polynomial.power_product(mu, nvars), scale=c)
    return out


# text -----------------------------------------------------------------------


def format_coeff(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_term(basis, lam, c):
    if not lam:
        return format_coeff(c)
    body = f"{basis}[{','.join(map(str, lam))}]"
    if c == 1:
        return body
    return f"{format_coeff(c)}*{body}"


def format_symfunc(f):
    items = f.items()
    if not items:
        return "0"
    pieces = []
    for i, (lam, c) in enumerate(items):
        neg = c < 0
        text = format_term(f.basis, lam, -c if neg else c)
        if i == 0:
            pieces.append("-" + text if neg else text)
        else:
            pieces.append((" - " if neg else " + ") + text)
    return "".join(pieces)
