"""Co-operations making symmetric functions a biring.

Each co-operation is a ring map determined by where it sends the power
sums p_n; everything is computed on p-basis terms and converted at the
end. Tensors of any arity are supported internally (the axioms need up to
four factors); :class:`TensorElem` with two factors is the public type.
"""
from fractions import Fraction
from types import MappingProxyType

from . import config
from .errors import DomainError
from .partitions import Partition, normalize, partitions_up_to, sort_key
from .report import Report
from .symfunc import (
    BASES,
    _convert,
    eval_adams,
    format_coeff,
    from_p,
    s,
)

EMPTY = Partition._trusted(())


class TensorElem:
    """Element of a tensor power of the ring, e.g. ``s[2] # s[1] + 1 # s[3]``."""

    __slots__ = ("bases", "_terms", "cap", "_p")

    def __init__(self, bases, terms=None, cap=None):
        bases = tuple(bases)
        for b in bases:
            if b not in BASES:
                raise DomainError(f"unknown basis {b!r}")
        self.bases = bases
        self.cap = config.get_cap() if cap is None else cap
        clean = {}
        for key, c in (terms or {}).items():
            if len(key) != len(bases):
                raise DomainError(f"term {key} does not have {len(bases)} factors")
            key = tuple(k if isinstance(k, Partition) else Partition(k) for k in key)
            for lam in key:
                config.check_degree(sum(lam), self.cap)
            c = Fraction(c)
            v = clean.get(key, 0) + c
            if v:
                clean[key] = v
            else:
                clean.pop(key, None)
        self._terms = clean
        self._p = clean if all(b == "p" for b in bases) else None

    @classmethod
    def _raw(cls, bases, terms, cap):
        self = object.__new__(cls)
        self.bases = tuple(bases)
        self._terms = terms
        self.cap = cap
        self._p = terms if all(b == "p" for b in self.bases) else None
        return self

    @property
    def arity(self):
        return len(self.bases)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: [sort_key(lam) for lam in kv[0]])

    def coefficient(self, *parts):
        return self._terms.get(tuple(Partition(p) for p in parts), Fraction(0))

    def p_terms(self):
        if self._p is None:
            terms = self._terms
            for i, b in enumerate(self.bases):
                terms = _convert_slot(terms, i, b, "p")
            self._p = terms
        return self._p

    def to_bases(self, bases):
        if isinstance(bases, str):
            bases = (bases,) * self.arity
        bases = tuple(bases)
        if len(bases) != self.arity:
            raise DomainError("wrong number of bases")
        if bases == self.bases:
            return self
        terms = self.p_terms()
        for i, b in enumerate(bases):
            terms = _convert_slot(terms, i, "p", b)
        return TensorElem._raw(bases, terms, self.cap)

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        if self.arity != other.arity:
            return False
        if self.bases == other.bases:
            return self._terms == other._terms
        return self.p_terms() == other.p_terms()

    def __hash__(self):
        return hash(frozenset(self.p_terms().items()))

    def __add__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        other = other.to_bases(self.bases)
        return TensorElem._raw(self.bases, _add_terms(self._terms, other._terms), min(self.cap, other.cap))

    def __neg__(self):
        return TensorElem._raw(self.bases, {k: -c for k, c in self._terms.items()}, self.cap)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return TensorElem._raw(self.bases, {}, self.cap)
            return TensorElem._raw(self.bases, {k: c * other for k, c in self._terms.items()}, self.cap)
        if isinstance(other, TensorElem):
            if other.arity != self.arity:
                raise DomainError("tensor arities differ")
            prod = TensorElem._raw(("p",) * self.arity, tensor_mul(self.p_terms(), other.p_terms()), min(self.cap, other.cap))
            return prod.to_bases(self.bases)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"TensorElem({self.bases!r}, {format_tensor(self)!r})"

    def __str__(self):
        return format_tensor(self)


def _add_terms(a, b, scale=1):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _convert_slot(terms, i, source, target):
    if source == target:
        return terms
    out = {}
    cache = {}
    for key, c in terms.items():
        lam = key[i]
        image = cache.get(lam)
        if image is None:
            image = cache[lam] = _convert({lam: Fraction(1)}, source, target)
        for mu, v in image.items():
            k = key[:i] + (mu,) + key[i + 1:]
            w = out.get(k, 0) + c * v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def format_tensor(t):
    items = t.items()
    if not items:
        return "0"
    pieces = []
    for i, (key, c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        factors = " # ".join(
            f"{b}[{','.join(map(str, lam))}]" if lam else "1" for b, lam in zip(t.bases, key)
        )
        body = factors if mag == 1 else f"{format_coeff(mag)}*{factors}"
        if i == 0:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


# tensor algebra on p-basis terms ------------------------------------------


def _mul_partition(a, b):
    if not a:
        return b
    if not b:
        return a
    return normalize(a + b)


def tensor_mul(a, b):
    """Slotwise product of p-basis tensor terms."""
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            key = tuple(_mul_partition(x, y) for x, y in zip(k1, k2))
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def tensor_one(arity):
    return {(EMPTY,) * arity: Fraction(1)}


class RingMap:
    """Ring map out of the symmetric functions into a tensor power.

    ``generator(n)`` gives the image of p_n as p-basis tensor terms of the
    given ``arity`` (arity 0 means scalars, keyed by the empty tuple).
    """

    def __init__(self, name, arity, generator):
        self.name = name
        self.arity = arity
        self._generator = generator
        self._gens = {}
        self._images = {}

    def gen(self, n):
        img = self._gens.get(n)
        if img is None:
            img = self._gens[n] = self._generator(n)
        return img

    def image(self, mu):
        img = self._images.get(mu)
        if img is None:
            if not mu:
                img = tensor_one(self.arity)
            else:
                img = tensor_mul(self.image(mu[1:]), self.gen(mu[0]))
            self._images[mu] = img
        return img

    def apply(self, terms):
        """Apply to single-slot p-terms ``{partition: c}``."""
        out = {}
        for mu, c in terms.items():
            out = _add_terms(out, self.image(mu), c)
        return out


def apply_slot(terms, i, ring_map):
    """Apply ``ring_map`` to factor ``i`` of a tensor, splicing in its output factors."""
    out = {}
    for key, c in terms.items():
        for img_key, v in ring_map.image(key[i]).items():
            k = key[:i] + img_key + key[i + 1:]
            w = out.get(k, 0) + c * v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def permute_slots(terms, order):
    """New factor j is old factor ``order[j]``."""
    out = {}
    for key, c in terms.items():
        out[tuple(key[j] for j in order)] = c
    return out


def codiagonal(terms, i):
    """Multiply factors i and i+1 together."""
    out = {}
    for key, c in terms.items():
        k = key[:i] + (_mul_partition(key[i], key[i + 1]),) + key[i + 2:]
        w = out.get(k, 0) + c
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _pn(n):
    return Partition._trusted((n,))


COADD = RingMap("coaddition", 2, lambda n: {(_pn(n), EMPTY): Fraction(1), (EMPTY, _pn(n)): Fraction(1)})
COMUL = RingMap("comultiplication", 2, lambda n: {(_pn(n), _pn(n)): Fraction(1)})
COZERO = RingMap("co_zero", 0, lambda n: {})
COONE = RingMap("co_one", 0, lambda n: {(): Fraction(1)})
ANTIPODE = RingMap("antipode", 1, lambda n: {(_pn(n),): Fraction(-1)})
IDENTITY = RingMap("id", 1, lambda n: {(_pn(n),): Fraction(1)})


def _lift(f):
    """Single-slot p-terms of f as arity-1 tensor terms."""
    return {(mu,): c for mu, c in f.p_terms().items()}


def _check_cap(f):
    config.check_degree(f.degree, f.cap)


# public co-operations -------------------------------------------------------


def coaddition(f):
    """p_n -> p_n # 1 + 1 # p_n, extended multiplicatively."""
    _check_cap(f)
    return TensorElem._raw(("p", "p"), COADD.apply(f.p_terms()), f.cap).to_bases((f.basis, f.basis))


def comultiplication(f):
    """p_n -> p_n # p_n, extended multiplicatively."""
    _check_cap(f)
    return TensorElem._raw(("p", "p"), COMUL.apply(f.p_terms()), f.cap).to_bases((f.basis, f.basis))


def co_zero(f):
    return eval_adams(f, lambda n: 0)


def co_one(f):
    return eval_adams(f, lambda n: 1)


def antipode(f):
    """The co-negation p_n -> -p_n."""
    _check_cap(f)
    terms = {mu: (-c if len(mu) % 2 else c) for mu, c in f.p_terms().items()}
    return from_p(terms, f.basis, f.cap)


# axiom verification ---------------------------------------------------------


def _render(bases_letter="s"):
    def render(terms):
        if isinstance(terms, (int, Fraction)):
            return format_coeff(terms)
        arity = len(next(iter(terms))) if terms else 1
        t = TensorElem._raw(("p",) * arity, terms, 10**9)
        return format_tensor(t.to_bases((bases_letter,) * arity))

    return render


def _scalar_terms(value, arity=1):
    return {(EMPTY,) * arity: Fraction(value)} if value else {}


def birig_laws(f, report, label=None):
    """Check every biring law on ``f``, recording results in ``report``."""
    label = label or str(f)
    render = _render()
    x = _lift(f)
    alpha = apply_slot(x, 0, COADD)
    mu = apply_slot(x, 0, COMUL)
    o = co_zero(f)

    def check(name, lhs, rhs):
        report.check(name, label, lhs, rhs, render)

    # coaddition
    check("coaddition coassociative", apply_slot(alpha, 0, COADD), apply_slot(alpha, 1, COADD))
    check("coaddition cocommutative", alpha, permute_slots(alpha, (1, 0)))
    check("coaddition counit (o # id)", apply_slot(alpha, 0, COZERO), x)
    check("coaddition counit (id # o)", apply_slot(alpha, 1, COZERO), x)
    # comultiplication
    check("comultiplication coassociative", apply_slot(mu, 0, COMUL), apply_slot(mu, 1, COMUL))
    check("comultiplication cocommutative", mu, permute_slots(mu, (1, 0)))
    check("comultiplication counit (e # id)", apply_slot(mu, 0, COONE), x)
    check("comultiplication counit (id # e)", apply_slot(mu, 1, COONE), x)
    # (id # alpha) mu = (nabla # id # id)(id # swap # id)(mu # mu) alpha
    lhs = apply_slot(mu, 1, COADD)
    rhs = apply_slot(apply_slot(alpha, 1, COMUL), 0, COMUL)
    rhs = codiagonal(permute_slots(rhs, (0, 2, 1, 3)), 0)
    check("co-distributivity", lhs, rhs)
    # (o # id) mu = eta o
    check("co-absorption", apply_slot(mu, 0, COZERO), _scalar_terms(o))
    # co-negation: nabla (id # nu) alpha = eta o = nabla (nu # id) alpha
    check("co-negation (id # nu)", codiagonal(apply_slot(alpha, 1, ANTIPODE), 0), _scalar_terms(o))
    check("co-negation (nu # id)", codiagonal(apply_slot(alpha, 0, ANTIPODE), 0), _scalar_terms(o))
    # ring-map properties of the co-operations on the element itself
    check("antipode involutive", apply_slot(apply_slot(x, 0, ANTIPODE), 0, ANTIPODE), x)


def verify_birig_axioms(max_degree, cap=None):
    """Check the dualized ring axioms on every s_lam with |lam| <= max_degree."""
    cap = config.get_cap() if cap is None else cap
    # co-operations preserve total degree, so nothing exceeds max_degree
    config.check_degree(max_degree, cap, "max_degree")
    report = Report("birig", max_degree)
    for lam in partitions_up_to(max_degree):
        birig_laws(s(lam, cap=cap), report, label=f"s{list(lam)}")
    return report
