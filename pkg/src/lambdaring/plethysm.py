"""Plethysm (substitution product), Adams operations and the plethory checks.

``f . g`` is computed by writing f in power sums and replacing each p_n by
the Adams image of g, i.e. g with every p_k turned into p_{nk}. Constant
terms of g pass through unchanged.
"""
import itertools
from fractions import Fraction

from . import config, polynomial
from .birig import (
    COADD,
    COMUL,
    TensorElem,
    co_one,
    co_zero,
    format_tensor,
    tensor_mul,
    tensor_one,
)
from .errors import DomainError, OracleInapplicableError
from .partitions import Partition, partitions_up_to
from .report import Report
from .symfunc import (
    SymFunc,
    add,
    constant,
    eval_adams,
    expand_polynomial,
    format_symfunc,
    from_p,
    mul,
    mul_p_terms,
    s,
    zero,
)


def _scale_partition(mu, n):
    return Partition._trusted(tuple(n * k for k in mu))


def adams_terms(n, terms):
    """Adams operation on p-basis terms: p_mu -> p_{n mu}."""
    return {_scale_partition(mu, n): c for mu, c in terms.items()}


def _compose(f_terms, image_of_pn, one, mul_terms):
    """Substitute p_n -> image_of_pn(n) into p-basis terms of f."""
    cache = {}
    out = {}
    for mu, c in f_terms.items():
        prod = one
        for k in mu:
            img = cache.get(k)
            if img is None:
                img = cache[k] = image_of_pn(k)
            prod = mul_terms(prod, img)
            if not prod:
                break
        for key, v in prod.items():
            w = out.get(key, 0) + c * v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return out


def plethysm(f, g):
    """Substitution product f . g, returned in the basis of ``f``."""
    cap = min(f.cap, g.cap)
    config.check_degree(f.degree * g.degree, cap, "plethysm degree")
    g_terms = g.p_terms()
    terms = _compose(
        f.p_terms(),
        lambda n: adams_terms(n, g_terms),
        {Partition._trusted(()): Fraction(1)},
        mul_p_terms,
    )
    return from_p(terms, f.basis, cap)


def adams(n, f):
    """The ring endomorphism p_k -> p_{nk}; equals plethysm by p_n."""
    if not isinstance(n, int) or n < 1:
        raise DomainError("Adams operations are indexed by positive integers")
    config.check_degree(n * f.degree, f.cap, "Adams degree")
    return from_p(adams_terms(n, f.p_terms()), f.basis, f.cap)


def plethysm_tensor(f, t):
    """f . T for T in a tensor power, with p_n acting on every factor at once."""
    t_terms = t.p_terms()
    slot_degree = max((sum(lam) for key in t_terms for lam in key), default=0)
    config.check_degree(f.degree * slot_degree, min(f.cap, t.cap), "plethysm factor degree")
    terms = _compose(
        f.p_terms(),
        lambda n: {tuple(_scale_partition(lam, n) for lam in key): c for key, c in t_terms.items()},
        tensor_one(t.arity),
        tensor_mul,
    )
    out = TensorElem._raw(("p",) * t.arity, terms, min(f.cap, t.cap))
    return out.to_bases(t.bases)


def plethysm_oracle(f, g, nvars):
    """f evaluated at the monomials of g(x_1..x_nvars), listed with multiplicity.

    Works only when g has nonnegative integer monomial coefficients; the
    result should equal ``expand_polynomial(plethysm(f, g), nvars)``.
    """
    g_poly = expand_polynomial(g, nvars)
    for mono, c in g_poly.items():
        if c < 0 or Fraction(c).denominator != 1:
            raise OracleInapplicableError(
                f"g is not monomial-positive over {nvars} variables (coefficient {c} at {mono})"
            )
    monomials = [(mono, int(c)) for mono, c in g_poly.items()]

    def power_sum_at_monomials(k):
        # p_k(y) where y runs over the monomials: sum of mono^k with multiplicity
        return {tuple(k * a for a in mono): c for mono, c in monomials}

    out = {}
    for mu, c in f.p_terms().items():
        term = polynomial.constant(1, nvars)
        for k in mu:
            term = polynomial.mul(term, power_sum_at_monomials(k))
        out = polynomial.add(out, term, scale=c)
    return out


# plethory verification -------------------------------------------------------


def _render_sym(f):
    if isinstance(f, SymFunc):
        return format_symfunc(f.to_basis("s"))
    if isinstance(f, TensorElem):
        return format_tensor(f.to_bases("s"))
    return str(f)


def _label(*elems):
    return ", ".join(f"s{list(e)}" if isinstance(e, tuple) else str(e) for e in elems)


def verify_plethory(max_degree, cap=None, composite_degree=None):
    """Check plethory laws on Schur generators s_lam with 1 <= |lam| <= max_degree.

    Only combinations whose composite degree is at most ``composite_degree``
    (default ``min(max_degree ** 2, cap)``) are checked.
    """
    cap = config.get_cap() if cap is None else cap
    bound = min(max_degree * max_degree, cap) if composite_degree is None else composite_degree
    config.check_degree(bound, cap, "composite degree")
    report = Report("plethory", max_degree)
    shapes = [lam for lam in partitions_up_to(max_degree) if lam]
    # generators live in the p basis so intermediate results never leave it
    gens = {lam: s(lam, cap=cap).to_basis("p") for lam in shapes}
    one = constant(1, "p", cap=cap)
    unit = s(1, cap=cap).to_basis("p")
    cache = {}

    def pl(f_key, g_key, f, g):
        key = (f_key, g_key)
        if key not in cache:
            cache[key] = plethysm(f, g)
        return cache[key]

    def check(name, inputs, lhs, rhs):
        report.check(name, inputs, lhs, rhs, _render_sym)

    # associativity
    for a, b, c in itertools.product(shapes, repeat=3):
        if sum(a) * sum(b) * sum(c) > bound:
            continue
        f, g, h = gens[a], gens[b], gens[c]
        left = plethysm(pl(a, b, f, g), h)
        right = plethysm(f, pl(b, c, g, h))
        check("associativity", _label(a, b, c), left, right)

    # two-sided unit
    for a in shapes:
        f = gens[a]
        check("left unit s[1] . f", _label(a), plethysm(unit, f), f)
        check("right unit f . s[1]", _label(a), plethysm(f, unit), f)

    # left ring-map laws in the first argument
    for c in shapes:
        h = gens[c]
        check("1 . h = 1", _label(c), plethysm(one, h), one)
        check("0 . h = 0", _label(c), plethysm(zero("p", cap=cap), h), zero("p", cap=cap))
    for a, b, c in itertools.product(shapes, repeat=3):
        f, g, h = gens[a], gens[b], gens[c]
        if max(sum(a), sum(b)) * sum(c) <= bound:
            check(
                "(f + g) . h = f . h + g . h",
                _label(a, b, c),
                plethysm(add(f, g), h),
                add(pl(a, c, f, h), pl(b, c, g, h)),
            )
        if (sum(a) + sum(b)) * sum(c) <= bound:
            check(
                "(f g) . h = (f . h)(g . h)",
                _label(a, b, c),
                plethysm(mul(f, g), h),
                mul(pl(a, c, f, h), pl(b, c, g, h)),
            )

    # compatibility with the co-operations; right arguments also get a
    # constant term so the p_n(c) = c convention is exercised
    for a, b in itertools.product(shapes, repeat=2):
        if sum(a) * sum(b) > bound:
            continue
        f = gens[a]
        for shift in (0, 1):
            g = add(gens[b], constant(shift, "p", cap=cap)) if shift else gens[b]
            fg = pl(a, b, f, g) if not shift else plethysm(f, g)
            label = _label(a, b) + (f" + {shift}" if shift else "")
            zg, eg = co_zero(g), co_one(g)
            check("co_zero(f . g) = f(p_n -> co_zero(g))", label, co_zero(fg), eval_adams(f, lambda n: zg))
            check("co_one(f . g) = f(p_n -> co_one(g))", label, co_one(fg), eval_adams(f, lambda n: eg))
            for name, op in (("coaddition", COADD), ("comultiplication", COMUL)):
                lhs = TensorElem._raw(("p", "p"), op.apply(fg.p_terms()), cap)
                rhs = plethysm_tensor(f, TensorElem._raw(("p", "p"), op.apply(g.p_terms()), cap))
                check(f"{name}(f . g) = f . {name}(g)", label, lhs, rhs)
    return report
