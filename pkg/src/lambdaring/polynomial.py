"""Sparse multivariate polynomials: ``{exponent tuple: coefficient}``.

Just enough arithmetic to realize symmetric functions in finitely many
variables, which is how products and plethysms are checked independently.
"""
import functools


def add(a, b, scale=1):
    out = dict(a)
    for mono, c in b.items():
        v = out.get(mono, 0) + scale * c
        if v:
            out[mono] = v
        else:
            out.pop(mono, None)
    return out


def mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = tuple(x + y for x, y in zip(m1, m2))
            v = out.get(mono, 0) + c1 * c2
            if v:
                out[mono] = v
            else:
                del out[mono]
    return out


def constant(c, nvars):
    return {(0,) * nvars: c} if c else {}


def power_sum(k, nvars):
    out = {}
    for i in range(nvars):
        mono = [0] * nvars
        mono[i] = k
        out[tuple(mono)] = 1
    return out


@functools.lru_cache(maxsize=4096)
def _power_product(mu, nvars):
    poly = constant(1, nvars)
    for k in mu:
        poly = mul(poly, power_sum(k, nvars))
    return poly


def power_product(mu, nvars):
    """p_mu(x_1..x_nvars) with integer coefficients (cached; do not mutate)."""
    return _power_product(tuple(mu), nvars)


def is_symmetric(poly):
    return all(poly.get(tuple(sorted(m, reverse=True))) == c for m, c in poly.items())


def degree(poly):
    return max((sum(m) for m in poly), default=0)
