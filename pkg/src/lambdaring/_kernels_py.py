"""Pure-Python reference implementations of the hot kernels.

``_kernels.pyx`` mirrors these signatures exactly; :mod:`lambdaring._native`
picks whichever is available.
"""


def _beta_to_shape(beta):
    # beta is strictly decreasing; part i is beta[i] - (len - 1 - i)
    L = len(beta)
    shape = [b - (L - 1 - i) for i, b in enumerate(beta)]
    while shape and shape[-1] == 0:
        shape.pop()
    return tuple(shape)


def _shape_to_beta(shape):
    L = len(shape)
    return [p + (L - 1 - i) for i, p in enumerate(shape)]


def _mn(shape, cycle, start, memo):
    if start == len(cycle):
        return 1 if not shape else 0
    key = (shape, cycle[start:])
    hit = memo.get(key)
    if hit is not None:
        return hit
    k = cycle[start]
    beta = _shape_to_beta(shape)
    occupied = set(beta)
    total = 0
    for i, b in enumerate(beta):
        t = b - k
        if t < 0 or t in occupied:
            continue
        # beads strictly between t and b
        between = 0
        for c in beta:
            if t < c < b:
                between += 1
        new_beta = beta[:i] + beta[i + 1:] + [t]
        new_beta.sort(reverse=True)
        val = _mn(_beta_to_shape(new_beta), cycle, start + 1, memo)
        if val:
            total += -val if between & 1 else val
    memo[key] = total
    return total


def mn_table(shapes, cycles):
    """Murnaghan-Nakayama: ``table[i][j] = chi^{shapes[i]}(cycles[j])``."""
    memo = {}
    return [[_mn(tuple(lam), tuple(mu), 0, memo) for mu in cycles] for lam in shapes]


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free elimination.

    ``rows`` is consumed (copied first); entries must be Python ints.
    """
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        pivot = None
        for r in range(rank, m):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        prow = a[rank]
        p = prow[col]
        for r in range(rank + 1, m):
            row = a[r]
            f = row[col]
            if f == 0:
                if p != prev:
                    for c in range(col + 1, n):
                        row[c] = row[c] * p // prev
            else:
                for c in range(col + 1, n):
                    row[c] = (row[c] * p - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def place_permutation(perm, d):
    """Index map of a place permutation on ``(C^d)^{tensor n}``.

    ``perm`` is 0-indexed one-line notation; the factor in slot ``k`` moves
    to slot ``perm[k]``. Basis tensors are numbered base ``d`` with slot 0
    most significant. Returns ``target`` with ``target[i]`` the image of ``i``.
    """
    n = len(perm)
    total = d ** n
    weights = [d ** (n - 1 - k) for k in range(n)]
    moved = [weights[perm[k]] for k in range(n)]
    target = [0] * total
    for idx in range(total):
        rest = idx
        out = 0
        for k in range(n):
            digit = rest // weights[k]
            rest -= digit * weights[k]
            out += digit * moved[k]
        target[idx] = out
    return target
