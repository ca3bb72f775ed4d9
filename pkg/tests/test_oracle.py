import itertools
import math
import random
from fractions import Fraction

import pytest

from lambdaring.characters import char_table
from lambdaring.errors import CapExceededError
from lambdaring.linalg import ExactMatrix
from lambdaring.oracle import (
    GroupAlgebraElement,
    action_matrix,
    cycle_type,
    identity,
    row_column_symmetrizers,
    schur_image_dim,
    symmetrizer_constant,
    transposition,
    young_symmetrizer,
)
from lambdaring.partitions import partitions_of, partitions_up_to
from lambdaring.symfunc import eval_principal, s
from oracles import all_perms, evaluate, rational_rank, schur_poly

HALF = Fraction(1, 2)
SWAP = (2, 1)


def G(terms, n=2):
    return GroupAlgebraElement(n, terms)


def test_symmetrizer_examples():
    ps, pa = row_column_symmetrizers((2,))
    assert ps == G({(1, 2): HALF, SWAP: HALF})
    assert pa == G({(1, 2): 1})
    ps, pa = row_column_symmetrizers((1, 1))
    assert pa == G({(1, 2): HALF, SWAP: -HALF})
    assert ps == G({(1, 2): 1})
    ps, pa = row_column_symmetrizers((1,))
    assert ps == pa == G({(1,): 1}, 1)


def test_young_symmetrizer_examples():
    assert young_symmetrizer((2,)) == G({(1, 2): HALF, SWAP: HALF})
    assert young_symmetrizer((1, 1)) == G({(1, 2): HALF, SWAP: -HALF})
    assert symmetrizer_constant((2,)) == HALF
    assert symmetrizer_constant((1, 1)) == HALF
    assert symmetrizer_constant((2, 1)) == Fraction(1, 3)


@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(4) if lam])
def test_idempotent(lam):
    e = young_symmetrizer(lam)
    assert e * e == e
    # coefficient of the identity is f^lam / n!
    n = sum(lam)
    assert e.terms[identity(n)] == Fraction(char_table(n)(lam, (1,) * n), math.factorial(n))


def test_symmetrizer_constant_matches_hook_formula():
    # f^lam from the character table
    for lam in partitions_up_to(5):
        if not lam:
            continue
        n = sum(lam)
        dim = char_table(n)(lam, (1,) * n)
        assert symmetrizer_constant(lam) == Fraction(dim, math.factorial(n))


def test_action_examples():
    for d in (1, 2, 3):
        m = action_matrix(G({(1, 2): 1}), d)
        assert m == ExactMatrix.identity(d * d)
    swap = action_matrix(G({SWAP: 1}), 2)
    expected = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    assert swap == ExactMatrix.from_rows(expected)
    proj = action_matrix(young_symmetrizer((2,)), 2)
    assert proj @ proj == proj
    assert proj.rank() == 3 == rational_rank(proj.entries)


def test_action_is_a_homomorphism():
    rng = random.Random(20)
    for _ in range(20):
        n = rng.randint(1, 3)
        d = rng.randint(1, 2)
        perms = all_perms(n)

        def rand():
            return GroupAlgebraElement(n, {rng.choice(perms): Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)})

        a, b = rand(), rand()
        assert action_matrix(a * b, d) == action_matrix(a, d) @ action_matrix(b, d)
        assert action_matrix(a + b, d) == action_matrix(a, d) + action_matrix(b, d)


def test_image_dim_examples():
    assert schur_image_dim((2,), 2) == 3
    assert schur_image_dim((1, 1), 2) == 1
    assert schur_image_dim((1, 1, 1), 2) == 0


@pytest.mark.parametrize("d", [0, 1, 2, 3])
@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(4) if lam])
def test_keystone(lam, d):
    assert schur_image_dim(lam, d) == eval_principal(s(lam), d)


@pytest.mark.parametrize("lam", [(2, 1), (3,), (1, 1, 1), (2, 2)])
def test_block_rank_equals_full_rank(lam):
    d = 2
    assert schur_image_dim(lam, d) == action_matrix(young_symmetrizer(lam), d).rank()


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", [1, 2, 3])
def test_permutation_traces_recover_characters(n, d):
    # trace of a place permutation of cycle type mu on the whole tensor power is d^len(mu),
    # and splits over irreducibles as sum_lam chi^lam(mu) * dim of the lam-isotypic factor
    table = char_table(n)
    dims = {lam: schur_image_dim(lam, d) for lam in partitions_of(n)}
    for mu in partitions_of(n):
        perm = next(g for g in all_perms(n) if cycle_type(g) == mu)
        tr = action_matrix(GroupAlgebraElement.of(perm), d).trace()
        assert tr == d ** len(mu)
        assert tr == sum(table(lam, mu) * dims[lam] for lam in partitions_of(n))


@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(3) if lam])
def test_diagonal_traces_give_schur_polynomials(lam):
    # tr(D^{tensor n} e_lam) with D = diag(x) is s_lam(x)
    d, n = 2, sum(lam)
    x = (Fraction(3), Fraction(-2, 5))
    e = action_matrix(young_symmetrizer(lam), d)
    total = Fraction(0)
    for idx, digits in enumerate(itertools.product(range(d), repeat=n)):
        weight = Fraction(1)
        for k in digits:
            weight *= x[k]
        total += weight * e.entries[idx][idx]
    assert total == evaluate(schur_poly(lam, d), x)


def test_helpers():
    assert transposition(3, 1, 3) == (3, 2, 1)
    assert cycle_type((2, 3, 1, 4)) == (3, 1)
    with pytest.raises(ValueError):
        GroupAlgebraElement(2, {(1, 1): 1})


def test_guards():
    with pytest.raises(CapExceededError):
        young_symmetrizer((3, 3))
    with pytest.raises(CapExceededError):
        schur_image_dim((2, 2), 11)
    with pytest.raises(CapExceededError):
        action_matrix(GroupAlgebraElement.of((1, 2, 3, 4, 5)), 7)
