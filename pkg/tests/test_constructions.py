#!/usr/bin/env python3
'''
Tests of the group families: stock groups, D_N,K, PSL(2,q), shifted powers and companion actions

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

import numpy as np
import pytest

from FitBound.algebra.polynomials import IntPolynomial
from FitBound.config import override
from FitBound.errors import CapExceededError, NotPrimeError
from FitBound.groups.automorphism import fixed_points, satisfies_ordered
from FitBound.groups.constructions import (build_ddomain, build_psl2, companion_action, companion_matrix,
                                           projection_surjective, shift_power, stock)
from FitBound.groups.structure import is_simple


@pytest.mark.parametrize('name, order', [('trivial', 1), ('V4', 4), ('C1', 1), ('C5', 5), ('D2', 2),
                                         ('D4', 4), ('D10', 10), ('S1', 1), ('S5', 120), ('A3', 3),
                                         ('A6', 360)])
def test_stock_orders(name, order):
    assert stock(name).order == order


@pytest.mark.parametrize('name', ['Q8', 'D7', 'S8', 'C0'])
def test_unknown_stock_groups(name):
    with pytest.raises(ValueError):
        stock(name)


DDOMAIN_CASES = [(p, N) for p in (2, 3, 5) for N in range(p)]


@pytest.mark.parametrize('p, N', DDOMAIN_CASES)
def test_ddomain_order_and_projection(p, N):
    D = build_ddomain(p, 1, N)
    assert D.group.order == p ** 3
    surjective, witnesses = projection_surjective(D)
    assert surjective
    assert len(witnesses) == p ** 2


# every (p, e, N mod p) with q^3 <= 3375; the two largest q only for a few N
AXIOM_CASES = [pytest.param(p, e, N, id=f"q={p ** e},N={N}")
               for p, e in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] for N in range(p)] + \
              [pytest.param(p, 1, N, id=f"q={p},N={N}", marks=pytest.mark.slow)
               for p in (11, 13) for N in (0, 1, p - 1)]


@pytest.mark.parametrize('p, e, N', AXIOM_CASES)
def test_ddomain_satisfies_the_axioms(p, e, N):
    # from_cayley_table checks associativity on every triple below the exhaustive cap
    with override(cayley_cap=4096, exhaustive_check_cap=4096):
        D = build_ddomain(p, e, N, check_axioms=True)
    G = D.group
    q = p ** e
    assert G.order == q ** 3
    assert D.index_of(D.K.zero, D.K.zero) == G.identity
    for k in G.elements():
        inverse = D.inverse_formula(k)
        assert G.mul(k, inverse) == G.identity
        assert G.mul(inverse, k) == G.identity
    assert G.is_abelian() == (N == 0)
    assert projection_surjective(D)[0]


@pytest.mark.parametrize('p, N', DDOMAIN_CASES)
def test_ddomain_frobenius(p, N):
    D = build_ddomain(p, 1, N)
    phi = D.frobenius_action(1)
    assert phi.order() == 2
    assert D.frobenius_action(2).is_identity()
    # fixed points: s, u in GF(p) with 2u = -N s^2
    if p % 2:
        expected = p
    else:
        expected = 4 if N == 0 else 2
    assert fixed_points(phi).order == expected


def test_ddomain_elements_satisfy_the_defining_equation():
    D = build_ddomain(3, 1, 1)
    K, q = D.K, D.q
    for k in D.group.elements():
        s, u = D.element(k)
        assert u + K.power(u, q) == -(K.constant(D.N) * s * K.power(s, q))


def test_ddomain_rejects_bad_parameters():
    with pytest.raises(NotPrimeError):
        build_ddomain(4, 1, 1)
    with pytest.raises(ValueError):
        build_ddomain(2, 0, 1)
    with override(cayley_cap=100):
        with pytest.raises(CapExceededError):
            build_ddomain(5, 1, 1)


@pytest.mark.parametrize('q, order', [(2, 6), (3, 12), (4, 60), (5, 60), (7, 168), (8, 504), (9, 360)])
def test_psl2_orders(q, order):
    P = build_psl2(q)
    assert P.group.order == order
    assert P.group.degree == q + 1
    assert P.q == q


@pytest.mark.parametrize('q', [4, 5, 7, 8])
def test_psl2_is_simple(q):
    assert is_simple(build_psl2(q).group)


def test_psl2_frobenius():
    P = build_psl2(8)
    phi = P.frobenius_action(1)
    assert phi.order() == 3
    # C(phi) = PSL(2, 2)
    assert fixed_points(phi).order == 6
    assert P.frobenius_action(3).is_identity()
    assert fixed_points(build_psl2(4).frobenius_action(1)).order == 6


def test_psl2_needs_a_prime_power():
    for q in (1, 6, 12):
        with pytest.raises(NotPrimeError):
            build_psl2(q)


def test_shift_power(s3):
    c2 = stock('C2')
    power = shift_power(c2, 3)
    G, phi = power
    assert G.order == 8
    assert phi.order() == 3
    assert fixed_points(phi).order == 2
    assert satisfies_ordered(phi, [-1, 0, 0, 1])[0]
    assert power.product.factor_subgroup(0).order == 2

    flat = shift_power(s3, 1)
    assert flat.product is None
    assert flat.group is s3
    assert flat.automorphism.is_identity()
    with pytest.raises(ValueError):
        shift_power(s3, 0)


def test_shift_moves_the_coordinates(s3):
    power = shift_power(s3, 2)
    for g in list(power.group.elements())[::7]:
        a, b = power.product.components(g)
        assert power.product.components(power.automorphism(g)) == (b, a)
    # the diagonal is fixed
    assert fixed_points(power.automorphism).order == 6


def test_companion_matrix():
    assert companion_matrix(2, IntPolynomial([1, 1, 1])).tolist() == [[0, 1], [1, 1]]
    assert companion_matrix(5, IntPolynomial([2, 0, 1])).tolist() == [[0, 3], [1, 0]]


def test_companion_action_on_v4():
    action = companion_action(2, [1, 1, 1])
    G, phi = action
    assert G.order == 4
    assert phi.order() == 3
    assert fixed_points(phi).is_trivial()
    assert satisfies_ordered(phi, [1, 1, 1]) == (True, None)
    assert np.array_equal(action.matrix, companion_matrix(2, IntPolynomial([1, 1, 1])))


def test_companion_action_with_fixed_points():
    # 1 + x + x^2 = (x - 1)^2 mod 3
    _, phi = companion_action(3, [1, 1, 1])
    assert phi.order() == 3
    assert fixed_points(phi).order == 3


def test_companion_action_rejects_bad_polynomials():
    with pytest.raises(NotPrimeError):
        companion_action(4, [1, 1])
    with pytest.raises(ValueError):
        companion_action(2, [0, 1])
    with pytest.raises(ValueError):
        companion_action(3, [1, 1, 2])
