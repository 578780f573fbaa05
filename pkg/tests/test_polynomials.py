#!/usr/bin/env python3
'''
Tests of integer polynomials, identities and the bound functions

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

import math

import numpy as np
import pytest

from FitBound.algebra.polynomials import (BigBound, IntPolynomial, UnorderedIdentity, b1, b2, b3, content,
                                          corollary_bound, exponent_identity, is_primitive, n_abelian_identity,
                                          order_identity, partial_sum, primitive_partial_exists, shalev_bound,
                                          splitting_identity)
from FitBound.config import override
from FitBound.errors import ImplementationError


def test_trailing_zeros_are_stripped():
    f = IntPolynomial([1, 2, 0, 0])
    assert f.coeffs == (1, 2)
    assert f.degree == 1
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial().degree is None


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        IntPolynomial([1.5])
    with pytest.raises(TypeError):
        IntPolynomial(['a'])


def test_content_and_primitivity():
    assert content(IntPolynomial([60])) == 60
    assert content(IntPolynomial([4, -6])) == 2
    assert content(IntPolynomial()) == 0
    assert is_primitive(IntPolynomial([-2, 1]))
    assert not is_primitive(IntPolynomial([60]))
    assert not is_primitive(IntPolynomial())


def test_evaluate():
    f = IntPolynomial([1, 1, 1])
    assert f.evaluate(1) == 3
    assert f.evaluate(2) == 7
    assert IntPolynomial([-1, 0, 0, 0, 0, 1]).evaluate(1) == 0


def test_partial_sums():
    f = IntPolynomial([1, 2, 3, 4, 5])
    assert partial_sum(f, 2, 0) == IntPolynomial([1, 3, 5])
    assert partial_sum(f, 2, 1) == IntPolynomial([2, 4])
    assert partial_sum(f, 1, 0) == f
    assert f.compress(3, 2) == IntPolynomial([3])
    with pytest.raises(ValueError):
        partial_sum(f, 2, 2)
    with pytest.raises(ValueError):
        partial_sum(f, 0, 0)


def test_partial_sums_regroup_the_polynomial():
    f = IntPolynomial([3, -1, 4, 1, -5, 9, 2])
    n = 3
    total = [0] * len(f)
    for j in range(n):
        for k, c in enumerate(partial_sum(f, n, j)):
            total[k * n + j] += c
    assert IntPolynomial(total) == f


def test_content_is_the_gcd_of_the_partial_sums():
    rng = np.random.default_rng(20261019)
    for _ in range(200):
        scale = int(rng.integers(1, 7))
        coeffs = [scale * int(c) for c in rng.integers(-15, 16, size=int(rng.integers(1, 10)))]
        f = IntPolynomial(coeffs)
        for n in range(1, 6):
            partials = [content(partial_sum(f, n, j)) for j in range(n)]
            assert content(f) == math.gcd(*partials)


def test_primitive_partial_exists():
    assert primitive_partial_exists(IntPolynomial([2, 1]), 2) == 1
    assert primitive_partial_exists(IntPolynomial([-1, 0, 0, 1]), 3) == 0
    with pytest.raises(ValueError):
        primitive_partial_exists(IntPolynomial([2, 4]), 2)


def test_unordered_identity():
    u = UnorderedIdentity([(2, 1), (0, -1), (2, -3)])
    assert u.max_exponent() == 2
    assert u.underlying() == IntPolynomial([-1, 0, -2])
    assert UnorderedIdentity.from_polynomial(IntPolynomial([1, 0, 2])) == ((0, 1), (2, 2))
    # cancelling terms: d is the largest exponent, not the collapsed degree
    v = UnorderedIdentity([(0, -1), (3, 1), (1, 1), (3, -1)])
    assert v.max_exponent() == 3
    assert v.underlying().degree == 1
    with pytest.raises(ValueError):
        UnorderedIdentity([(-1, 1)])


def test_named_identities():
    assert exponent_identity(6) == IntPolynomial([6])
    assert n_abelian_identity(3) == IntPolynomial([-3, 1])
    assert order_identity(3) == IntPolynomial([-1, 0, 0, 1])
    assert splitting_identity(3) == IntPolynomial([1, 1, 1])
    with pytest.raises(ValueError):
        order_identity(0)


def test_b1():
    assert b1(1, 0) == 10
    assert b1(5, 6) == 48
    assert b1(0, 0) == 2
    with pytest.raises(ValueError):
        b1(-1, 0)


def test_b3():
    assert b3(3, 1) == 2
    assert b3(0, 7) == 8
    assert b3(1, 2).value == 2 + 2 ** 1000
    with pytest.raises(ValueError):
        b3(1, 0)


@pytest.mark.parametrize('d', range(11))
def test_b2_is_one_for_m_one(d):
    assert b2(d, 1) == 1
    assert b2(d, 1).is_exact()


def test_b2_certificate_exceeds_desk_scale():
    B = b2(1, 2)
    assert not B.is_exact()
    assert B.ge(10 ** 9)
    assert B >= 10 ** 9
    assert not B.le_int(10 ** 9)
    assert isinstance(B.to_json(), dict)
    assert B.to_json()['certificate'][0]['factorial'] is True


def test_b2_certificate_must_reach_the_desk_scale():
    with override(desk_scale=2 ** 2100):
        with pytest.raises(ImplementationError):
            b2(1, 2)


def test_b2_is_exact_within_a_generous_budget():
    with override(bound_digit_budget=10 ** 6):
        B = b2(0, 2)
    # B3(0, 2) = 3, so B2(0, 2) = (3^0)! * B2(0, 1) = 1
    assert B == 1


def test_big_bound_comparisons():
    small = BigBound(exact=5)
    assert small.ge(5) and not small.ge(6)
    assert small.le_int(5) and not small.le_int(4)
    assert small.to_json() == '5'
    assert b2(2, 4) >= b2(1, 2)
    with pytest.raises(ValueError):
        BigBound()


def test_b2_is_monotone():
    for d in range(4):
        for m in range(1, 9):
            assert b2(d, m + 1) >= b2(d, m)
            assert b2(d + 1, m) >= b2(d, m)
    assert b2(1, 8) >= b2(1, 2)


def test_corollary_bound():
    assert corollary_bound(IntPolynomial([-2, 1])) == 12
    assert corollary_bound(IntPolynomial([1, 1, 1])) == 24
    with pytest.raises(ValueError):
        corollary_bound(IntPolynomial([-1, 0, 0, 0, 0, 1]))


@pytest.mark.parametrize('n, expected', [(1, 1), (2, 3), (8, 7), (12, 15), (60, 45)])
def test_shalev_bound(n, expected):
    assert shalev_bound(n) == expected


def test_shalev_bound_at_most_twice_n():
    assert all(shalev_bound(n) <= 2 * n for n in range(1, 200))
