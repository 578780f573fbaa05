#!/usr/bin/env python3
'''
Tests of the exhaustive identity search against a direct enumeration

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

import math
import itertools

import pytest

from FitBound.algebra.polynomials import IntPolynomial
from FitBound.config import override
from FitBound.groups.automorphism import identity_automorphism, satisfies_ordered
from FitBound.groups.constructions import build_ddomain, companion_action, stock
from FitBound.groups.group import exponent
from FitBound.harness.search import coefficient_range, identity_search


def brute_force(phi, max_degree, values):
    found = []
    for d in range(max_degree + 1):
        for coeffs in itertools.product(values, repeat=d + 1):
            if coeffs[-1] != 0 and math.gcd(*coeffs) == 1 and satisfies_ordered(phi, coeffs)[0]:
                found.append(IntPolynomial(coeffs))
    return sorted(found, key=lambda f: (f.degree, f.coeffs))


def test_search_matches_direct_enumeration(c7_square):
    result = identity_search(c7_square, 2, 3)
    assert not result.partial
    assert result.bound == 3
    assert result.identities == brute_force(c7_square, 2, range(-3, 4))
    assert [-2, 1] in result
    assert [1, 1, 1] in result


def test_degree_one_identities_of_squaring(c7_square):
    result = identity_search(c7_square, 1, 3)
    assert [f.coeffs for f in result.identities] == [(-3, -2), (-2, 1), (-1, -3), (1, 3), (2, -1), (3, 2)]


def test_identity_automorphism(s3):
    result = identity_search(identity_automorphism(s3), 1, 1)
    assert [-1, 1] in result
    assert [1, -1] in result
    assert len(result) == 2


def test_companion_splitting_identity():
    _, phi = companion_action(2, [1, 1, 1])
    result = identity_search(phi, 2, 5)
    # exponent 2 caps the coefficients at 1
    assert result.bound == 1
    assert [1, 1, 1] in result
    assert result.identities == brute_force(phi, 2, range(0, 2))


def test_ddomain_frobenius_search():
    phi = build_ddomain(3, 1, 1).frobenius_action(1)
    result = identity_search(phi, 2, 2)
    assert result.identities == brute_force(phi, 2, range(-1, 2))
    assert result.identities


def test_coefficient_range(c7_square):
    assert coefficient_range(c7_square, 10) == range(-3, 4)
    assert coefficient_range(c7_square, 1) == range(-1, 2)
    trivial = identity_automorphism(stock('trivial'))
    assert coefficient_range(trivial, 4) == range(-1, 2)
    # -2 and 2 are one residue mod 4
    assert coefficient_range(identity_automorphism(stock('C4')), 5) == range(-1, 3)
    assert coefficient_range(identity_automorphism(stock('C2')), 5) == range(0, 2)
    assert coefficient_range(identity_automorphism(stock('S3')), 5) == range(-2, 4)
    with pytest.raises(ValueError):
        coefficient_range(c7_square, -1)


def test_search_budget(c7_square):
    with override(search_budget=10):
        result = identity_search(c7_square, 2, 3)
    assert result.partial
    assert result.examined == 10


def test_rejects_negative_degree(c7_square):
    with pytest.raises(ValueError):
        identity_search(c7_square, -1, 2)


@pytest.mark.parametrize('name', ['C4', 'V4', 'D8', 'S3'])
def test_coefficients_are_distinct_residues(name):
    phi = identity_automorphism(stock(name))
    values = list(coefficient_range(phi, 10))
    e = exponent(phi.group)
    assert sorted(a % e for a in values) == list(range(e))
    result = identity_search(phi, 1, 10)
    assert len({tuple(a % e for a in f.coeffs) for f in result.identities}) == len(result)
