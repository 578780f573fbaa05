#!/usr/bin/env python3
'''
Exhaustive search for ordered identities of an automorphism

Coefficient vectors are walked depth first, a_0 first; every node carries the
elementwise product g^a_0 phi(g)^a_1 ... phi^i(g)^a_i, so a vector costs one
vectorised multiplication on top of its prefix.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'SearchResult',
    'coefficient_range',
    'identity_search',
]

import math
import logging
import dataclasses

import numpy as np

from ..algebra.polynomials import IntPolynomial
from ..config import get_settings
from ..groups.automorphism import Automorphism
from ..groups.group import exponent

log = logging.getLogger(__name__)


@dataclasses.dataclass
class SearchResult:
    '''
    the identities found by `identity_search`

    @parameters :
    * `identities`  :   primitive identities, by degree then coefficient tuple
    * `bound`       :   the coefficient bound actually used
    * `examined`    :   the number of coefficient vectors evaluated
    * `partial`     :   True if the search budget ran out first
    '''
    identities: 'list[IntPolynomial]'
    bound: int
    examined: int
    partial: bool = False

    def __contains__(self, f) -> bool:
        return IntPolynomial(f) in self.identities

    def __len__(self) -> int:
        return len(self.identities)


def coefficient_range(phi: Automorphism, coeff_bound: int) -> range:
    '''
    the integers |a| <= min(coeff_bound, exponent/2) tried for each coefficient

    each residue mod the exponent appears once: for an even exponent e the
    range stops at -e/2 + 1 when it reaches e/2. a trivial group has exponent
    1 and keeps the range -1..1
    '''
    if coeff_bound < 0:
        raise ValueError(f"the coefficient bound must be nonnegative, not {coeff_bound}")
    e = exponent(phi.group)
    b = min(int(coeff_bound), max(e // 2, 1))
    if 2 * b == e:
        return range(-b + 1, b + 1)
    return range(-b, b + 1)


def identity_search(phi: Automorphism, max_degree: int, coeff_bound: int) -> SearchResult:
    '''
    all primitive ordered identities of phi up to a degree and coefficient bound

    @parameters :
    * `phi`         :   the automorphism
    * `max_degree`  :   the largest degree d tried (a_d != 0)
    * `coeff_bound` :   the largest |a_i| tried, further capped by exponent(G)/2

    @returns :
    * a SearchResult, flagged partial if more than `search_budget` vectors were needed
    '''
    if max_degree < 0:
        raise ValueError(f"the degree must be nonnegative, not {max_degree}")
    G = phi.group
    values = coefficient_range(phi, coeff_bound)
    budget = get_settings().search_budget
    # powers[i][a] = phi^i(g)^a for every g
    powers = []
    for i in range(max_degree + 1):
        images = phi.power_images(i)
        powers.append({a: G.power_many(images, a) for a in values})
    identity = np.full(G.order, G.identity, dtype=np.int64)

    found: 'list[IntPolynomial]' = []
    examined = 0
    partial = False
    stack = [((), identity)]
    while stack:
        prefix, product = stack.pop()
        i = len(prefix)
        # reversed so that the smallest coefficient is expanded first
        for a in reversed(values):
            if examined >= budget:
                partial = True
                break
            examined += 1
            coeffs = prefix + (a,)
            current = G.mul_many(product, powers[i][a])
            if a != 0 and math.gcd(*coeffs) == 1 and np.array_equal(current, identity):
                found.append(IntPolynomial(coeffs))
            if i < max_degree:
                stack.append((coeffs, current))
        if partial:
            break
    if partial:
        log.warning(f"identity search for {phi!r} stopped after {examined} vectors, "
                    f"results up to degree {max_degree} are incomplete")
    found.sort(key=lambda f: (f.degree, f.coeffs))
    log.debug(f"identity search for {phi!r}: {len(found)} identities in {examined} vectors")
    return SearchResult(found, values.stop - 1, examined, partial)
