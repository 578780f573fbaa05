#!/usr/bin/env python3
'''
Builders for the concrete group families

* stock groups: trivial, C_n, D_2n, S_n, A_n, V4
* the group D_N,K on the pairs (s, u) of K = GF(q^2) with u + u^q = -N s s^q
* PSL(2, q) on the projective line, with its Frobenius automorphisms
* direct powers S^n with the cyclic shift of the coordinates
* elementary abelian groups with the companion action of a polynomial

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'stock',
    'DDomainGroup',
    'build_ddomain',
    'projection_surjective',
    'PSL2',
    'build_psl2',
    'ShiftPower',
    'shift_power',
    'CompanionAction',
    'companion_matrix',
    'companion_action',
]

import re
import typing
import logging
import dataclasses

import numpy as np
import sympy

from ..algebra.finite_field import FieldElement, FiniteField, make_field
from ..algebra.polynomials import IntPolynomial
from ..config import get_settings
from ..errors import CapExceededError, ImplementationError, NotPrimeError
from .automorphism import Automorphism, from_images, from_point_map, identity_automorphism
from .group import (CayleyGroup, DirectProduct, Group, PermutationGroup, direct_product,
                    from_cayley_table, from_permutations)

log = logging.getLogger(__name__)

_STOCK_CAP = 7
_STOCK_NAME = re.compile(r'^\s*([CDSA])\s*_?\s*(\d+)\s*$', re.IGNORECASE)


def _cycle(n: int) -> 'list[int]':
    return [(i + 1) % n for i in range(n)]


def stock(name: str) -> PermutationGroup:
    '''
    a named small group as a permutation group

    @parameters :
    * `name`    :   'trivial', 'V4', 'C<n>', 'D<2n>', 'S<n>' or 'A<n>' (n <= 7 for S and A)
    '''
    label = name.strip()
    if label.lower() in ('trivial', '1'):
        return from_permutations(1, [], 'trivial')
    if label.upper() == 'V4':
        return from_permutations(4, ['(1 2)(3 4)', '(1 3)(2 4)'], 'V4')
    match = _STOCK_NAME.match(label)
    if match is None:
        raise ValueError(f"unknown stock group '{name}'")
    kind, n = match.group(1).upper(), int(match.group(2))
    if n < 1:
        raise ValueError(f"unknown stock group '{name}'")
    label = f"{kind}{n}"

    if kind == 'C':
        return from_permutations(n, [_cycle(n)], label)
    if kind == 'D':
        if n % 2:
            raise ValueError(f"dihedral groups have even order, not {n}")
        k = n // 2
        if k == 1:
            return from_permutations(2, [[1, 0]], label)
        if k == 2:
            return from_permutations(4, ['(1 2)(3 4)', '(1 3)(2 4)'], label)
        reflection = [(-i) % k for i in range(k)]
        return from_permutations(k, [_cycle(k), reflection], label)
    if n > _STOCK_CAP:
        raise ValueError(f"stock {kind}_n is available for n <= {_STOCK_CAP}")
    if kind == 'S':
        if n == 1:
            return from_permutations(1, [], label)
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        return from_permutations(n, [swap, _cycle(n)], label)
    # kind == 'A'
    gens = []
    for k in range(2, n):
        three_cycle = list(range(n))
        three_cycle[0], three_cycle[1], three_cycle[k] = 1, k, 0
        gens.append(three_cycle)
    return from_permutations(n, gens, label)


@dataclasses.dataclass
class DDomainGroup:
    '''
    the group D_N,K with its coordinatewise Frobenius

    @parameters :
    * `group`   :   the Cayley group on the pairs, numbered in (s, u) order
    * `K`       :   the field GF(q^2)
    * `q`       :   the order of the subfield
    * `N`       :   the structure constant, reduced mod p
    * `pairs`   :   the field element indices (s, u) of every group element
    '''
    group: CayleyGroup
    K: FiniteField
    q: int
    N: int
    pairs: np.ndarray

    def element(self, k: int) -> 'tuple[FieldElement, FieldElement]':
        s, u = self.pairs[k]
        return self.K.from_index(int(s)), self.K.from_index(int(u))

    def index_of(self, s: FieldElement, u: FieldElement) -> int:
        hits = np.nonzero((self.pairs[:, 0] == s.index) & (self.pairs[:, 1] == u.index))[0]
        if not len(hits):
            raise KeyError(f"({s!r}, {u!r}) is not in D_{self.N},K")
        return int(hits[0])

    def inverse_formula(self, k: int) -> int:
        '''(s, u) -> (-s, u^q)'''
        s, u = self.element(k)
        return self.index_of(-s, self.K.power(u, self.q))

    def frobenius_action(self, k: int = 1) -> Automorphism:
        '''the automorphism applying t -> t^(p^k) to both coordinates'''
        p = self.K.p
        exponent = p ** (int(k) % self.K.e)
        power_of = np.array([self.K.power(t, exponent).index for t in self.K.elements()])
        position = _pair_positions(self.pairs, self.K.order)
        images = position[power_of[self.pairs[:, 0]], power_of[self.pairs[:, 1]]]
        if np.any(images < 0):
            raise ImplementationError("the Frobenius does not preserve D_N,K")
        return from_images(self.group, images, name=f"frob^{int(k) % self.K.e}")


def _pair_positions(pairs: np.ndarray, size: int) -> np.ndarray:
    position = np.full((size, size), -1, dtype=np.int64)
    position[pairs[:, 0], pairs[:, 1]] = np.arange(len(pairs))
    return position


def build_ddomain(p: int, e: int, N: int, check_axioms: bool = False) -> DDomainGroup:
    '''
    build D_N,K for K = GF(q^2), q = p^e, under (s,u)*(t,v) = (s+t, u+v - N s^q t)

    @parameters :
    * `p`, `e`      :   the subfield order q = p^e
    * `N`           :   the structure constant (only its residue mod p matters)
    * `check_axioms`:   (optional) run the full group axiom check on the table

    @raises :
    * NotPrimeError, CapExceededError, GroupAxiomError (only with check_axioms)
    '''
    if not sympy.isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"the extension degree must be positive, not {e}")
    q = p ** e
    settings = get_settings()
    if q ** 3 > min(settings.element_cap, settings.cayley_cap):
        raise CapExceededError(f"D_N,K for q = {q} has {q ** 3} elements, over the caps")
    N = int(N) % p
    K = make_field(p, 2 * e)
    add, mul = K.add_table(), K.mul_table()
    power_q = np.array([K.power(t, q).index for t in K.elements()])
    negative = np.array([(-t).index for t in K.elements()])
    n_const = K.constant(N).index

    # pairs with u + u^q = -N s s^q, in (s, u) order
    lhs = add[np.arange(K.order), power_q]
    rhs = negative[mul[n_const, mul[np.arange(K.order), power_q]]]
    pairs = np.argwhere(lhs[None, :] == rhs[:, None])
    position = _pair_positions(pairs, K.order)

    S, U = pairs[:, 0], pairs[:, 1]
    s3 = add[S[:, None], S[None, :]]
    correction = negative[mul[n_const, mul[power_q[S][:, None], S[None, :]]]]
    u3 = add[add[U[:, None], U[None, :]], correction]
    table = position[s3, u3]
    if np.any(table < 0):
        raise ImplementationError("D_N,K is not closed under its product")

    label = f"D_{N},GF({K.order})"
    group = from_cayley_table(table, label) if check_axioms \
        else CayleyGroup(table, int(position[0, 0]), label)
    log.debug(f"{label}: {len(pairs)} elements")
    return DDomainGroup(group, K, q, N, pairs)


def projection_surjective(D: DDomainGroup) -> 'tuple[bool, dict[FieldElement, FieldElement]]':
    '''
    whether every s in K is the first coordinate of some pair

    @returns :
    * `(surjective, witnesses)` with witnesses mapping each covered s to its first partner u
    '''
    witnesses = {}
    for s, u in D.pairs:
        s_elem = D.K.from_index(int(s))
        if s_elem not in witnesses:
            witnesses[s_elem] = D.K.from_index(int(u))
    return len(witnesses) == D.K.order, witnesses


@dataclasses.dataclass
class PSL2:
    '''
    PSL(2, q) acting on the projective line GF(q) u {inf}

    @parameters :
    * `group`   :   the permutation group on q + 1 points, point q being infinity
    * `K`       :   the field GF(q)
    '''
    group: PermutationGroup
    K: FiniteField

    @property
    def q(self) -> int:
        return self.K.order

    def frobenius_action(self, k: int = 1) -> Automorphism:
        '''the automorphism induced by t -> t^(p^k) on the points'''
        exponent = self.K.p ** (int(k) % self.K.e)
        points = [self.K.power(t, exponent).index for t in self.K.elements()] + [self.q]
        return from_point_map(self.group, points, name=f"frob^{int(k) % self.K.e}")


def build_psl2(q: int) -> PSL2:
    '''
    PSL(2, q), generated by x -> x + 1, x -> w^2 x and x -> -1/x

    @raises :
    * NotPrimeError if q is not a prime power, CapExceededError over the caps
    '''
    factors = sympy.factorint(q)
    if q < 2 or len(factors) != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    (p, e), = factors.items()
    K = make_field(p, e)
    infinity = q
    one, square = K.one, K.power(K.omega, 2)
    translation = [(t + one).index for t in K.elements()] + [infinity]
    scaling = [K.multiply(square, t).index for t in K.elements()] + [infinity]
    inversion = [infinity if t.is_zero() else (-t.inverse()).index for t in K.elements()] + [0]
    group = from_permutations(q + 1, [translation, scaling, inversion], f"PSL(2,{q})")
    return PSL2(group, K)


@dataclasses.dataclass
class ShiftPower:
    '''
    S^n with the shift (g_1, ..., g_n) -> (g_n, g_1, ..., g_(n-1))

    unpacks as `(group, automorphism)`
    '''
    base: Group
    n: int
    group: Group
    automorphism: Automorphism
    product: typing.Optional[DirectProduct] = None

    def __iter__(self):
        return iter((self.group, self.automorphism))


def shift_power(S: Group, n: int) -> ShiftPower:
    '''the n-th direct power of S with the cyclic coordinate shift'''
    if n < 1:
        raise ValueError(f"the power must be positive, not {n}")
    if n == 1:
        return ShiftPower(S, 1, S, identity_automorphism(S))
    product = direct_product([S] * n, name=f"{S.name}^{n}")
    G = product.group
    images = np.empty(G.order, dtype=np.int64)
    for g in G.elements():
        coords = product.components(g)
        images[g] = product.combine(coords[-1:] + coords[:-1])
    phi = Automorphism(G, images, 'shift')
    return ShiftPower(S, n, G, phi, product)


def companion_matrix(p: int, f: IntPolynomial) -> np.ndarray:
    '''the companion matrix mod p of the monic polynomial f'''
    a = [c % p for c in f.coeffs]
    d = len(a) - 1
    C = np.zeros((d, d), dtype=np.int64)
    C[1:, :-1] = np.eye(d - 1, dtype=np.int64)
    C[:, -1] = [(-c) % p for c in a[:-1]]
    return C


@dataclasses.dataclass
class CompanionAction:
    '''
    (Z/p)^d with the companion matrix of f acting; unpacks as `(group, automorphism)`
    '''
    p: int
    f: IntPolynomial
    matrix: np.ndarray
    group: Group
    automorphism: Automorphism
    product: DirectProduct

    def __iter__(self):
        return iter((self.group, self.automorphism))


def companion_action(p: int, f: typing.Union[IntPolynomial, typing.Sequence[int]]) -> CompanionAction:
    '''
    the elementary abelian group (Z/p)^d with the companion action of f

    @raises :
    * ValueError if f is not monic of degree >= 1 mod p, or f(0) = 0 mod p
    '''
    if not sympy.isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    f = IntPolynomial(f)
    if f.is_zero() or f.degree < 1 or f.coeffs[-1] % p != 1:
        raise ValueError(f"{f!r} is not monic of positive degree mod {p}")
    if f.coeffs[0] % p == 0:
        raise ValueError(f"{f!r} vanishes at 0 mod {p}, its companion is not invertible")
    C = companion_matrix(p, f)
    d = len(C)
    cyclic = stock(f"C{p}")
    generator = cyclic.generators[0]
    residue_to_index = [cyclic.power(generator, r) for r in range(p)]
    index_to_residue = np.empty(p, dtype=np.int64)
    index_to_residue[residue_to_index] = np.arange(p)

    product = direct_product([cyclic] * d, name=f"C{p}^{d}")
    G = product.group
    images = np.empty(G.order, dtype=np.int64)
    for g in G.elements():
        v = index_to_residue[list(product.components(g))]
        w = (C @ v) % p
        images[g] = product.combine(tuple(residue_to_index[r] for r in w))
    phi = from_images(G, images, name='companion')
    log.debug(f"companion action of {f!r} mod {p}: order {phi.order()}")
    return CompanionAction(p, f, C, G, phi, product)
