#!/usr/bin/env python3
'''
Additive identities of Frobenius maps

A Frobenius map F : t -> t^q0 of K = GF(q) is GF(p)-linear, so an identity
a_0 s + a_1 F(s) + ... + a_d F^d(s) = 0 holds for all s exactly when the
matrix a_0 + a_1 F + ... + a_d F^d vanishes mod p. The least degree of a
primitive identity equals the order of F; the Vandermonde determinant in the
powers w^(q0^j - 1) of the field generator vanishes exactly when two of the
exponents coincide mod q - 1.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'AdditiveIdentityProblem',
    'frobenius_matrix',
    'check_additive_identity',
    'vandermonde_det',
    'vanishing_criterion',
    'min_primitive_identity',
    'min_primitive_identity_degree',
]

import typing
import logging
import itertools
import dataclasses

import numpy as np

from ..config import get_settings
from ..errors import DegenerateFrobeniusError, ImplementationError
from .finite_field import FieldElement, FiniteField
from .polynomials import IntPolynomial

log = logging.getLogger(__name__)


def _log_p(q0: int, p: int) -> typing.Optional[int]:
    k = 0
    while q0 > 1 and q0 % p == 0:
        q0 //= p
        k += 1
    return k if q0 == 1 else None


@dataclasses.dataclass(frozen=True)
class AdditiveIdentityProblem:
    '''
    the question whether sum_i a_i s^(q0^i) = 0 for all s in K

    @parameters :
    * `K`       :   the field
    * `q0`      :   the Frobenius base, a power of the characteristic with q0 <= |K|
    * `coeffs`  :   the integers a_0 .. a_d
    '''
    K: FiniteField
    q0: int
    coeffs: 'tuple[int, ...]'

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(int(a) for a in self.coeffs))
        if _log_p(self.q0, self.K.p) is None or self.q0 > self.K.order:
            raise ValueError(f"q0 = {self.q0} is not a power of {self.K.p} up to {self.K.order}")

    @property
    def power(self) -> int:
        '''k with q0 = p^k'''
        return _log_p(self.q0, self.K.p)


def frobenius_matrix(K: FiniteField, q0: int) -> np.ndarray:
    '''the matrix mod p of t -> t^q0 in the power basis, column j the image of x^j'''
    columns = [K.power(K.from_coeffs([0] * j + [1]), q0) for j in range(K.e)]
    return np.array(columns, dtype=np.int64).T


def _matrix_powers(F: np.ndarray, d: int, p: int) -> np.ndarray:
    powers = [np.eye(len(F), dtype=np.int64)]
    for _ in range(d):
        powers.append((powers[-1] @ F) % p)
    return np.stack(powers)


def _combination(prob: AdditiveIdentityProblem) -> np.ndarray:
    K = prob.K
    powers = _matrix_powers(frobenius_matrix(K, prob.q0), max(len(prob.coeffs) - 1, 0), K.p)
    coeffs = np.array([a % K.p for a in prob.coeffs] or [0], dtype=np.int64)
    return np.tensordot(coeffs, powers[:len(coeffs)], axes=1) % K.p


def check_additive_identity(prob: AdditiveIdentityProblem) -> 'tuple[bool, typing.Optional[FieldElement]]':
    '''
    whether sum_i a_i F^i(s) = 0 for every s in K

    @returns :
    * `(True, None)`, or `(False, s)` with s the first element in index order that fails
    '''
    K = prob.K
    M = _combination(prob)
    if not M.any():
        return True, None
    # a failing element exists; find the first one in index order
    chunk = 1 << 14
    weights = K.p ** np.arange(K.e)
    for start in range(0, K.order, chunk):
        k = np.arange(start, min(start + chunk, K.order))
        coords = (k[:, None] // weights[None, :]) % K.p
        images = (coords @ M.T) % K.p
        bad = np.nonzero(images.any(axis=1))[0]
        if len(bad):
            return False, K.from_index(int(k[bad[0]]))
    raise ImplementationError("a nonzero linear map vanishes on the whole field")


def _bareiss_det(matrix: 'list[list[FieldElement]]', K: FiniteField) -> FieldElement:
    '''fraction-free elimination; the divisions are exact in a field'''
    M = [row[:] for row in matrix]
    n = len(M)
    sign = 1
    previous = K.one
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return K.zero
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / previous
        previous = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def _vandermonde_nodes(K: FiniteField, q0: int, d: int) -> 'list[FieldElement]':
    n = K.order - 1
    return [K.power(K.omega, (q0 ** j - 1) % n) for j in range(d + 1)]


def vandermonde_det(K: FiniteField, q0: int, d: int) -> FieldElement:
    '''
    det of M_ij = w^(i (q0^j - 1)), 0 <= i, j <= d, by elimination and by the product formula

    @raises :
    * ImplementationError if the two computations disagree
    '''
    if d < 0:
        raise ValueError(f"the degree must be nonnegative, not {d}")
    nodes = _vandermonde_nodes(K, q0, d)
    matrix = [[K.power(x, i) for x in nodes] for i in range(d + 1)]
    eliminated = _bareiss_det(matrix, K)
    product = K.one
    for i, j in itertools.combinations(range(d + 1), 2):
        product = product * (nodes[j] - nodes[i])
    if eliminated != product:
        raise ImplementationError(
            f"Vandermonde determinant mismatch over {K!r}: {eliminated!r} != {product!r}",
            witness=(q0, d))
    return product


def vanishing_criterion(K: FiniteField, q0: int, d: int) -> bool:
    '''whether q0^i = q0^j mod (q - 1) for some 0 <= i < j <= d'''
    n = K.order - 1
    residues = [pow(q0, j, n) if n > 1 else 0 for j in range(d + 1)]
    return len(set(residues)) < len(residues)


def _symmetric(a: int, p: int) -> int:
    a %= p
    return a - p if 2 * a > p else a


def min_primitive_identity(K: FiniteField, q0: int, allow_trivial: bool = False) -> IntPolynomial:
    '''
    the first primitive identity of least degree of t -> t^q0, by exhaustive search

    the search runs over monic coefficient vectors mod p in lexicographic order,
    degree by degree; the hit is lifted to symmetric residues, its leading
    coefficient 1 making it primitive

    @raises :
    * DegenerateFrobeniusError if the map is the identity and `allow_trivial` is not set
    '''
    prob = AdditiveIdentityProblem(K, q0, ())
    p = K.p
    if prob.power % K.e == 0:
        if not allow_trivial:
            raise DegenerateFrobeniusError(
                f"t -> t^{q0} is the identity on {K!r}, -1 + x is a degree 1 identity")
        return IntPolynomial([-1, 1])
    F = frobenius_matrix(K, q0)
    limit = K.e
    powers = _matrix_powers(F, limit, p).reshape(limit + 1, -1)
    chunk = get_settings().search_budget
    for d in range(1, limit + 1):
        lower = itertools.product(range(p), repeat=d)
        while True:
            block = np.array(list(itertools.islice(lower, chunk)), dtype=np.int64).reshape(-1, d)
            if not len(block):
                break
            combos = (block @ powers[:d] + powers[d]) % p
            hits = np.nonzero(~combos.any(axis=1))[0]
            if len(hits):
                coeffs = [_symmetric(int(a), p) for a in block[hits[0]]] + [1]
                f = IntPolynomial(coeffs)
                holds, witness = check_additive_identity(AdditiveIdentityProblem(K, q0, f.coeffs))
                if not holds:
                    raise ImplementationError(f"search returned {f!r}, which fails", witness=witness)
                log.debug(f"least identity of t -> t^{q0} on {K!r}: {f!r}")
                return f
    raise ImplementationError(f"no identity of degree <= {limit} for t -> t^{q0} on {K!r}")


def min_primitive_identity_degree(K: FiniteField, q0: int, allow_trivial: bool = False) -> int:
    '''the least degree of a primitive identity of t -> t^q0'''
    return min_primitive_identity(K, q0, allow_trivial).degree


def _main():
    from .finite_field import make_field

    logging.basicConfig(level=logging.DEBUG)
    for p, e in [(2, 2), (2, 3), (3, 2), (5, 3)]:
        K = make_field(p, e)
        f = min_primitive_identity(K, p)
        print(f"{K!r}: {f!r}, det(d = {e}) = {vandermonde_det(K, p, e)!r}")


if __name__ == '__main__':
    _main()
