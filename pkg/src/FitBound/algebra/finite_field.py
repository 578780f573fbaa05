#!/usr/bin/env python3
'''
Exact arithmetic in GF(p^e)

Elements are coordinate vectors in the power basis of a monic irreducible
modulus. Both the modulus (smallest irreducible) and the distinguished
multiplicative generator `omega` (smallest element of full order) are chosen
deterministically, so every table and every determinant is reproducible.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'FieldElement',
    'FiniteField',
    'FrobeniusMap',
    'make_field',
    'frobenius',
    'trace_pair_witness',
    'trace_map',
]

import typing
import logging
import math
import functools

import numpy as np
import sympy

from ..config import get_settings
from ..errors import CapExceededError, NotPrimeError

# largest field for which add/mul tables are materialised
TABLE_CAP = 4096


def _poly_rem(a: 'list[int]', b: 'list[int]', p: int) -> 'list[int]':
    '''remainder of a by the monic b over GF(p), coefficients low degree first'''
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]] + [0] * max(0, db - len(a))


def _digits(k: int, p: int, n: int) -> 'list[int]':
    '''the n base-p digits of k, least significant first'''
    out = []
    for _ in range(n):
        k, r = divmod(k, p)
        out.append(r)
    return out


def _is_irreducible(modulus: 'list[int]', p: int) -> bool:
    '''trial division by every monic polynomial of degree 1 .. deg/2'''
    e = len(modulus) - 1
    if e == 1:
        return True
    if modulus[0] % p == 0:
        return False
    for degree in range(1, e // 2 + 1):
        for k in range(p**degree):
            divisor = _digits(k, p, degree) + [1]
            if not any(_poly_rem(modulus, divisor, p)):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> 'tuple[int, ...]':
    for k in range(p**e):
        candidate = _digits(k, p, e) + [1]
        if _is_irreducible(candidate, p):
            return tuple(candidate)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


class FieldElement(tuple):
    '''
    an element of a finite field, stored as its `e` coordinates mod `p`
    (coefficient of x^0 first)

    @parameters :
    * `field`   :   the FiniteField the element belongs to
    * `coeffs`  :   the coordinates in the power basis of the field's modulus
    '''

    def __new__(cls, field: 'FiniteField', coeffs: typing.Iterable[int]) -> 'FieldElement':
        try:
            self = tuple.__new__(cls, (int(c) for c in coeffs))
        except ValueError:
            raise TypeError("FieldElement coordinates must be integers") from None
        if len(self) != field.e:
            raise ValueError(
                f"GF({field.order}) elements have {field.e} coordinates, not {len(self)}")
        for c in self:
            if not (0 <= c < field.p):
                raise ValueError(f"coordinates must satisfy 0 <= c < {field.p}")
        self.field = field
        return self

    @property
    def index(self) -> int:
        '''the position of the element in the canonical enumeration of the field'''
        k = 0
        for c in reversed(self):
            k = k * self.field.p + c
        return k

    def is_zero(self) -> bool:
        return not any(self)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> 'FieldElement':
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise TypeError("cannot combine elements of different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.constant(int(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            other = self.field.constant(int(other))
        return tuple.__eq__(self, other)

    def __ne__(self, other) -> bool:
        return not self == other

    __hash__ = tuple.__hash__

    def __add__(self, other) -> 'FieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, ((a + b) % p for a, b in zip(self, other)))

    __radd__ = __add__

    def __neg__(self) -> 'FieldElement':
        p = self.field.p
        return FieldElement(self.field, ((-a) % p for a in self))

    def __sub__(self, other) -> 'FieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'FieldElement':
        return (-self) + other

    def __mul__(self, other) -> 'FieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'FieldElement':
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        return self.field.power(self, n)

    def inverse(self) -> 'FieldElement':
        if self.is_zero():
            raise ZeroDivisionError("the zero element of a field has no inverse")
        return self.field.power(self, self.field.order - 2)

    def __truediv__(self, other) -> 'FieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> 'FieldElement':
        return self.inverse() * other

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = 'x' if i == 1 else f'x^{i}'
                terms.append(power if c == 1 else f'{c}*{power}')
        return ' + '.join(terms) if terms else '0'


class FiniteField:
    '''
    the field GF(p^e), use `make_field` to get a (cached) instance

    @parameters :
    * `p`   :   the prime characteristic
    * `e`   :   the extension degree
    '''

    def __init__(self, p: int, e: int) -> None:
        self.logger = logging.getLogger(self.__class__.__name__)
        self.p = int(p)
        self.e = int(e)
        self.order = self.p ** self.e
        self.modulus: 'tuple[int, ...]' = _smallest_irreducible(self.p, self.e)
        self.zero = FieldElement(self, [0] * self.e)
        self.one = self.constant(1)
        self.omega = self._find_generator()
        self._add_table = None
        self._mul_table = None
        self.logger.debug(
            f"GF({self.order}): modulus {self.modulus}, omega {self.omega!r}")

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})"

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> typing.Iterator[FieldElement]:
        return self.elements()

    def __contains__(self, item) -> bool:
        return isinstance(item, FieldElement) and item.field is self

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((FiniteField, self.p, self.e))

    def constant(self, c: int) -> FieldElement:
        '''the image of the integer c in the prime field'''
        return FieldElement(self, [int(c) % self.p] + [0] * (self.e - 1))

    def from_index(self, k: int) -> FieldElement:
        '''the element at position k of the canonical enumeration'''
        if not (0 <= k < self.order):
            raise IndexError(f"GF({self.order}) has no element number {k}")
        return FieldElement(self, _digits(k, self.p, self.e))

    def from_coeffs(self, coeffs: typing.Iterable[int]) -> FieldElement:
        '''reduce an arbitrary coefficient list (low degree first) modulo the modulus'''
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.e:
            coeffs = _poly_rem(coeffs, list(self.modulus), self.p)
        return FieldElement(self, coeffs + [0] * (self.e - len(coeffs)))

    @property
    def x(self) -> FieldElement:
        '''the class of the indeterminate x modulo the modulus'''
        return self.from_coeffs([0, 1])

    def elements(self) -> typing.Iterator[FieldElement]:
        '''all elements, in the canonical (index) order'''
        for k in range(self.order):
            yield self.from_index(k)

    def nonzero_elements(self) -> typing.Iterator[FieldElement]:
        for k in range(1, self.order):
            yield self.from_index(k)

    def multiply(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, e = self.p, self.e
        product = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        product[i + j] += ai * bj
        return FieldElement(self, _poly_rem(product, list(self.modulus), p)
                            if len(product) > e else [c % p for c in product])

    def power(self, a: FieldElement, n: int) -> FieldElement:
        result = self.one
        base = a
        while n > 0:
            if n & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            n >>= 1
        return result

    def multiplicative_order(self, a: FieldElement) -> int:
        '''the order of a nonzero element in the unit group'''
        if a.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        for r, k in sympy.factorint(n).items():
            for _ in range(k):
                if self.power(a, n // r) == self.one:
                    n //= r
                else:
                    break
        return n

    def _find_generator(self) -> FieldElement:
        n = self.order - 1
        primes = sympy.primefactors(n)
        for a in self.nonzero_elements():
            if all(self.power(a, n // r) != self.one for r in primes):
                return a
        raise RuntimeError(f"GF({self.order}) has no multiplicative generator")

    def subfield(self, order: int) -> 'list[FieldElement]':
        '''the elements t with t^order = t, i.e. the subfield with `order` elements'''
        return [t for t in self.elements() if self.power(t, order) == t]

    def _coordinates(self) -> np.ndarray:
        k = np.arange(self.order)
        return np.stack([(k // self.p**i) % self.p for i in range(self.e)], axis=1)

    def add_table(self) -> np.ndarray:
        '''the addition table on element indices'''
        if self._add_table is None:
            if self.order > TABLE_CAP:
                raise CapExceededError(
                    f"no tables for GF({self.order}), the table cap is {TABLE_CAP}")
            coords = self._coordinates()
            sums = (coords[:, None, :] + coords[None, :, :]) % self.p
            weights = self.p ** np.arange(self.e)
            self._add_table = sums @ weights
        return self._add_table

    def mul_table(self) -> np.ndarray:
        '''the multiplication table on element indices, built from powers of omega'''
        if self._mul_table is None:
            if self.order > TABLE_CAP:
                raise CapExceededError(
                    f"no tables for GF({self.order}), the table cap is {TABLE_CAP}")
            n = self.order - 1
            exp = np.zeros(n, dtype=np.int64)
            log = np.zeros(self.order, dtype=np.int64)
            t = self.one
            for k in range(n):
                exp[k] = t.index
                log[t.index] = k
                t = self.multiply(t, self.omega)
            logs = (log[1:, None] + log[None, 1:]) % n
            table = np.zeros((self.order, self.order), dtype=np.int64)
            table[1:, 1:] = exp[logs]
            self._mul_table = table
        return self._mul_table


@functools.lru_cache(maxsize=None)
def _build_field(p: int, e: int) -> FiniteField:
    return FiniteField(p, e)


def make_field(p: int, e: int = 1) -> FiniteField:
    '''
    get GF(p^e) with its deterministic modulus and generator

    @parameters :
    * `p`   :   a prime
    * `e`   :   the extension degree, at least 1

    @returns :
    * the (cached) FiniteField
    '''
    p, e = int(p), int(e)
    if not sympy.isprime(p):
        raise NotPrimeError(f"the characteristic must be prime, not {p}")
    if e < 1:
        raise ValueError(f"the extension degree must be at least 1, not {e}")
    cap = get_settings().field_cap
    if p**e > cap:
        raise CapExceededError(f"GF({p}^{e}) exceeds the field cap {cap}")
    return _build_field(p, e)


class FrobeniusMap:
    '''
    the field automorphism t -> t^(p^power) of K

    @parameters :
    * `field`   :   the field K
    * `power`   :   the Frobenius power, taken mod e
    '''

    def __init__(self, field: FiniteField, power: int) -> None:
        self.field = field
        self.power = int(power) % field.e
        self.exponent = field.p ** self.power

    def __call__(self, t: FieldElement) -> FieldElement:
        return self.field.power(t, self.exponent)

    def __repr__(self) -> str:
        return f"FrobeniusMap({self.field!r}, t -> t^{self.exponent})"

    def order(self) -> int:
        '''the order of the map as an automorphism of the field'''
        return self.field.e // math.gcd(self.power, self.field.e)

    def is_identity(self) -> bool:
        return self.power == 0


def frobenius(field: FiniteField, power: int = 1) -> FrobeniusMap:
    '''the map t -> t^(p^power), with power taken mod e'''
    if int(power) < 0:
        raise ValueError(f"the Frobenius power must be nonnegative, not {power}")
    return FrobeniusMap(field, power)


def trace_map(field: FiniteField, q: int) -> typing.Callable[[FieldElement], FieldElement]:
    '''the map b -> b + b^q on a field of order q^2'''
    return lambda b: b + field.power(b, q)


def trace_pair_witness(field: FiniteField, q: int) -> 'tuple[FieldElement, FieldElement]':
    '''
    find alpha in the subfield L of order q, alpha != 0, and beta outside L with
    (beta + beta^q) / alpha = 1

    @parameters :
    * `field`   :   a field of order q^2
    * `q`       :   the order of the subfield L

    @returns :
    * `(alpha, beta)`, the first such pair in the canonical order
    '''
    q = int(q)
    if q < 2 or q * q != field.order:
        raise ValueError(f"|K| = {field.order} is not the square of q = {q}")
    subfield = field.subfield(q)
    if len(subfield) != q:
        raise ValueError(f"GF({field.order}) has no subfield of order {q}")
    members = set(subfield)
    trace = trace_map(field, q)
    for alpha in subfield:
        if alpha.is_zero():
            continue
        for beta in field.elements():
            if beta not in members and trace(beta) == alpha:
                return alpha, beta
    raise RuntimeError(f"no trace pair in GF({field.order})")


def _main():
    '''print the first few fields with their modulus and generator'''
    logging.basicConfig(level=logging.DEBUG)
    for p, e in [(2, 1), (2, 2), (3, 2), (2, 3), (5, 2)]:
        K = make_field(p, e)
        print(f"{K!r}\tmodulus {K.modulus}\tomega {K.omega!r}")


if __name__ == '__main__':
    _main()
