#!/usr/bin/env python3
'''
Integer polynomials used as identities of automorphisms, and the bound functions

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'IntPolynomial',
    'UnorderedIdentity',
    'FactorialTerm',
    'BigBound',
    'content',
    'is_primitive',
    'partial_sum',
    'primitive_partial_exists',
    'b1',
    'b2',
    'b3',
    'corollary_bound',
    'shalev_bound',
    'exponent_identity',
    'n_abelian_identity',
    'order_identity',
    'splitting_identity',
]

import math
import typing
import functools
import dataclasses

import sympy

from ..config import get_settings
from ..errors import ImplementationError


class IntPolynomial(tuple):
    '''
    an integer polynomial a_0 + a_1*x + ... + a_d*x^d, stored as its coefficients
    a_0 .. a_d with trailing zeros stripped (the zero polynomial is the empty tuple)

    @parameters :
    * `coeffs`  :   the coefficients, constant term first
    '''

    def __new__(cls, coeffs: typing.Iterable[int] = ()) -> 'IntPolynomial':
        values = []
        for c in coeffs:
            if isinstance(c, float) and not c.is_integer():
                raise TypeError(f"IntPolynomial coefficients must be integers, not {c}")
            try:
                values.append(int(c))
            except (TypeError, ValueError):
                raise TypeError(f"IntPolynomial coefficients must be integers, not {c!r}") from None
        while values and values[-1] == 0:
            values.pop()
        return tuple.__new__(cls, values)

    @property
    def coeffs(self) -> 'tuple[int, ...]':
        return tuple(self)

    def is_zero(self) -> bool:
        return len(self) == 0

    @property
    def degree(self) -> typing.Optional[int]:
        '''the degree, None for the zero polynomial'''
        return len(self) - 1 if self else None

    def coefficient(self, i: int) -> int:
        return self[i] if 0 <= i < len(self) else 0

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self):
            value = value * x + c
        return value

    __call__ = evaluate

    def content(self) -> int:
        return content(self)

    def is_primitive(self) -> bool:
        return is_primitive(self)

    def compress(self, n: int, j: int) -> 'IntPolynomial':
        return partial_sum(self, n, j)

    def to_list(self) -> 'list[int]':
        return list(self)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self):
            if c == 0:
                continue
            power = '' if i == 0 else ('x' if i == 1 else f'x^{i}')
            if i == 0:
                term = str(abs(c))
            elif abs(c) == 1:
                term = power
            else:
                term = f'{abs(c)}*{power}'
            if not terms:
                terms.append(term if c > 0 else f'-{term}')
            else:
                terms.append(f'+ {term}' if c > 0 else f'- {term}')
        return ' '.join(terms) if terms else '0'


class UnorderedIdentity(tuple):
    '''
    the terms (m_i, b_i) of b_0*x^m_0 + ... + b_k*x^m_k, in evaluation order;
    exponents may repeat and the order of the terms is significant

    @parameters :
    * `terms`   :   pairs of (exponent, coefficient)
    '''

    def __new__(cls, terms: typing.Iterable['tuple[int, int]'] = ()) -> 'UnorderedIdentity':
        pairs = []
        for term in terms:
            try:
                m, b = (int(v) for v in term)
            except (TypeError, ValueError):
                raise TypeError(f"identity terms must be [exponent, coefficient] pairs, not {term!r}") from None
            if m < 0:
                raise ValueError(f"exponents must be nonnegative, not {m}")
            pairs.append((m, b))
        return tuple.__new__(cls, pairs)

    @classmethod
    def from_polynomial(cls, f: IntPolynomial) -> 'UnorderedIdentity':
        '''the ascending term list of f, zero coefficients left out'''
        return cls((i, c) for i, c in enumerate(f) if c != 0)

    def underlying(self) -> IntPolynomial:
        '''collapse the terms by summing coefficients of equal exponents'''
        if not self:
            return IntPolynomial()
        coeffs = [0] * (self.max_exponent() + 1)
        for m, b in self:
            coeffs[m] += b
        return IntPolynomial(coeffs)

    def max_exponent(self) -> int:
        '''the invariant d := max(m_i) that replaces the degree for unordered identities'''
        return max((m for m, _ in self), default=0)

    def to_list(self) -> 'list[list[int]]':
        return [[m, b] for m, b in self]


def content(f: IntPolynomial) -> int:
    '''gcd of the coefficients, 0 for the zero polynomial'''
    return functools.reduce(math.gcd, (abs(c) for c in f), 0)


def is_primitive(f: IntPolynomial) -> bool:
    '''nonzero with content 1'''
    return not f.is_zero() and content(f) == 1


def partial_sum(f: IntPolynomial, n: int, j: int) -> IntPolynomial:
    '''
    the polynomial f_{n,j}(y) with f_{n,j}(x^n) * x^j equal to the sum of the
    terms a_i*x^i of f with i = j mod n

    @parameters :
    * `f`   :   the polynomial
    * `n`   :   the modulus of the regrouping, positive
    * `j`   :   the residue, 0 <= j < n
    '''
    n, j = int(n), int(j)
    if n < 1:
        raise ValueError(f"n must be positive, not {n}")
    if not (0 <= j < n):
        raise ValueError(f"j must satisfy 0 <= j < {n}, not {j}")
    return IntPolynomial(f[j::n])


def primitive_partial_exists(f: IntPolynomial, n: int) -> int:
    '''the least j for which the partial sum f_{n,j} is primitive'''
    if not is_primitive(f):
        raise ValueError(f"{f!r} is not primitive (content {content(f)})")
    for j in range(int(n)):
        if is_primitive(partial_sum(f, n, j)):
            return j
    raise RuntimeError(f"no primitive partial sum of {f!r} for n = {n}")


def corollary_bound(f: IntPolynomial) -> int:
    '''8*deg(f) + 2*|f(1)| + 2, defined when f(1) != 0'''
    f1 = f.evaluate(1)
    if f1 == 0:
        raise ValueError(f"the bound needs f(1) != 0, but f = {f!r} has f(1) = 0")
    return 8 * f.degree + 2 * abs(f1) + 2


def shalev_bound(n: int) -> int:
    '''the product of (2e + 1) over the prime powers p^e exactly dividing n'''
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be positive, not {n}")
    return math.prod(2 * e + 1 for e in sympy.factorint(n).values())


def exponent_identity(n: int) -> IntPolynomial:
    '''the constant n: an identity of any automorphism iff the exponent divides n'''
    return IntPolynomial([n])


def n_abelian_identity(n: int) -> IntPolynomial:
    '''-n + x'''
    return IntPolynomial([-n, 1])


def order_identity(n: int) -> IntPolynomial:
    '''-1 + x^n: an identity iff the order of the automorphism divides n'''
    if int(n) < 1:
        raise ValueError(f"n must be positive, not {n}")
    return IntPolynomial([-1] + [0] * (int(n) - 1) + [1])


def splitting_identity(n: int) -> IntPolynomial:
    '''1 + x + ... + x^(n-1): the identity of n-splitting automorphisms'''
    if int(n) < 1:
        raise ValueError(f"n must be positive, not {n}")
    return IntPolynomial([1] * int(n))


def b1(d: int, m: int) -> int:
    '''8*d + m + 2'''
    if d < 0 or m < 0:
        raise ValueError(f"B1 is defined for nonnegative arguments, not ({d}, {m})")
    return 8 * d + m + 2


# factorial arguments up to this size may be materialised
_FACTORIAL_ARGUMENT_CAP = 5000
# powers base^exp up to this many bits are materialised when comparing
_POWER_BITS_CAP = 4096


@dataclasses.dataclass(frozen=True)
class FactorialTerm:
    '''the factor (base^exp)! of a certificate, or base^exp if `factorial` is False'''
    base: int
    exp: int
    factorial: bool = True

    def argument_bits(self) -> float:
        '''an estimate of log2(base^exp)'''
        if self.base <= 1:
            return 0.
        return self.exp * math.log2(self.base)

    def argument(self) -> typing.Optional[int]:
        '''base^exp if it has at most _POWER_BITS_CAP bits'''
        if self.argument_bits() > _POWER_BITS_CAP:
            return None
        return self.base ** self.exp

    def lower_bound(self) -> int:
        '''an integer not exceeding the value of the term'''
        n = self.argument()
        if n is None:
            return 2 ** (_POWER_BITS_CAP - 1)
        if not self.factorial:
            return n
        return math.factorial(n) if n <= 20 else max(n, math.factorial(20))

    def dominates(self, other: 'FactorialTerm') -> bool:
        '''True if this term is provably at least as large as `other`'''
        if self.factorial < other.factorial:
            return False
        if self.base >= other.base and self.exp >= other.exp:
            return True
        a, b = self.argument(), other.argument()
        if a is not None and b is not None:
            return a >= b
        return self.argument_bits() > other.argument_bits() + 1

    def to_json(self) -> 'dict[str, typing.Any]':
        return {'base': str(self.base), 'exp': str(self.exp), 'factorial': self.factorial}


class BigBound:
    '''
    a nonnegative integer bound, either exact or given as a certificate: the
    product of its `terms`, which is never materialised

    @parameters :
    * `exact`   :   (optional) the exact value
    * `terms`   :   (optional) the factors of a certificate
    '''

    def __init__(self, exact: typing.Optional[int] = None,
                 terms: typing.Iterable[FactorialTerm] = ()) -> None:
        self.exact = None if exact is None else int(exact)
        self.terms: 'tuple[FactorialTerm, ...]' = tuple(terms)
        if self.exact is None and not self.terms:
            raise ValueError("a BigBound needs an exact value or certificate terms")

    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def value(self) -> int:
        if self.exact is None:
            raise ValueError("this bound is only known through a certificate")
        return self.exact

    def lower_bound(self) -> int:
        if self.exact is not None:
            return self.exact
        return math.prod(term.lower_bound() for term in self.terms)

    def ge(self, x: int) -> bool:
        '''
        decide whether the bound is at least x

        @raises :
        * ValueError if the certificate is too weak to decide
        '''
        if self.exact is not None:
            return self.exact >= x
        if self.lower_bound() >= x:
            return True
        raise ValueError(f"cannot decide whether the certificate {self!r} is at least {x}")

    def le_int(self, x: int) -> bool:
        '''decide whether the bound is at most x'''
        return x >= self.exact if self.exact is not None else not self.ge(x + 1)

    def _sorted_terms(self) -> 'list[FactorialTerm]':
        return sorted(self.terms, key=lambda t: (t.factorial, t.argument_bits()), reverse=True)

    def __ge__(self, other) -> bool:
        if isinstance(other, int):
            return self.ge(other)
        if not isinstance(other, BigBound):
            return NotImplemented
        if other.exact is not None:
            return self.ge(other.exact)
        if self.exact is not None:
            return not other.ge(self.exact + 1)
        mine, theirs = self._sorted_terms(), other._sorted_terms()
        if len(mine) >= len(theirs) and all(a.dominates(b) for a, b in zip(mine, theirs)):
            return True
        raise ValueError(f"cannot compare the certificates {self!r} and {other!r}")

    def __le__(self, other) -> bool:
        if isinstance(other, int):
            return self.le_int(other)
        if not isinstance(other, BigBound):
            return NotImplemented
        return other >= self

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.exact == other
        if isinstance(other, BigBound):
            return (self.exact, self.terms) == (other.exact, other.terms)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.exact, self.terms))

    def to_json(self) -> 'str | dict[str, typing.Any]':
        '''a decimal string when exact, else the structured certificate'''
        if self.exact is not None:
            return str(self.exact)
        return {'certificate': [term.to_json() for term in self.terms]}

    def __repr__(self) -> str:
        if self.exact is not None:
            digits = len(str(self.exact))
            return f"BigBound({self.exact})" if digits <= 30 else f"BigBound(<{digits} digits>)"
        terms = ' * '.join(
            f"(<{len(str(t.base))} digits>^{t.exp}){'!' if t.factorial else ''}" for t in self.terms)
        return f"BigBound({terms})"


def b3(d: int, m: int) -> BigBound:
    '''m + m^(1000*d), exactly'''
    if d < 0:
        raise ValueError(f"d must be nonnegative, not {d}")
    if m < 1:
        raise ValueError(f"B3 is defined for m >= 1, not {m}")
    return BigBound(exact=m + m ** (1000 * d))


@functools.lru_cache(maxsize=None)
def _b2(d: int, m: int, digit_budget: int) -> BigBound:
    if m == 1:
        return BigBound(exact=1)
    rest = _b2(d, m // 2, digit_budget)
    term = FactorialTerm(b3(d, m).value, m * d)
    n = term.argument()
    if n is not None and n <= _FACTORIAL_ARGUMENT_CAP:
        digits = math.lgamma(n + 1) / math.log(10) if n > 1 else 1.
        if digits <= digit_budget:
            factor = math.factorial(n)
            if rest.is_exact():
                return BigBound(exact=factor * rest.exact)
            return BigBound(terms=(FactorialTerm(factor, 1, factorial=False),) + rest.terms)
    if rest.is_exact():
        tail = () if rest.exact == 1 else (FactorialTerm(rest.exact, 1, factorial=False),)
        return BigBound(terms=(term,) + tail)
    return BigBound(terms=(term,) + rest.terms)


def b2(d: int, m: int) -> BigBound:
    '''
    1 if m = 1, else B3(d,m)^(m*d)! * B2(d, m // 2)

    exact when the value fits the configured digit budget, otherwise a
    certificate listing the factorial factors
    '''
    if d < 0:
        raise ValueError(f"d must be nonnegative, not {d}")
    if m < 1:
        raise ValueError(f"B2 is defined for m >= 1, not {m}")
    settings = get_settings()
    bound = _b2(int(d), int(m), settings.bound_digit_budget)
    if not bound.is_exact() and bound.lower_bound() < settings.desk_scale:
        raise ImplementationError(f"the certificate for B2({d}, {m}) cannot decide comparisons "
                                  f"up to the desk scale {settings.desk_scale}")
    return bound
