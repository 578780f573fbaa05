#!/usr/bin/env python3
'''
Structural invariants of finite groups

The largest normal subgroup with a property closed under products of normal
subgroups (soluble, nilpotent, q'-, q-) is the subgroup generated by the normal
closures of single elements that have the property. Normal closures are shared
by whole conjugacy classes, so one closure per class is computed.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'FittingSeries',
    'fitting_subgroup',
    'soluble_radical',
    'fitting_series',
    'fitting_height',
    'o_qprime',
    'o_q',
    'o_qprime_q',
    'composition_length',
    'intersection',
    'is_simple',
    'is_q_power',
    'factor_by',
]

import typing
import logging
import dataclasses

import sympy

from ..errors import NotPrimeError, NotSolubleError
from .group import (Group, QuotientGroup, Subgroup, class_normal_closure, conjugacy_classes,
                    is_nilpotent, is_soluble, quotient, subgroup_generated, trivial_subgroup,
                    whole_group)

log = logging.getLogger(__name__)


def is_q_power(n: int, q: int) -> bool:
    '''whether n is a power of q (including q^0 = 1)'''
    while n % q == 0:
        n //= q
    return n == 1


def _join_of_closures(G: Group, has_property: typing.Callable[[Subgroup], bool], name: str) -> Subgroup:
    whole = whole_group(G)
    if has_property(whole):
        return whole.named(name)
    current = trivial_subgroup(G)
    for cls in conjugacy_classes(G):
        x = cls[0]
        if x in current:
            continue
        N = class_normal_closure(G, x)
        if has_property(N):
            current = subgroup_generated(G, current.generators + N.generators)
    log.debug(f"{name} of {G.name} has order {current.order}")
    return current.named(name)


def _check_prime(q: int) -> None:
    if not sympy.isprime(q):
        raise NotPrimeError(f"{q} is not prime")


def fitting_subgroup(G: Group) -> Subgroup:
    '''F(G), the largest normal nilpotent subgroup'''
    if 'fitting' not in G._cache:
        G._cache['fitting'] = _join_of_closures(G, is_nilpotent, 'F')
    return G._cache['fitting']


def soluble_radical(G: Group) -> Subgroup:
    '''R(G), the largest normal soluble subgroup'''
    if 'radical' not in G._cache:
        G._cache['radical'] = _join_of_closures(G, is_soluble, 'R')
    return G._cache['radical']


def o_qprime(G: Group, q: int) -> Subgroup:
    '''O_q'(G), the largest normal subgroup of order coprime to q'''
    _check_prime(q)
    key = ('o_qprime', q)
    if key not in G._cache:
        G._cache[key] = _join_of_closures(G, lambda N: N.order % q != 0, f"O_{q}'")
    return G._cache[key]


def o_q(G: Group, q: int) -> Subgroup:
    '''O_q(G), the largest normal q-subgroup'''
    _check_prime(q)
    key = ('o_q', q)
    if key not in G._cache:
        G._cache[key] = _join_of_closures(G, lambda N: is_q_power(N.order, q), f"O_{q}")
    return G._cache[key]


def factor_by(G: Group, N: Subgroup) -> 'tuple[Group, typing.Callable[[Subgroup], Subgroup]]':
    '''G/N with the preimage map, avoiding a table when N is trivial'''
    if N.is_trivial():
        return G, lambda S: S
    Q: QuotientGroup = quotient(G, N)
    return Q, Q.preimage


def o_qprime_q(G: Group, q: int) -> Subgroup:
    '''O_q',q(G), the preimage of O_q(G/O_q'(G))'''
    _check_prime(q)
    key = ('o_qprime_q', q)
    if key not in G._cache:
        Q, preimage = factor_by(G, o_qprime(G, q))
        G._cache[key] = preimage(o_q(Q, q)).named(f"O_{q}',{q}")
    return G._cache[key]


def intersection(G: Group, subgroups: typing.Iterable[Subgroup]) -> Subgroup:
    members = frozenset(G.elements())
    for H in subgroups:
        members = members & H.members
    return Subgroup(G, members)


@dataclasses.dataclass
class FittingSeries:
    '''
    the ascending Fitting series 1 = F_0 < F_1 < ... < F_h = G

    @parameters :
    * `terms`   :   the terms as subgroups of G
    '''
    terms: 'list[Subgroup]'

    @property
    def height(self) -> int:
        return len(self.terms) - 1

    def __len__(self) -> int:
        return len(self.terms)


def fitting_series(G: Group) -> FittingSeries:
    '''
    the ascending Fitting series of a soluble group, F_(i+1)/F_i = F(G/F_i)

    @raises :
    * NotSolubleError if G is not soluble
    '''
    if 'fitting_series' not in G._cache:
        if not is_soluble(G):
            raise NotSolubleError(f"{G.name} is not soluble, its Fitting height is undefined")
        terms = [trivial_subgroup(G)]
        while not terms[-1].is_whole():
            Q, preimage = factor_by(G, terms[-1])
            terms.append(preimage(fitting_subgroup(Q)).named(f"F_{len(terms)}"))
        G._cache['fitting_series'] = FittingSeries(terms)
    return G._cache['fitting_series']


def fitting_height(G: 'Group | Subgroup') -> int:
    '''h(G), the length of the ascending Fitting series'''
    if isinstance(G, Subgroup):
        G = G.as_group()
    return fitting_series(G).height


def composition_length(n: int) -> int:
    '''k(n), the number of prime factors of n counted with multiplicity'''
    if n < 1:
        raise ValueError(f"composition length of {n} is undefined")
    return sum(sympy.factorint(n).values())


def is_simple(G: Group) -> bool:
    '''nontrivial with no normal subgroups besides 1 and G'''
    if G.is_trivial():
        return False
    if sympy.isprime(G.order):
        return True
    for cls in conjugacy_classes(G):
        if G.identity in cls:
            continue
        if not class_normal_closure(G, cls[0]).is_whole():
            return False
    return True


def _main():
    from .constructions import stock

    logging.basicConfig(level=logging.DEBUG)
    for name in ('S3', 'S4', 'D8', 'A5'):
        G = stock(name)
        F = fitting_subgroup(G)
        R = soluble_radical(G)
        h = fitting_height(G) if is_soluble(G) else None
        print(f"{name}: |F| = {F.order}, |R| = {R.order}, h = {h}, "
              f"k(|G|) = {composition_length(G.order)}, simple = {is_simple(G)}")


if __name__ == '__main__':
    _main()
