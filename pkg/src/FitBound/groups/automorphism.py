#!/usr/bin/env python3
'''
Automorphisms of finite groups and the identities they satisfy

An automorphism is stored as the image array of the element indices of its
group. An integer polynomial a_0 + a_1 x + ... + a_d x^d is an ordered identity
of phi when g^a_0 phi(g)^a_1 ... phi^d(g)^a_d = 1 for every g, the factors
multiplied left to right and negative exponents meaning inverse-then-power.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'Automorphism',
    'SectionData',
    'from_images',
    'from_generator_images',
    'from_point_map',
    'identity_automorphism',
    'inner',
    'order_of',
    'fixed_points',
    'is_coprime',
    'evaluate_terms',
    'satisfies_ordered',
    'satisfies_unordered',
    'conjugate',
    'restrict',
    'induce_on_quotient',
    'section_data',
    'read_automorphism_file',
]

import math
import typing
import logging
import dataclasses

import numpy as np

from ..algebra.polynomials import IntPolynomial, UnorderedIdentity
from ..errors import HomomorphismError, NotInvariantError
from .group import Group, PermutationGroup, Subgroup, cycle_lengths
from .parsing import parse_permutation
from .structure import composition_length, factor_by, fitting_subgroup, o_qprime_q

log = logging.getLogger(__name__)


class Automorphism:
    '''
    a bijective homomorphism of `group` onto itself

    @parameters :
    * `group`   :   the group acted on
    * `images`  :   the index of the image of every element
    * `name`    :   (optional) a label
    '''

    def __init__(self, group: Group, images: np.ndarray, name: str = '') -> None:
        self.group = group
        self.images = np.asarray(images, dtype=np.int64)
        self.name = name or 'phi'
        self._order: typing.Optional[int] = None
        self._powers: 'list[np.ndarray]' = [np.arange(group.order, dtype=np.int64), self.images]

    def __repr__(self) -> str:
        return f"<automorphism {self.name} of {self.group.name}>"

    def __call__(self, g: int) -> int:
        return int(self.images[g])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.group is other.group and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash((id(self.group), self.images.tobytes()))

    def power_images(self, k: int) -> np.ndarray:
        '''the image array of phi^k, k >= 0'''
        while len(self._powers) <= k:
            self._powers.append(self.images[self._powers[-1]])
        return self._powers[k]

    def power(self, k: int) -> 'Automorphism':
        k = int(k) % self.order()
        return Automorphism(self.group, self.power_images(k), f"{self.name}^{k}")

    def compose(self, other: 'Automorphism') -> 'Automorphism':
        '''self after other'''
        return Automorphism(self.group, self.images[other.images], f"{self.name}*{other.name}")

    def inverse(self) -> 'Automorphism':
        inverse = np.empty_like(self.images)
        inverse[self.images] = np.arange(len(self.images))
        return Automorphism(self.group, inverse, f"{self.name}^-1")

    def order(self) -> int:
        if self._order is None:
            self._order = math.lcm(*cycle_lengths(self.images))
        return self._order

    def is_identity(self) -> bool:
        return bool(np.all(self.images == np.arange(self.group.order)))


def _check_bijective(G: Group, images: np.ndarray) -> None:
    if len(images) != G.order or images.min() < 0 or images.max() >= G.order:
        raise HomomorphismError(f"the images do not form a map of {G.name} to itself")
    counts = np.bincount(images, minlength=G.order)
    if np.any(counts != 1):
        raise HomomorphismError("the map is not injective", witness=int(np.argmax(counts != 1)))


def _check_homomorphism(G: Group, images: np.ndarray) -> None:
    '''phi(g s) = phi(g) phi(s) for all g and all generators s is enough'''
    everything = np.arange(G.order, dtype=np.int64)
    for s in G.generators:
        s_column = np.full(G.order, s, dtype=np.int64)
        lhs = images[G.mul_many(everything, s_column)]
        rhs = G.mul_many(images, np.full(G.order, images[s], dtype=np.int64))
        bad = np.nonzero(lhs != rhs)[0]
        if len(bad):
            raise HomomorphismError("the map does not preserve products", witness=(int(bad[0]), s))


def from_images(G: Group, images: typing.Sequence[int], name: str = '', validate: bool = True) -> Automorphism:
    '''
    an automorphism from the full image array

    @raises :
    * HomomorphismError with a witness if the map is not a bijective homomorphism
    '''
    images = np.asarray(images, dtype=np.int64)
    if validate:
        _check_bijective(G, images)
        _check_homomorphism(G, images)
    return Automorphism(G, images, name)


def from_generator_images(G: Group, generator_images: 'dict[int, int]', name: str = '') -> Automorphism:
    '''
    complete a map given on generators by walking the Cayley graph, then validate it

    @raises :
    * HomomorphismError if the generators do not generate G, or the map
      does not extend to an automorphism
    '''
    gens = list(generator_images)
    images = np.full(G.order, -1, dtype=np.int64)
    images[G.identity] = G.identity
    queue = [G.identity]
    head = 0
    while head < len(queue):
        x = queue[head]
        for s in gens:
            y = G.mul(x, s)
            image = G.mul(int(images[x]), generator_images[s])
            if images[y] < 0:
                images[y] = image
                queue.append(y)
            elif images[y] != image:
                raise HomomorphismError("the generator images do not extend to a homomorphism",
                                        witness=y)
        head += 1
    if len(queue) != G.order:
        raise HomomorphismError(f"the given elements generate only {len(queue)} of {G.order} elements")
    return from_images(G, images, name)


def from_point_map(G: PermutationGroup, pi: typing.Sequence[int], name: str = '') -> Automorphism:
    '''
    the automorphism g -> pi g pi^-1 induced by a permutation of the points

    @raises :
    * HomomorphismError if pi does not normalise G
    '''
    pi = np.asarray(pi, dtype=np.int64)
    pi_inverse = np.argsort(pi)
    conjugated = pi[G.perms[:, pi_inverse]]
    try:
        images = G.index_many(conjugated)
    except KeyError:
        raise HomomorphismError(f"the point map does not normalise {G.name}") from None
    return Automorphism(G, images, name)


def identity_automorphism(G: Group) -> Automorphism:
    return Automorphism(G, np.arange(G.order, dtype=np.int64), 'id')


def inner(G: Group, g: int) -> Automorphism:
    '''x -> g x g^-1'''
    everything = np.arange(G.order, dtype=np.int64)
    left = G.mul_many(np.full(G.order, g, dtype=np.int64), everything)
    images = G.mul_many(left, np.full(G.order, G.inv(g), dtype=np.int64))
    return Automorphism(G, images, f"inn({G.label(g)})")


def order_of(phi: Automorphism) -> int:
    return phi.order()


def fixed_points(phi: Automorphism) -> Subgroup:
    '''C_G(phi)'''
    members = np.nonzero(phi.images == np.arange(phi.group.order))[0]
    return Subgroup(phi.group, members.tolist(), name=f"C({phi.name})")


def is_coprime(phi: Automorphism) -> bool:
    return math.gcd(phi.group.order, phi.order()) == 1


def evaluate_terms(phi: Automorphism, terms: typing.Iterable['tuple[int, int]']) -> np.ndarray:
    '''for every g the product of phi^m(g)^b over the (m, b) terms, left to right'''
    G = phi.group
    result = np.full(G.order, G.identity, dtype=np.int64)
    for m, b in terms:
        if b == 0:
            continue
        result = G.mul_many(result, G.power_many(phi.power_images(m), b))
    return result


def _first_failure(phi: Automorphism, values: np.ndarray) -> 'tuple[bool, typing.Optional[int]]':
    bad = np.nonzero(values != phi.group.identity)[0]
    if len(bad):
        return False, int(bad[0])
    return True, None


def satisfies_ordered(phi: Automorphism, f: IntPolynomial) -> 'tuple[bool, typing.Optional[int]]':
    '''
    whether f is an ordered identity of phi

    @returns :
    * `(True, None)`, or `(False, g)` with g the smallest element where the product is not 1
    '''
    f = IntPolynomial(f)
    return _first_failure(phi, evaluate_terms(phi, enumerate(f.coeffs)))


def satisfies_unordered(phi: Automorphism, u: UnorderedIdentity) -> 'tuple[bool, typing.Optional[int]]':
    '''whether the term list is an identity of phi, terms evaluated in the given order'''
    u = UnorderedIdentity(u)
    return _first_failure(phi, evaluate_terms(phi, u))


def conjugate(phi: Automorphism, gamma: Automorphism) -> Automorphism:
    '''gamma phi gamma^-1'''
    gamma_inverse = gamma.inverse()
    images = gamma.images[phi.images[gamma_inverse.images]]
    return Automorphism(phi.group, images, f"{gamma.name}.{phi.name}")


def _check_invariant(phi: Automorphism, H: Subgroup) -> None:
    for h in H.generators:
        if phi(h) not in H:
            raise NotInvariantError(f"{H!r} is not {phi.name}-invariant", witness=h)


def restrict(phi: Automorphism, H: Subgroup) -> Automorphism:
    '''
    the restriction of phi to an invariant subgroup, acting on `H.as_group()`

    @raises :
    * NotInvariantError with the offending generator of H
    '''
    _check_invariant(phi, H)
    local = H.as_group()
    if local is phi.group:
        return phi
    images = local._local[phi.images[local.members]]
    return Automorphism(local, images, f"{phi.name}|{H.name or 'H'}")


def induce_on_quotient(phi: Automorphism, N: Subgroup,
                       Q: typing.Optional[Group] = None) -> Automorphism:
    '''
    the automorphism gN -> phi(g)N of G/N; phi itself when N is trivial

    @raises :
    * NotNormalError if N is not normal, NotInvariantError if phi(N) != N
    '''
    _check_invariant(phi, N)
    if Q is None:
        Q, _ = factor_by(phi.group, N)
    if Q is phi.group:
        return phi
    images = Q.projection[phi.images[Q.representatives]]
    return Automorphism(Q, images, f"{phi.name} mod N")


@dataclasses.dataclass
class SectionData:
    '''
    the section H = Gb/F(Gb) with Gb = G/O_q',q(G), and the automorphism phi induces on it

    @parameters :
    * `section`         :   the group H
    * `automorphism`    :   the induced automorphism of H
    * `order`           :   its order
    * `klen`            :   the composition length of that order
    '''
    section: Group
    automorphism: Automorphism
    order: int
    klen: int


def section_data(G: Group, phi: Automorphism, q: int) -> SectionData:
    '''
    the characteristic section used to bound the order phi induces

    @raises :
    * ValueError if q does not divide |G|
    '''
    if q < 2 or G.order % q:
        raise ValueError(f"{q} does not divide |{G.name}| = {G.order}")
    top = o_qprime_q(G, q)
    Gbar, _ = factor_by(G, top)
    phi_bar = induce_on_quotient(phi, top, Gbar)
    F = fitting_subgroup(Gbar)
    H, _ = factor_by(Gbar, F)
    phi_H = induce_on_quotient(phi_bar, F, H)
    order = phi_H.order()
    log.debug(f"section for q = {q} of {G.name}: |H| = {H.order}, induced order {order}")
    return SectionData(H, phi_H, order, composition_length(order))


def _element_from_text(G: Group, text: str) -> int:
    if isinstance(G, PermutationGroup):
        return G.index_of(parse_permutation(text, G.degree))
    return int(text) - 1


def read_automorphism_file(G: Group, filename: str,
                           frobenius: typing.Optional[typing.Callable[[int], Automorphism]] = None
                           ) -> Automorphism:
    '''
    read an automorphism file

    lines are "g -> image" in the element syntax of the group file (permutations
    for permutation groups, 1-based indices otherwise), or the single line
    "frobenius k" for groups built with a designated field action

    @raises :
    * HomomorphismError if the map does not extend, ValueError on malformed lines
    '''
    with open(filename) as f:
        lines = [line.split('#', 1)[0].strip() for line in f]
    lines = [line for line in lines if line]
    if len(lines) == 1 and lines[0].lower().startswith('frobenius'):
        if frobenius is None:
            raise ValueError(f"{G.name} has no designated field action")
        k = int(lines[0].split()[1]) if len(lines[0].split()) > 1 else 1
        return frobenius(k)
    generator_images = {}
    for line in lines:
        if '->' not in line:
            raise ValueError(f"expected 'g -> image', got '{line}'")
        source, target = (part.strip() for part in line.split('->', 1))
        try:
            generator_images[_element_from_text(G, source)] = _element_from_text(G, target)
        except KeyError as e:
            raise HomomorphismError(f"'{line}' names an element outside {G.name}") from e
    log.debug(f"read {len(generator_images)} generator images from '{filename}'")
    return from_generator_images(G, generator_images, name='phi')