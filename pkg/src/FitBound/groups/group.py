#!/usr/bin/env python3
'''
Finite groups with full element enumeration

A group is a set of element indices 0 .. order-1 together with a product on
indices. Two backends exist: permutation groups (elements are image arrays on
0 .. degree-1, enumerated breadth-first from the generators) and Cayley groups
(a full multiplication table). Subgroups are sets of indices of a parent group
and can be viewed as groups of their own with `Subgroup.as_group()`.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'Group',
    'PermutationGroup',
    'CayleyGroup',
    'EmbeddedGroup',
    'QuotientGroup',
    'Subgroup',
    'DirectProduct',
    'from_permutations',
    'from_cayley_table',
    'subgroup_generated',
    'normal_closure',
    'is_normal',
    'quotient',
    'derived_series',
    'is_soluble',
    'lower_central_series',
    'is_nilpotent',
    'direct_product',
    'exponent',
    'conjugacy_classes',
    'class_normal_closure',
    'cycle_notation',
    'cycle_lengths',
    'trivial_subgroup',
    'whole_group',
]

import math
import typing
import logging
import functools

import numpy as np

from ..config import get_settings
from ..errors import CapExceededError, GroupAxiomError, NotNormalError

log = logging.getLogger(__name__)


class Group:
    '''
    abstract finite group on the element indices 0 .. order-1

    subclasses implement `_mul`; everything else is derived from it

    @parameters :
    * `order`       :   the number of elements
    * `identity`    :   the index of the neutral element
    * `name`        :   (optional) a label used in logs and reports
    '''

    def __init__(self, order: int, identity: int, name: str = '') -> None:
        self.logger = logging.getLogger(self.__class__.__name__)
        self.order = int(order)
        self.identity = int(identity)
        self.name = name or f'{self.__class__.__name__}({self.order})'
        self._generators: 'typing.Optional[list[int]]' = None
        self._inverses: typing.Optional[np.ndarray] = None
        self._orders: typing.Optional[np.ndarray] = None
        self._table: typing.Optional[np.ndarray] = None
        self._cache: 'dict[typing.Hashable, typing.Any]' = {}

    def __repr__(self) -> str:
        return f"<{self.name} of order {self.order}>"

    def __len__(self) -> int:
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def _mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        '''the index of the product a*b'''
        if self._table is not None:
            return int(self._table[a, b])
        return self._mul(a, b)

    def product(self, factors: typing.Iterable[int]) -> int:
        '''the left-to-right product of the factors'''
        result = self.identity
        for f in factors:
            result = self.mul(result, f)
        return result

    def mul_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        '''elementwise products of two index arrays'''
        if self._table is not None:
            return self._table[a, b]
        return np.fromiter((self._mul(int(x), int(y)) for x, y in zip(a, b)),
                           dtype=np.int64, count=len(a))

    def inv_many(self, a: np.ndarray) -> np.ndarray:
        if self._inverses is None:
            self._inverses = self._compute_inverses()
        return self._inverses[a]

    def power_many(self, a: np.ndarray, n: int) -> np.ndarray:
        '''elementwise a^n for an index array, negative n meaning inverse-then-power'''
        a = np.asarray(a, dtype=np.int64)
        n = int(n) % exponent(self)
        result = np.full(len(a), self.identity, dtype=np.int64)
        base = a
        while n:
            if n & 1:
                result = self.mul_many(result, base)
            n >>= 1
            if n:
                base = self.mul_many(base, base)
        return result

    def _compute_inverses(self) -> np.ndarray:
        inverses = np.full(self.order, -1, dtype=np.int64)
        for a in self.elements():
            if inverses[a] >= 0:
                continue
            x = a
            previous = self.identity
            while x != self.identity:
                previous = x
                x = self.mul(x, a)
            # a^(n-1) is the inverse of a
            inverses[a] = previous
            inverses[previous] = a
        return inverses

    def inv(self, a: int) -> int:
        if self._inverses is None:
            self._inverses = self._compute_inverses()
        return int(self._inverses[a])

    def element_order(self, a: int) -> int:
        if self._orders is None:
            self._orders = self._compute_orders()
        return int(self._orders[a])

    def _compute_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        for a in self.elements():
            n, x = 1, a
            while x != self.identity:
                x = self.mul(x, a)
                n += 1
            orders[a] = n
        return orders

    def power(self, a: int, n: int) -> int:
        '''a^n, negative n meaning the inverse raised to |n|'''
        n = int(n) % self.element_order(a)
        result, base = self.identity, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def conj(self, g: int, x: int) -> int:
        '''g x g^-1'''
        return self.mul(self.mul(g, x), self.inv(g))

    def commutator(self, a: int, b: int) -> int:
        '''a^-1 b^-1 a b'''
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    @property
    def generators(self) -> 'list[int]':
        '''a generating set, given at construction or found greedily'''
        if self._generators is None:
            self._generators = _greedy_generators(self, self.elements())
        return self._generators

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a)
                   for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_trivial(self) -> bool:
        return self.order == 1

    def table(self) -> np.ndarray:
        '''the full multiplication table (only for groups within the Cayley cap)'''
        if self._table is None:
            cap = get_settings().cayley_cap
            if self.order > cap:
                raise CapExceededError(
                    f"{self.name} has order {self.order} > cayley cap {cap}")
            self._table = self._build_table()
        return self._table

    def _build_table(self) -> np.ndarray:
        table = np.empty((self.order, self.order), dtype=np.int64)
        for a in self.elements():
            for b in self.elements():
                table[a, b] = self._mul(a, b)
        return table

    def label(self, a: int) -> str:
        '''a human readable name of the element'''
        return str(a)


class PermutationGroup(Group):
    '''
    a group of permutations of 0 .. degree-1; use `from_permutations`

    the product is composition of maps: (a*b)(i) = a(b(i))
    '''

    def __init__(self, degree: int, perms: np.ndarray, generators: 'list[int]', name: str = '') -> None:
        super().__init__(len(perms), 0, name)
        self.degree = int(degree)
        self.perms = perms
        self._index: 'dict[bytes, int]' = {row.tobytes(): k for k, row in enumerate(perms)}
        self._generators = [g for g in dict.fromkeys(generators) if g != self.identity]

    def index_of(self, perm: typing.Sequence[int]) -> int:
        '''the index of a permutation given by its image array'''
        key = np.asarray(perm, dtype=np.int16).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"{list(perm)} is not an element of {self.name}") from None

    def index_many(self, perms: np.ndarray) -> np.ndarray:
        '''the indices of the rows of a 2d array of permutations'''
        perms = np.ascontiguousarray(perms, dtype=np.int16)
        return np.fromiter((self._index[row.tobytes()] for row in perms),
                           dtype=np.int64, count=len(perms))

    def _mul(self, a: int, b: int) -> int:
        return self._index[self.perms[a][self.perms[b]].tobytes()]

    def mul_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._table is not None:
            return self._table[a, b]
        rows = np.take_along_axis(self.perms[a], self.perms[b].astype(np.int64), axis=1)
        return self.index_many(rows)

    def _compute_inverses(self) -> np.ndarray:
        inverse_perms = np.argsort(self.perms, axis=1).astype(np.int16)
        return self.index_many(inverse_perms)

    def _compute_orders(self) -> np.ndarray:
        return np.fromiter((math.lcm(*cycle_lengths(row)) for row in self.perms),
                           dtype=np.int64, count=self.order)

    def _build_table(self) -> np.ndarray:
        table = np.empty((self.order, self.order), dtype=np.int64)
        for a in self.elements():
            table[a] = self.index_many(self.perms[a][self.perms])
        return table

    def label(self, a: int) -> str:
        return cycle_notation(self.perms[a])


class CayleyGroup(Group):
    '''a group given by its multiplication table on 0 .. N-1; use `from_cayley_table`'''

    def __init__(self, table: np.ndarray, identity: int, name: str = '') -> None:
        super().__init__(len(table), identity, name)
        self._table = np.asarray(table, dtype=np.int64)

    def _mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def _compute_inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self._table == self.identity)
        inverses = np.empty(self.order, dtype=np.int64)
        inverses[rows] = cols
        return inverses

    def table(self) -> np.ndarray:
        return self._table


class EmbeddedGroup(Group):
    '''
    a subgroup viewed as a group: local index k stands for the parent element
    `members[k]`, members in ascending order
    '''

    def __init__(self, subgroup: 'Subgroup') -> None:
        members = np.array(subgroup.sorted_members, dtype=np.int64)
        self.parent = subgroup.parent
        self.subgroup = subgroup
        self.members = members
        self._local = np.full(self.parent.order, -1, dtype=np.int64)
        self._local[members] = np.arange(len(members))
        super().__init__(len(members), int(self._local[self.parent.identity]),
                         f"{subgroup.name or 'subgroup'} <= {self.parent.name}")
        if subgroup._generators is not None:
            self._generators = [int(self._local[g]) for g in subgroup._generators]

    def _mul(self, a: int, b: int) -> int:
        return int(self._local[self.parent.mul(int(self.members[a]), int(self.members[b]))])

    def _compute_inverses(self) -> np.ndarray:
        return self._local[[self.parent.inv(int(m)) for m in self.members]]

    def _compute_orders(self) -> np.ndarray:
        return np.array([self.parent.element_order(int(m)) for m in self.members], dtype=np.int64)

    def to_parent(self, k: int) -> int:
        return int(self.members[k])

    def from_parent(self, g: int) -> int:
        k = int(self._local[g])
        if k < 0:
            raise KeyError(f"{g} is not in {self.name}")
        return k

    def label(self, a: int) -> str:
        return self.parent.label(int(self.members[a]))


class QuotientGroup(CayleyGroup):
    '''
    the group of left cosets gN, numbered by their smallest element

    @parameters :
    * `parent`          :   the group G
    * `kernel`          :   the normal subgroup N
    * `table`           :   the multiplication table of the cosets
    * `projection`      :   the coset number of every element of G
    * `representatives` :   the smallest element of every coset
    '''

    def __init__(self, parent: Group, kernel: 'Subgroup', table: np.ndarray,
                 projection: np.ndarray, representatives: 'list[int]') -> None:
        super().__init__(table, int(projection[parent.identity]),
                         f"{parent.name}/{kernel.name or kernel.order}")
        self.parent = parent
        self.kernel = kernel
        self.projection = projection
        self.representatives = representatives

    def project(self, g: int) -> int:
        return int(self.projection[g])

    def image(self, subgroup: 'Subgroup') -> 'Subgroup':
        '''the image of a subgroup of the parent'''
        return Subgroup(self, {int(self.projection[g]) for g in subgroup})

    def preimage(self, subgroup: 'Subgroup') -> 'Subgroup':
        '''the full inverse image of a subgroup of the quotient'''
        mask = np.zeros(self.order, dtype=bool)
        mask[list(subgroup.members)] = True
        members = np.nonzero(mask[self.projection])[0]
        return Subgroup(self.parent, members.tolist())

    def label(self, a: int) -> str:
        return f"{self.parent.label(self.representatives[a])}N"


class Subgroup:
    '''
    a subgroup of `parent` given by the set of its element indices

    @parameters :
    * `parent`      :   the group
    * `members`     :   the element indices (assumed closed, see `subgroup_generated`)
    * `generators`  :   (optional) a known generating set
    * `name`        :   (optional) a label, e.g. 'R(G)'
    '''

    def __init__(self, parent: Group, members: typing.Iterable[int],
                 generators: 'typing.Optional[typing.Iterable[int]]' = None, name: str = '') -> None:
        self.parent = parent
        self.members: 'frozenset[int]' = frozenset(int(m) for m in members)
        self.name = name
        self._generators = None if generators is None else \
            [g for g in dict.fromkeys(int(g) for g in generators) if g != parent.identity]
        self._group: typing.Optional[Group] = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self.sorted_members)

    @functools.cached_property
    def sorted_members(self) -> 'tuple[int, ...]':
        return tuple(sorted(self.members))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __le__(self, other: 'Subgroup') -> bool:
        return self.parent is other.parent and self.members <= other.members

    def __repr__(self) -> str:
        name = f"{self.name} " if self.name else ''
        return f"<subgroup {name}of order {self.order} in {self.parent.name}>"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def generators(self) -> 'list[int]':
        if self._generators is None:
            self._generators = _greedy_generators(self.parent, self.sorted_members)
        return self._generators

    def as_group(self) -> Group:
        '''the subgroup as a group in its own right (the parent itself if whole)'''
        if self.is_whole():
            return self.parent
        if self._group is None:
            self._group = EmbeddedGroup(self)
        return self._group

    def named(self, name: str) -> 'Subgroup':
        self.name = name
        return self


class DirectProduct:
    '''
    the direct product of `factors`, with coordinate maps

    @parameters :
    * `group`       :   the product group
    * `factors`     :   the factor groups
    * `combine`     :   a map from a tuple of factor indices to the product index
    * `components`  :   a map from a product index to the tuple of factor indices
    '''

    def __init__(self, group: Group, factors: 'list[Group]',
                 combine: typing.Callable[['tuple[int, ...]'], int],
                 components: typing.Callable[[int], 'tuple[int, ...]']) -> None:
        self.group = group
        self.factors = factors
        self.combine = combine
        self.components = components

    def injection(self, k: int) -> np.ndarray:
        '''the image in the product of every element of factor k'''
        identities = [f.identity for f in self.factors]
        images = []
        for g in self.factors[k].elements():
            coords = list(identities)
            coords[k] = g
            images.append(self.combine(tuple(coords)))
        return np.array(images, dtype=np.int64)

    @property
    def injections(self) -> 'list[np.ndarray]':
        return [self.injection(k) for k in range(len(self.factors))]

    def factor_subgroup(self, k: int) -> Subgroup:
        '''the image of factor k as a subgroup of the product'''
        return Subgroup(self.group, self.injection(k).tolist(), name=f"factor {k}")


def cycle_lengths(perm: typing.Sequence[int]) -> 'list[int]':
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = int(perm[i])
            n += 1
        lengths.append(n)
    return lengths or [1]


def cycle_notation(perm: typing.Sequence[int]) -> str:
    '''1-based cycle notation of an image array, '()' for the identity'''
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or int(perm[start]) == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = int(perm[i])
        cycles.append('(' + ' '.join(cycle) + ')')
    return ''.join(cycles) or '()'


def _extend_closure(G: Group, members: 'list[int]', member_set: 'set[int]',
                    gens: 'list[int]', new: 'list[int]') -> None:
    '''grow a set closed under right multiplication by `gens` to one closed under `gens + new`'''
    all_gens = gens + new
    queue = list(members)
    multipliers = [new] * len(queue)
    cap = get_settings().element_cap
    head = 0
    while head < len(queue):
        x = queue[head]
        for g in multipliers[head]:
            y = G.mul(x, g)
            if y not in member_set:
                member_set.add(y)
                members.append(y)
                queue.append(y)
                multipliers.append(all_gens)
        head += 1
        if len(members) > cap:
            raise CapExceededError(f"subgroup of {G.name} exceeds the element cap {cap}")
    gens.extend(new)


def _closure(G: Group, seeds: typing.Iterable[int]) -> 'tuple[list[int], set[int], list[int]]':
    members = [G.identity]
    member_set = {G.identity}
    gens: 'list[int]' = []
    for s in seeds:
        s = int(s)
        if s not in member_set:
            _extend_closure(G, members, member_set, gens, [s])
    return members, member_set, gens


def _greedy_generators(G: Group, candidates: typing.Iterable[int]) -> 'list[int]':
    members, member_set, gens = _closure(G, [])
    for c in candidates:
        if c not in member_set:
            _extend_closure(G, members, member_set, gens, [int(c)])
    return gens


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, [G.identity], generators=[], name='1')


def whole_group(G: Group) -> Subgroup:
    return Subgroup(G, G.elements(), generators=G.generators, name=G.name)


def subgroup_generated(G: Group, seeds: typing.Iterable[int]) -> Subgroup:
    '''the smallest subgroup of G containing the seeds'''
    members, _, gens = _closure(G, seeds)
    return Subgroup(G, members, generators=gens)


def normal_closure(G: Group, seeds: typing.Iterable[int]) -> Subgroup:
    '''the smallest normal subgroup of G containing the seeds'''
    members, member_set, gens = _closure(G, seeds)
    head = 0
    while head < len(gens) and len(members) < G.order:
        n = gens[head]
        for g in G.generators:
            c = G.conj(g, n)
            if c not in member_set:
                _extend_closure(G, members, member_set, gens, [c])
        head += 1
    return Subgroup(G, members, generators=gens)


def is_normal(G: Group, H: Subgroup) -> 'tuple[bool, typing.Optional[tuple[int, int]]]':
    '''
    test normality by conjugating the generators of H by the generators of G

    @returns :
    * `(True, None)` or `(False, (g, h))` with g h g^-1 outside H
    '''
    for h in H.generators:
        for g in G.generators:
            if G.conj(g, h) not in H:
                return False, (g, h)
    return True, None


def quotient(G: Group, N: Subgroup) -> QuotientGroup:
    '''
    the quotient group G/N with its projection

    @raises :
    * NotNormalError with a witness (g, n) if N is not normal
    * CapExceededError if |G/N| exceeds the Cayley cap
    '''
    normal, witness = is_normal(G, N)
    if not normal:
        raise NotNormalError(f"{N!r} is not normal in {G.name}", witness=witness)
    size = G.order // N.order
    cap = get_settings().cayley_cap
    if size > cap:
        raise CapExceededError(f"|{G.name}/N| = {size} exceeds the cayley cap {cap}")
    projection = np.full(G.order, -1, dtype=np.int64)
    representatives: 'list[int]' = []
    kernel = N.sorted_members
    for g in G.elements():
        if projection[g] < 0:
            for n in kernel:
                projection[G.mul(g, n)] = len(representatives)
            representatives.append(g)
    table = np.empty((size, size), dtype=np.int64)
    for a, ra in enumerate(representatives):
        for b, rb in enumerate(representatives):
            table[a, b] = projection[G.mul(ra, rb)]
    Q = QuotientGroup(G, N, table, projection, representatives)
    Q._generators = [g for g in dict.fromkeys(int(projection[g]) for g in G.generators)
                     if g != Q.identity]
    log.debug(f"quotient {Q.name} of order {size}")
    return Q


def _as_group(G: 'Group | Subgroup') -> Group:
    return G.as_group() if isinstance(G, Subgroup) else G


def derived_series(G: 'Group | Subgroup') -> 'list[Subgroup]':
    '''G >= G' >= G'' >= ... until the terms stabilise'''
    G = _as_group(G)
    if 'derived_series' not in G._cache:
        series = [whole_group(G)]
        while not series[-1].is_trivial():
            gens = series[-1].generators
            nxt = normal_closure(G, [G.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]])
            if nxt.order == series[-1].order:
                break
            series.append(nxt)
        G._cache['derived_series'] = series
    return G._cache['derived_series']


def is_soluble(G: 'Group | Subgroup') -> bool:
    return derived_series(G)[-1].is_trivial()


def lower_central_series(G: 'Group | Subgroup') -> 'list[Subgroup]':
    '''gamma_1 = G, gamma_(i+1) = [gamma_i, G] until the terms stabilise'''
    G = _as_group(G)
    if 'lower_central_series' not in G._cache:
        series = [whole_group(G)]
        while not series[-1].is_trivial():
            nxt = normal_closure(G, [G.commutator(x, g) for x in series[-1].generators
                                     for g in G.generators])
            if nxt.order == series[-1].order:
                break
            series.append(nxt)
        G._cache['lower_central_series'] = series
    return G._cache['lower_central_series']


def is_nilpotent(G: 'Group | Subgroup') -> bool:
    return lower_central_series(G)[-1].is_trivial()


def exponent(G: 'Group | Subgroup') -> int:
    '''the lcm of the element orders'''
    G = _as_group(G)
    if 'exponent' not in G._cache:
        G.element_order(G.identity)
        G._cache['exponent'] = math.lcm(*np.unique(G._orders).tolist())
    return G._cache['exponent']


def conjugacy_classes(G: Group) -> 'list[list[int]]':
    '''the conjugacy classes, each sorted, ordered by their smallest element'''
    if 'classes' not in G._cache:
        class_of = np.full(G.order, -1, dtype=np.int64)
        classes = []
        for x in G.elements():
            if class_of[x] >= 0:
                continue
            orbit = [x]
            class_of[x] = len(classes)
            head = 0
            while head < len(orbit):
                y = orbit[head]
                for g in G.generators:
                    z = G.conj(g, y)
                    if class_of[z] < 0:
                        class_of[z] = len(classes)
                        orbit.append(z)
                head += 1
            classes.append(sorted(orbit))
        G._cache['classes'] = classes
        G._cache['class_of'] = class_of
    return G._cache['classes']


def class_normal_closure(G: Group, x: int) -> Subgroup:
    '''the normal closure of x, shared by its whole conjugacy class'''
    conjugacy_classes(G)
    key = ('class_ncl', int(G._cache['class_of'][x]))
    if key not in G._cache:
        G._cache[key] = normal_closure(G, [x])
    return G._cache[key]


def _check_permutation(perm: np.ndarray, degree: int) -> None:
    if len(perm) != degree or sorted(perm.tolist()) != list(range(degree)):
        raise GroupAxiomError(f"not a bijection on {degree} points", witness=perm.tolist())


def from_permutations(degree: int, generators: typing.Iterable[typing.Any], name: str = '') -> PermutationGroup:
    '''
    enumerate the permutation group generated by `generators`

    @parameters :
    * `degree`      :   the number of points
    * `generators`  :   strings in 1-based cycle or image notation (see `parse_permutation`),
                        or 0-based image sequences
    * `name`        :   (optional) a label

    @returns :
    * the PermutationGroup, elements in breadth-first order from the identity
    '''
    from .parsing import parse_permutation

    degree = int(degree)
    if degree < 1:
        raise ValueError(f"the degree must be positive, not {degree}")
    settings = get_settings()
    if degree > settings.permutation_degree_cap:
        raise CapExceededError(
            f"degree {degree} exceeds the permutation degree cap {settings.permutation_degree_cap}")
    gens = []
    for g in generators:
        perm = parse_permutation(g, degree) if isinstance(g, str) else np.asarray(g, dtype=np.int16)
        _check_permutation(perm, degree)
        gens.append(perm.astype(np.int16))

    identity = np.arange(degree, dtype=np.int16)
    perms = [identity]
    index = {identity.tobytes(): 0}
    head = 0
    while head < len(perms):
        x = perms[head]
        for g in gens:
            y = x[g]
            key = y.tobytes()
            if key not in index:
                index[key] = len(perms)
                perms.append(y)
                if len(perms) > settings.element_cap:
                    raise CapExceededError(
                        f"the group generated exceeds the element cap {settings.element_cap}")
        head += 1
    gen_indices = [index[g.tobytes()] for g in gens]
    G = PermutationGroup(degree, np.array(perms, dtype=np.int16), gen_indices, name)
    log.debug(f"enumerated {G.name}: order {G.order} on {degree} points")
    return G


def _find_witness_triple(T: np.ndarray, middles: typing.Iterable[int]) -> 'typing.Optional[tuple[int, int, int]]':
    '''a triple (a, b, c) with (ab)c != a(bc), b restricted to `middles`'''
    for b in middles:
        left = T[T[:, b], :]            # (ab)c for all a, c
        right = T[:, T[b, :]]           # a(bc) for all a, c
        bad = np.argwhere(left != right)
        if len(bad):
            a, c = bad[0]
            return int(a), int(b), int(c)
    return None


def from_cayley_table(table: typing.Sequence[typing.Sequence[int]], name: str = '') -> CayleyGroup:
    '''
    build a group from a 0-based multiplication table

    @raises :
    * GroupAxiomError with a witness when the table is not a group table
    '''
    T = np.asarray(table, dtype=np.int64)
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise GroupAxiomError(f"a Cayley table must be a nonempty square, not of shape {T.shape}")
    N = len(T)
    cap = get_settings().cayley_cap
    if N > cap:
        raise CapExceededError(f"table of order {N} exceeds the cayley cap {cap}")
    if T.min() < 0 or T.max() >= N:
        raise GroupAxiomError(f"entries must lie in 0 .. {N - 1}")
    full = np.arange(N)
    for a in range(N):
        if not np.array_equal(np.sort(T[a]), full):
            raise GroupAxiomError("not a Latin square: repeated entry in a row", witness=a)
        if not np.array_equal(np.sort(T[:, a]), full):
            raise GroupAxiomError("not a Latin square: repeated entry in a column", witness=a)
    candidates = [e for e in range(N) if np.array_equal(T[e], full) and np.array_equal(T[:, e], full)]
    if not candidates:
        raise GroupAxiomError("the table has no two-sided identity")
    e = candidates[0]
    for a in range(N):
        right = int(np.nonzero(T[a] == e)[0][0])
        if T[right, a] != e:
            raise GroupAxiomError("right inverse is not a left inverse", witness=(a, right))
    if N <= get_settings().exhaustive_check_cap:
        middles = range(N)
    else:
        # Light's test: middle factors from a generating set suffice
        G = CayleyGroup(T, e)
        middles = G.generators
    witness = _find_witness_triple(T, middles)
    if witness is not None:
        raise GroupAxiomError("the table is not associative: (ab)c != a(bc)", witness=witness)
    return CayleyGroup(T, e, name)


def direct_product(factors: typing.Sequence[Group], name: str = '') -> DirectProduct:
    '''
    the direct product of the factors, as a permutation group on the disjoint
    union of the points if every factor is a permutation group, else as a
    Cayley group with mixed-radix element numbering
    '''
    factors = list(factors)
    if not factors:
        raise ValueError("a direct product needs at least one factor")
    settings = get_settings()
    size = math.prod(f.order for f in factors)
    if size > settings.element_cap:
        raise CapExceededError(f"the product has order {size} > element cap {settings.element_cap}")
    name = name or ' x '.join(f.name for f in factors)

    if all(isinstance(f, PermutationGroup) for f in factors):
        offsets = np.cumsum([0] + [f.degree for f in factors])
        degree = int(offsets[-1])
        gens = []
        for k, f in enumerate(factors):
            for g in f.generators:
                perm = np.arange(degree, dtype=np.int16)
                perm[offsets[k]:offsets[k + 1]] = f.perms[g] + offsets[k]
                gens.append(perm)
        if not gens:
            gens = [np.arange(degree, dtype=np.int16)]
        G = from_permutations(degree, gens, name)

        def combine(coords: 'tuple[int, ...]') -> int:
            return G.index_of(np.concatenate([f.perms[c] + offsets[k]
                                              for k, (f, c) in enumerate(zip(factors, coords))]))

        def components(g: int) -> 'tuple[int, ...]':
            perm = G.perms[g]
            return tuple(f.index_of(perm[offsets[k]:offsets[k + 1]] - offsets[k])
                         for k, f in enumerate(factors))

        return DirectProduct(G, factors, combine, components)

    if size > settings.cayley_cap:
        raise CapExceededError(f"the product has order {size} > cayley cap {settings.cayley_cap}")
    table = np.zeros((1, 1), dtype=np.int64)
    identity = 0
    for f in factors:
        T = f.table()
        n, m = len(table), len(T)
        table = (table[:, None, :, None] * m + T[None, :, None, :]).reshape(n * m, n * m)
        identity = identity * m + f.identity
    G = CayleyGroup(table, identity, name)
    radices = [f.order for f in factors]

    def combine(coords: 'tuple[int, ...]') -> int:
        k = 0
        for c, r in zip(coords, radices):
            k = k * r + int(c)
        return k

    def components(g: int) -> 'tuple[int, ...]':
        coords = []
        for r in reversed(radices):
            g, c = divmod(g, r)
            coords.append(c)
        return tuple(reversed(coords))

    return DirectProduct(G, factors, combine, components)
