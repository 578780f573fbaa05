#!/usr/bin/env python3
'''
Catalogs of (group, automorphism, identity) instances

A catalog is a YAML or JSON file holding a list of entries (or a mapping with
an `entries` list). Each entry names a group, an automorphism of it and an
identity, plus what the verification is expected to report:

    - label: C7 squaring
      group: {stock: C7}
      automorphism: {generator_images: {"(1 2 3 4 5 6 7)": "(1 3 5 7 2 4 6)"}}
      identity: {ordered: [-2, 1]}
      expect: {hypotheses: pass, regression: {m: 1, h_R: 1}}

Groups: `stock`, `psl2`, `ddomain`, `shift`, `companion`, `product`,
`permutations`, `cayley`, `file`. Automorphisms: `identity`, `frobenius`,
`shift`, `companion`, `inner`, `generator_images`, `file`. Identities:
`ordered`, `unordered`, `exponent`, `n_abelian`, `order`, `splitting`, `search`.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'CatalogEntry',
    'ResolvedEntry',
    'load_catalog',
    'builtin_catalog',
    'entry_from_dict',
    'resolve_entry',
    'resolve_group',
]

import os
import json
import yaml
import typing
import logging
import dataclasses

import numpy as np

from ..algebra.polynomials import (IntPolynomial, UnorderedIdentity, exponent_identity,
                                   n_abelian_identity, order_identity, splitting_identity)
from ..errors import CatalogError, FitBoundError
from ..groups.automorphism import (Automorphism, from_generator_images, identity_automorphism,
                                   inner, read_automorphism_file)
from ..groups.constructions import (ShiftPower, build_ddomain, build_psl2, companion_action,
                                    shift_power, stock)
from ..groups.group import Group, PermutationGroup, direct_product, from_cayley_table, from_permutations
from ..groups.parsing import load_group_file, parse_permutation
from ..resources import get_path_to_catalog

log = logging.getLogger(__name__)

_GROUP_KINDS = ('stock', 'psl2', 'ddomain', 'shift', 'companion', 'product',
                'permutations', 'cayley', 'file')
_IDENTITY_KINDS = ('ordered', 'unordered', 'exponent', 'n_abelian', 'order', 'splitting', 'search')
_EXPECTED_STATUS = ('pass', 'hypothesis-failure', 'violation', 'resolution-error')


@dataclasses.dataclass
class CatalogEntry:
    '''
    one catalog instance, as read from the file

    @parameters :
    * `label`           :   a unique name
    * `group`           :   the group spec
    * `automorphism`    :   the automorphism spec
    * `identity`        :   the identity spec
    * `expect`          :   the expected status (and optional regression values)
    * `base_dir`        :   the directory relative file names are resolved against
    '''
    label: str
    group: 'dict[str, typing.Any]'
    automorphism: 'typing.Union[str, dict[str, typing.Any]]' = 'identity'
    identity: 'dict[str, typing.Any]' = dataclasses.field(default_factory=lambda: {'order': 1})
    expect: 'dict[str, typing.Any]' = dataclasses.field(default_factory=dict)
    base_dir: str = '.'

    @property
    def expected_status(self) -> str:
        if 'status' in self.expect:
            return self.expect['status']
        return 'pass' if self.expect.get('hypotheses', 'pass') == 'pass' else 'hypothesis-failure'

    @property
    def regression(self) -> 'dict[str, typing.Any]':
        return dict(self.expect.get('regression', {}))


@dataclasses.dataclass
class ResolvedEntry:
    '''
    an entry turned into concrete objects

    @parameters :
    * `entry`           :   the catalog entry
    * `group`           :   the group G
    * `automorphism`    :   phi
    * `identity`        :   an IntPolynomial (ordered) or an UnorderedIdentity
    * `shift`           :   (optional) the direct power data when G = S^n with the shift
    '''
    entry: CatalogEntry
    group: Group
    automorphism: Automorphism
    identity: 'IntPolynomial | UnorderedIdentity'
    shift: typing.Optional[ShiftPower] = None

    @property
    def ordered(self) -> bool:
        return isinstance(self.identity, IntPolynomial)


def _single_key(spec: typing.Any, kinds: typing.Sequence[str], what: str, label: str) -> 'tuple[str, typing.Any]':
    if isinstance(spec, str):
        return spec, None
    if not isinstance(spec, dict) or len(spec) != 1:
        raise CatalogError(f"entry '{label}': the {what} must be a single-key mapping, not {spec!r}")
    (kind, value), = spec.items()
    if kinds and kind not in kinds:
        raise CatalogError(f"entry '{label}': unknown {what} kind '{kind}'")
    return kind, value


def entry_from_dict(raw: 'dict[str, typing.Any]', base_dir: str = '.') -> CatalogEntry:
    if not isinstance(raw, dict):
        raise CatalogError(f"a catalog entry must be a mapping, not {raw!r}")
    unknown = set(raw) - {'label', 'group', 'automorphism', 'identity', 'expect'}
    if unknown:
        raise CatalogError(f"unknown entry keys {sorted(unknown)}")
    if 'label' not in raw or 'group' not in raw:
        raise CatalogError(f"an entry needs a label and a group: {raw!r}")
    entry = CatalogEntry(label=str(raw['label']), group=raw['group'], base_dir=base_dir)
    if 'automorphism' in raw:
        entry.automorphism = raw['automorphism']
    if 'identity' in raw:
        entry.identity = raw['identity']
    if 'expect' in raw:
        entry.expect = dict(raw['expect'] or {})
    _single_key(entry.group, _GROUP_KINDS, 'group', entry.label)
    _single_key(entry.identity, _IDENTITY_KINDS, 'identity', entry.label)
    if entry.expected_status not in _EXPECTED_STATUS:
        raise CatalogError(f"entry '{entry.label}': unknown expected status '{entry.expected_status}'")
    return entry


def load_catalog(filename: str) -> 'list[CatalogEntry]':
    '''
    read a catalog from a YAML or JSON file

    @raises :
    * CatalogError if the file is malformed, OSError if it cannot be read
    '''
    with open(filename) as f:
        try:
            if filename.lower().endswith('json'):
                content = json.load(f)
            elif filename.lower().endswith(('yaml', 'yml')):
                content = yaml.safe_load(f)
            else:
                raise CatalogError(f"'{filename}' is neither a JSON nor a YAML file")
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise CatalogError(f"cannot parse '{filename}': {e}") from e
    if isinstance(content, dict):
        content = content.get('entries')
    if not isinstance(content, list):
        raise CatalogError(f"'{filename}' holds no list of entries")
    base_dir = os.path.dirname(os.path.abspath(filename))
    entries = [entry_from_dict(raw, base_dir) for raw in content]
    labels = [entry.label for entry in entries]
    duplicates = sorted({label for label in labels if labels.count(label) > 1})
    if duplicates:
        raise CatalogError(f"duplicate labels in '{filename}': {duplicates}")
    log.debug(f"loaded {len(entries)} entries from '{filename}'")
    return entries


def builtin_catalog() -> 'list[CatalogEntry]':
    return load_catalog(get_path_to_catalog('builtin.yaml'))


class _Built(typing.NamedTuple):
    group: Group
    frobenius: typing.Optional[typing.Callable[[int], Automorphism]] = None
    designated: typing.Optional[Automorphism] = None
    shift: typing.Optional[ShiftPower] = None


def _path(entry_dir: str, filename: str) -> str:
    return filename if os.path.isabs(filename) else os.path.join(entry_dir, filename)


def _build_group(spec: typing.Any, base_dir: str, label: str) -> _Built:
    kind, value = _single_key(spec, _GROUP_KINDS, 'group', label)
    if kind == 'stock':
        return _Built(stock(str(value)))
    if kind == 'psl2':
        psl = build_psl2(int(value))
        return _Built(psl.group, psl.frobenius_action)
    if kind == 'ddomain':
        D = build_ddomain(int(value['p']), int(value.get('e', 1)), int(value.get('N', 1)))
        return _Built(D.group, D.frobenius_action)
    if kind == 'shift':
        base = _build_group(value['base'], base_dir, label).group
        power = shift_power(base, int(value['n']))
        return _Built(power.group, designated=power.automorphism, shift=power)
    if kind == 'companion':
        action = companion_action(int(value['p']), value['f'])
        return _Built(action.group, designated=action.automorphism)
    if kind == 'product':
        factors = [_build_group(factor, base_dir, label).group for factor in value]
        return _Built(direct_product(factors).group)
    if kind == 'permutations':
        return _Built(from_permutations(int(value['degree']), value['generators'], label))
    if kind == 'cayley':
        return _Built(from_cayley_table(np.asarray(value, dtype=np.int64), label))
    # kind == 'file'
    if isinstance(value, str):
        value = {'path': value}
    return _Built(load_group_file(_path(base_dir, value['path']), value.get('kind', 'auto'), label))


def resolve_group(spec: typing.Any, base_dir: str = '.', label: str = '') -> Group:
    '''the group named by a group spec'''
    return _build_group(spec, base_dir, label).group


def _element(G: Group, text: typing.Any) -> int:
    if isinstance(G, PermutationGroup) and isinstance(text, str):
        return G.index_of(parse_permutation(text, G.degree))
    return int(text)


def _build_automorphism(spec: typing.Any, built: _Built, base_dir: str, label: str) -> Automorphism:
    kind, value = _single_key(spec, (), 'automorphism', label)
    G = built.group
    if kind == 'identity':
        return identity_automorphism(G)
    if kind == 'frobenius':
        if built.frobenius is None:
            raise CatalogError(f"entry '{label}': {G.name} has no designated field action")
        return built.frobenius(1 if value is None else int(value))
    if kind in ('shift', 'companion'):
        if built.designated is None:
            raise CatalogError(f"entry '{label}': {G.name} carries no {kind} automorphism")
        return built.designated
    if kind == 'inner':
        return inner(G, _element(G, value))
    if kind == 'generator_images':
        images = {_element(G, source): _element(G, target) for source, target in value.items()}
        return from_generator_images(G, images, name='phi')
    if kind == 'file':
        return read_automorphism_file(G, _path(base_dir, value), built.frobenius)
    raise CatalogError(f"entry '{label}': unknown automorphism kind '{kind}'")


def _build_identity(spec: typing.Any, G: Group, phi: Automorphism, label: str) -> 'IntPolynomial | UnorderedIdentity':
    kind, value = _single_key(spec, _IDENTITY_KINDS, 'identity', label)
    if kind == 'ordered':
        return IntPolynomial(value)
    if kind == 'unordered':
        return UnorderedIdentity(tuple(term) for term in value)
    if kind == 'exponent':
        return exponent_identity(int(value))
    if kind == 'n_abelian':
        return n_abelian_identity(int(value))
    if kind == 'order':
        return order_identity(phi.order() if value == 'auto' else int(value))
    if kind == 'splitting':
        return splitting_identity(int(value))
    # kind == 'search': the first primitive identity the search finds
    from .search import identity_search

    value = value or {}
    result = identity_search(phi, int(value.get('max_degree', 2)), int(value.get('coeff_bound', 2)))
    if not result.identities:
        raise CatalogError(f"entry '{label}': the identity search found nothing")
    return result.identities[0]


def resolve_entry(entry: CatalogEntry) -> ResolvedEntry:
    '''
    turn an entry into concrete objects

    @raises :
    * CatalogError (wrapping the cause) if anything cannot be built
    '''
    try:
        built = _build_group(entry.group, entry.base_dir, entry.label)
        phi = _build_automorphism(entry.automorphism, built, entry.base_dir, entry.label)
        identity = _build_identity(entry.identity, built.group, phi, entry.label)
    except CatalogError:
        raise
    except (FitBoundError, OSError, KeyError, TypeError, ValueError) as e:
        raise CatalogError(f"entry '{entry.label}' cannot be resolved: {e}") from e
    return ResolvedEntry(entry, built.group, phi, identity, built.shift)
