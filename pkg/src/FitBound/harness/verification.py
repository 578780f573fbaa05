#!/usr/bin/env python3
'''
Verification of the Fitting height and soluble radical bounds on catalog entries

For every entry the hypotheses (primitive identity, coprime automorphism,
identity satisfied) are checked first. Only when they all hold are the bounds
asserted:

    h(R) <= B1(d, h(C))     h(C) <= m     h(R) <= B1(d, m)     |G/R| <= B2(d, m)

followed by the addenda (corollary, Turull, section bounds, simple groups,
exponent of C, partial sums, fixed-point-free solubility, restriction to R and
the Fitting decomposition). A failed assertion on an entry whose hypotheses
hold is recorded as a violation and fails the run.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'Check',
    'VerificationRecord',
    'CatalogRun',
    'verify_entry',
    'verify_resolved',
    'verify_corollary',
    'verify_turull',
    'verify_section_bounds',
    'verify_simple_bound',
    'verify_shalev',
    'verify_partial_sums',
    'verify_rowley',
    'verify_restriction',
    'verify_fitting_decomposition',
    'run_catalog',
]

import time
import typing
import logging
import dataclasses
import concurrent.futures

import sympy

from ..algebra.polynomials import (IntPolynomial, b1, b2, b3, content, corollary_bound, is_primitive,
                                   partial_sum, primitive_partial_exists, shalev_bound)
from ..config import get_settings
from ..errors import FitBoundError, ImplementationError
from ..groups.automorphism import (fixed_points, is_coprime, restrict, satisfies_ordered,
                                   satisfies_unordered, section_data)
from ..groups.group import exponent, is_soluble
from ..groups.structure import (composition_length, fitting_height, fitting_subgroup, intersection,
                                is_simple, o_qprime_q, soluble_radical)
from .catalog import CatalogEntry, ResolvedEntry, resolve_entry

log = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'


@dataclasses.dataclass
class Check:
    '''
    the outcome of one asserted inequality

    @parameters :
    * `name`    :   what is asserted, e.g. "h(R) <= B1(d,m)"
    * `outcome` :   'pass', 'fail' or 'skipped'
    * `detail`  :   the numbers compared, or why the check does not apply
    '''
    name: str
    outcome: str
    detail: str = ''

    @classmethod
    def compare(cls, name: str, holds: bool, detail: str) -> 'Check':
        return cls(name, PASS if holds else FAIL, detail)

    @classmethod
    def skip(cls, name: str, reason: str) -> 'Check':
        return cls(name, SKIPPED, reason)

    def to_json(self) -> 'dict[str, str]':
        return {'name': self.name, 'outcome': self.outcome, 'detail': self.detail}


@dataclasses.dataclass
class VerificationRecord:
    '''
    everything computed for one catalog entry

    @parameters :
    * `label`       :   the entry label
    * `status`      :   'pass', 'hypothesis-failure', 'violation' or 'resolution-error'
    * `hypotheses`  :   name -> (holds, reason) for primitive, coprime and satisfied
    * `invariants`  :   |G|, m, |phi|, d, |R|, h(R), h(C), |G/R|
    * `bounds`      :   B1(d,h(C)), B1(d,m), B2(d,m) and the corollary bound
    * `checks`      :   the main inequalities
    * `addenda`     :   the further inequalities
    * `flags`       :   conditions worth a warning that do not fail the entry
    * `mismatches`  :   differences from the catalog expectations
    * `error`       :   the resolution error, if any
    * `seconds`     :   wall time, excluded from report comparisons
    '''
    label: str
    status: str = PASS
    identity: 'list[typing.Any]' = dataclasses.field(default_factory=list)
    ordered: bool = True
    hypotheses: 'dict[str, dict[str, typing.Any]]' = dataclasses.field(default_factory=dict)
    invariants: 'dict[str, typing.Optional[int]]' = dataclasses.field(default_factory=dict)
    bounds: 'dict[str, typing.Any]' = dataclasses.field(default_factory=dict)
    checks: 'list[Check]' = dataclasses.field(default_factory=list)
    addenda: 'list[Check]' = dataclasses.field(default_factory=list)
    flags: 'list[str]' = dataclasses.field(default_factory=list)
    expected_status: str = PASS
    mismatches: 'list[str]' = dataclasses.field(default_factory=list)
    error: str = ''
    seconds: float = 0.

    @property
    def hypotheses_pass(self) -> bool:
        return bool(self.hypotheses) and all(h['holds'] for h in self.hypotheses.values())

    @property
    def violations(self) -> 'list[Check]':
        return [c for c in self.checks + self.addenda if c.outcome == FAIL]

    @property
    def matches_expectation(self) -> bool:
        return not self.mismatches

    def check(self, name: str) -> Check:
        for c in self.checks + self.addenda:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, timing: bool = True) -> 'dict[str, typing.Any]':
        '''the report form, numbers as decimal strings'''
        record = {
            'label': self.label,
            'status': self.status,
            'expected_status': self.expected_status,
            'identity': self.identity,
            'ordered': self.ordered,
            'hypotheses': self.hypotheses,
            'invariants': {k: None if v is None else str(v) for k, v in self.invariants.items()},
            'bounds': self.bounds,
            'checks': [c.to_json() for c in self.checks],
            'addenda': [c.to_json() for c in self.addenda],
            'flags': list(self.flags),
            'mismatches': list(self.mismatches),
            'error': self.error,
        }
        if timing:
            record['seconds'] = round(self.seconds, 4)
        return record


# -- hypotheses -----------------------------------------------------------------------------------

def _underlying(resolved: ResolvedEntry) -> IntPolynomial:
    return resolved.identity if resolved.ordered else resolved.identity.underlying()


def _degree(resolved: ResolvedEntry) -> int:
    '''d: the degree, or the largest exponent of an unordered identity'''
    if resolved.ordered:
        return resolved.identity.degree or 0
    return resolved.identity.max_exponent()


def _hypotheses(resolved: ResolvedEntry) -> 'dict[str, dict[str, typing.Any]]':
    G, phi = resolved.group, resolved.automorphism
    f = _underlying(resolved)
    hypotheses = {}
    primitive = is_primitive(f)
    hypotheses['primitive'] = {
        'holds': primitive,
        'reason': '' if primitive else f"identity not primitive (content {content(f)})"}
    coprime = is_coprime(phi)
    hypotheses['coprime'] = {
        'holds': coprime,
        'reason': '' if coprime else f"|phi| = {phi.order()} is not coprime to |G| = {G.order}"}
    if resolved.ordered:
        holds, witness = satisfies_ordered(phi, resolved.identity)
    else:
        holds, witness = satisfies_unordered(phi, resolved.identity)
    hypotheses['satisfied'] = {
        'holds': holds,
        'reason': '' if holds else f"identity fails at g = {G.label(witness)}"}
    return hypotheses


def _invariants(resolved: ResolvedEntry, record: VerificationRecord) -> None:
    G, phi = resolved.group, resolved.automorphism
    C = fixed_points(phi)
    R = soluble_radical(G)
    h_C = None
    if is_soluble(C):
        h_C = fitting_height(C)
    else:
        record.flags.append(f"C_G(phi) of order {C.order} is not soluble, h(C) is undefined")
        log.warning(f"{record.label}: {record.flags[-1]}")
    record.invariants = {
        'order': G.order,
        'm': C.order,
        'phi_order': phi.order(),
        'd': _degree(resolved),
        'R_order': R.order,
        'h_R': fitting_height(R),
        'h_C': h_C,
        'quotient_order': G.order // R.order,
    }


# -- main inequalities ----------------------------------------------------------------------------

def _main_checks(record: VerificationRecord, f: IntPolynomial, ordered: bool) -> None:
    inv = record.invariants
    d, m, h_R, h_C, quotient_order = inv['d'], inv['m'], inv['h_R'], inv['h_C'], inv['quotient_order']
    bound_m = b1(d, m)
    record.bounds['B1(d,m)'] = str(bound_m)
    if h_C is None:
        record.checks.append(Check.skip('h(R) <= B1(d,h(C))', 'C_G(phi) is not soluble'))
        record.checks.append(Check.skip('h(C) <= m', 'C_G(phi) is not soluble'))
    else:
        bound_c = b1(d, h_C)
        record.bounds['B1(d,h(C))'] = str(bound_c)
        record.checks.append(Check.compare('h(R) <= B1(d,h(C))', h_R <= bound_c, f"{h_R} <= {bound_c}"))
        record.checks.append(Check.compare('h(C) <= m', h_C <= m, f"{h_C} <= {m}"))
    record.checks.append(Check.compare('h(R) <= B1(d,m)', h_R <= bound_m, f"{h_R} <= {bound_m}"))
    B2 = b2(d, m)
    record.bounds['B2(d,m)'] = B2.to_json()
    try:
        holds = B2.ge(quotient_order)
    except ValueError as e:
        record.checks.append(Check.skip('|G/R| <= B2(d,m)', f"undecidable: {e}"))
        log.warning(f"{record.label}: {e}")
    else:
        shown = repr(B2) if not B2.is_exact() else str(B2.exact)
        record.checks.append(Check.compare('|G/R| <= B2(d,m)', holds, f"{quotient_order} <= {shown}"))
    if ordered and f.evaluate(1) != 0:
        record.bounds['corollary'] = str(corollary_bound(f))


# -- addenda --------------------------------------------------------------------------------------

def verify_corollary(resolved: ResolvedEntry) -> Check:
    '''h(G) <= 8 deg(f) + 2|f(1)| + 2 for soluble G'''
    name = 'h(G) <= 8deg(f)+2|f(1)|+2'
    G = resolved.group
    if not resolved.ordered:
        return Check.skip(name, 'unordered identity')
    f = resolved.identity
    if f.evaluate(1) == 0:
        return Check.skip(name, 'f(1) = 0')
    if not is_soluble(G):
        return Check.skip(name, 'G is not soluble')
    h, bound = fitting_height(G), corollary_bound(f)
    return Check.compare(name, h <= bound, f"{h} <= {bound}")


def verify_turull(resolved: ResolvedEntry) -> Check:
    '''h(G) <= 2k(|phi|) + h(C_G(phi)) for soluble G and coprime phi'''
    name = 'h(G) <= 2k(A)+h(C)'
    G, phi = resolved.group, resolved.automorphism
    if not is_soluble(G):
        return Check.skip(name, 'G is not soluble')
    if not is_coprime(phi):
        return Check.skip(name, 'phi is not coprime')
    h = fitting_height(G)
    bound = 2 * composition_length(phi.order()) + fitting_height(fixed_points(phi))
    return Check.compare(name, h <= bound, f"{h} <= {bound}")


def verify_section_bounds(resolved: ResolvedEntry) -> 'list[Check]':
    '''for every prime q dividing |G|, the order phi induces on the section and its length'''
    G, phi = resolved.group, resolved.automorphism
    if G.is_trivial():
        return [Check.skip('section bounds', 'G is trivial')]
    if not is_soluble(G):
        return [Check.skip('section bounds', 'G is not soluble')]
    d = _degree(resolved)
    checks = []
    for q in sympy.primefactors(G.order):
        data = section_data(G, phi, q)
        bound = (2 * d) ** (2 * d)
        checks.append(Check.compare(f"q={q}: |phi_H| <= (2d)^(2d)", data.order <= bound,
                                    f"{data.order} <= {bound}"))
        checks.append(Check.compare(f"q={q}: k(phi_H) <= 4d", data.klen <= 4 * d,
                                    f"{data.klen} <= {4 * d}"))
    return checks


def verify_simple_bound(resolved: ResolvedEntry) -> 'list[Check]':
    '''|phi| <= d, |G| <= B3(d, m) and |G| <= B3(|phi|, m) for non-abelian simple G'''
    G, phi = resolved.group, resolved.automorphism
    if G.is_abelian() or not is_simple(G):
        return [Check.skip('simple group bounds', 'G is not non-abelian simple')]
    d, m, order = _degree(resolved), fixed_points(phi).order, phi.order()
    return [
        Check.compare('|phi| <= d', order <= d, f"{order} <= {d}"),
        Check.compare('|G| <= B3(d,m)', b3(d, m).ge(G.order), f"{G.order} <= B3({d},{m})"),
        Check.compare('|G| <= B3(|phi|,m)', b3(order, m).ge(G.order), f"{G.order} <= B3({order},{m})"),
    ]


def verify_shalev(resolved: ResolvedEntry) -> 'list[Check]':
    '''exp(C) divides |f(1)| and h(C) <= shalev_bound(|f(1)|) <= 2|f(1)|'''
    f1 = abs(_underlying(resolved).evaluate(1))
    if f1 == 0:
        return [Check.skip('exponent of C', 'f(1) = 0')]
    C = fixed_points(resolved.automorphism)
    e = exponent(C)
    checks = [Check.compare('exp(C) | f(1)', f1 % e == 0, f"{e} | {f1}")]
    if not is_soluble(C):
        checks.append(Check.skip('h(C) <= shalev(f(1))', 'C_G(phi) is not soluble'))
        return checks
    h, bound = fitting_height(C), shalev_bound(f1)
    checks.append(Check.compare('h(C) <= shalev(f(1))', h <= bound <= 2 * f1,
                                f"{h} <= {bound} <= {2 * f1}"))
    return checks


def verify_partial_sums(resolved: ResolvedEntry) -> 'list[Check]':
    '''the regrouped identities f_{n,j} of phi^n on the first factor of S^n'''
    shift = resolved.shift
    if shift is None or shift.product is None:
        return [Check.skip('partial sums', 'not a shifted direct power')]
    if not resolved.ordered:
        return [Check.skip('partial sums', 'unordered identity')]
    f, n = resolved.identity, shift.n
    first = shift.product.factor_subgroup(0)
    psi = restrict(resolved.automorphism.power(n), first)
    checks = []
    for j in range(n):
        holds, witness = satisfies_ordered(psi, partial_sum(f, n, j))
        detail = '' if holds else f"fails at {psi.group.label(witness)}"
        checks.append(Check.compare(f"f_{{{n},{j}}} is an identity of phi^{n}", holds, detail))
    try:
        j = primitive_partial_exists(f, n)
    except (ValueError, RuntimeError) as e:
        checks.append(Check.compare('some f_{n,j} primitive', False, str(e)))
    else:
        checks.append(Check.compare('some f_{n,j} primitive', True, f"j = {j}"))
    return checks


def verify_rowley(resolved: ResolvedEntry) -> Check:
    '''a coprime fixed-point-free automorphism forces G soluble'''
    name = 'm = 1 => G soluble'
    phi = resolved.automorphism
    if fixed_points(phi).order != 1:
        return Check.skip(name, 'm > 1')
    if not is_coprime(phi):
        return Check.skip(name, 'phi is not coprime')
    return Check.compare(name, is_soluble(resolved.group), '')


def verify_restriction(resolved: ResolvedEntry) -> 'list[Check]':
    '''phi restricted to R(G): C_R(phi|R) = C_G(phi) meets R, and f still holds'''
    G, phi = resolved.group, resolved.automorphism
    R = soluble_radical(G)
    try:
        psi = restrict(phi, R)
    except FitBoundError as e:
        return [Check.compare('R is phi-invariant', False, str(e))]
    C = fixed_points(phi)
    C_R = fixed_points(psi).order
    meet = intersection(G, [C, R]).order
    if resolved.ordered:
        holds, _ = satisfies_ordered(psi, resolved.identity)
    else:
        holds, _ = satisfies_unordered(psi, resolved.identity)
    return [
        Check.compare('C_R(phi|R) = C_G(phi) & R', C_R == meet, f"{C_R} = {meet}"),
        Check.compare('|C_R(phi|R)| <= m', C_R <= C.order, f"{C_R} <= {C.order}"),
        Check.compare('f holds on R', holds, ''),
    ]


def verify_fitting_decomposition(G) -> Check:
    '''F(G) is the intersection of the O_q',q(G) over the primes q dividing |G|'''
    F = fitting_subgroup(G)
    meet = intersection(G, [o_qprime_q(G, q) for q in sympy.primefactors(G.order)])
    return Check.compare('F = meet of O_q\',q', F == meet, f"|F| = {F.order}, |meet| = {meet.order}")


# -- driver ---------------------------------------------------------------------------------------

def _compare_expectations(entry: CatalogEntry, record: VerificationRecord) -> None:
    record.expected_status = entry.expected_status
    if record.status != entry.expected_status:
        record.mismatches.append(f"status {record.status}, expected {entry.expected_status}")
    for key, expected in sorted(entry.regression.items()):
        if key not in record.invariants:
            record.mismatches.append(f"unknown regression value '{key}'")
            continue
        actual = record.invariants[key]
        if (None if expected is None else str(expected)) != (None if actual is None else str(actual)):
            record.mismatches.append(f"{key} = {actual}, expected {expected}")


def verify_resolved(resolved: ResolvedEntry) -> VerificationRecord:
    '''the record of an already resolved entry, without the expectation comparison'''
    record = VerificationRecord(resolved.entry.label)
    record.ordered = resolved.ordered
    record.identity = resolved.identity.to_list()
    record.hypotheses = _hypotheses(resolved)
    _invariants(resolved, record)
    record.addenda.append(verify_fitting_decomposition(resolved.group))
    if not record.hypotheses_pass:
        record.status = 'hypothesis-failure'
    else:
        _main_checks(record, _underlying(resolved), resolved.ordered)
        record.addenda.append(verify_corollary(resolved))
        record.addenda.append(verify_turull(resolved))
        record.addenda.extend(verify_section_bounds(resolved))
        record.addenda.extend(verify_simple_bound(resolved))
        record.addenda.extend(verify_shalev(resolved))
        record.addenda.extend(verify_partial_sums(resolved))
        record.addenda.append(verify_rowley(resolved))
        record.addenda.extend(verify_restriction(resolved))
    # the decomposition is unconditional, so it can fail even when hypotheses do not hold
    if record.violations:
        record.status = 'violation'
        for c in record.violations:
            log.error(f"{record.label}: violated {c.name} ({c.detail})")
    return record


def verify_entry(entry: CatalogEntry) -> VerificationRecord:
    '''
    resolve and verify one catalog entry

    resolution failures, and caps exceeded while verifying, give a 'resolution-error'
    record rather than an exception; a failed internal cross-check gives a 'violation'
    '''
    log.info(f"verifying '{entry.label}'")
    start = time.perf_counter()
    try:
        record = verify_resolved(resolve_entry(entry))
    except ImplementationError as e:
        record = VerificationRecord(entry.label, status='violation', error=str(e))
        log.error(f"{entry.label}: {e}")
    except FitBoundError as e:
        record = VerificationRecord(entry.label, status='resolution-error', error=str(e))
        log.error(f"{entry.label}: {e}")
    record.seconds = time.perf_counter() - start
    _compare_expectations(entry, record)
    log.info(f"'{entry.label}': {record.status} in {record.seconds:.2f}s")
    return record


@dataclasses.dataclass
class CatalogRun:
    '''
    the records of a whole catalog, in catalog order

    @parameters :
    * `records` :   one VerificationRecord per entry
    '''
    records: 'list[VerificationRecord]'

    @property
    def exit_code(self) -> int:
        '''2 for unexpected resolution errors, 1 for violations or mismatches, else 0'''
        if any(r.status == 'resolution-error' and r.expected_status != 'resolution-error'
               for r in self.records):
            return 2
        if any(r.status == 'violation' or r.mismatches for r in self.records):
            return 1
        return 0

    def summary(self) -> 'dict[str, int]':
        counts: 'dict[str, int]' = {}
        for r in self.records:
            counts[r.status] = counts.get(r.status, 0) + 1
        return counts


def run_catalog(entries: typing.Sequence[CatalogEntry], workers: typing.Optional[int] = None) -> CatalogRun:
    '''
    verify every entry, concurrently when `workers` (default from the settings) exceeds 1
    '''
    workers = workers or get_settings().workers
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(verify_entry, entries))
    else:
        records = [verify_entry(entry) for entry in entries]
    run = CatalogRun(records)
    log.info(f"catalog of {len(records)} entries: {run.summary()}")
    return run
