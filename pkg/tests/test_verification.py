#!/usr/bin/env python3
'''
Tests of the verification records, the catalog runs and the reports

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

import csv
import io
import json

import pytest

from FitBound.config import override
from FitBound.errors import ImplementationError
from FitBound.harness import verification
from FitBound.harness.catalog import builtin_catalog, entry_from_dict
from FitBound.harness.report import read_report, strip_timing, write_report
from FitBound.harness.verification import Check, run_catalog, verify_entry

SLOW_LABELS = ('PSL(2,32) Frobenius', 'A5^2 shift with constant 60')


def fast_builtin():
    return [e for e in builtin_catalog() if e.label not in SLOW_LABELS]


def by_label(label):
    return next(e for e in builtin_catalog() if e.label == label)


def make_entry(**raw):
    return entry_from_dict({'label': 'x', **raw})


@pytest.mark.parametrize('label', [
    'trivial', 'C7 squaring', 'C7 squaring unordered', 'V4 companion of 1+x+x^2',
    'C3^2 companion of 1+x+x^2', 'D_1,GF(4) Frobenius', 'D_1,GF(9) Frobenius', 'PSL(2,4) Frobenius',
    'S4 identity', 'C2^3 shift', 'A5 identity', 'S3 identity', 'D8 from generators', 'Z3 inversion',
    'PSL(2,6) is not a group',
])
def test_builtin_entry_meets_its_expectation(label):
    record = verify_entry(by_label(label))
    assert record.matches_expectation, record.mismatches
    assert not record.violations


@pytest.mark.slow
@pytest.mark.parametrize('label', SLOW_LABELS)
def test_large_builtin_entry_meets_its_expectation(label):
    record = verify_entry(by_label(label))
    assert record.matches_expectation, record.mismatches
    assert not record.violations


@pytest.mark.slow
def test_builtin_run_succeeds():
    run = run_catalog(builtin_catalog())
    assert run.exit_code == 0
    assert run.summary() == {'pass': 12, 'hypothesis-failure': 4, 'resolution-error': 1}


def test_main_checks_of_s4():
    record = verify_entry(by_label('S4 identity'))
    assert record.status == 'pass'
    assert record.hypotheses_pass
    assert record.check('h(R) <= B1(d,h(C))').outcome == 'pass'
    assert record.check('h(C) <= m').outcome == 'pass'
    assert record.check('h(R) <= B1(d,m)').detail == '3 <= 34'
    assert record.check('|G/R| <= B2(d,m)').outcome == 'pass'
    assert record.bounds['B1(d,m)'] == '34'
    assert record.bounds['B1(d,h(C))'] == '13'
    # f = x - 1 vanishes at 1
    assert record.check('h(G) <= 8deg(f)+2|f(1)|+2').outcome == 'skipped'
    assert record.check('h(G) <= 2k(A)+h(C)').outcome == 'pass'
    assert record.check("F = meet of O_q',q").outcome == 'pass'
    with pytest.raises(KeyError):
        record.check('no such check')


def test_fixed_point_free_entry():
    record = verify_entry(by_label('C7 squaring'))
    assert record.bounds['corollary'] == '12'
    assert record.check('h(G) <= 8deg(f)+2|f(1)|+2').detail == '1 <= 12'
    assert record.check('m = 1 => G soluble').outcome == 'pass'
    assert record.check('exp(C) | f(1)').outcome == 'pass'
    assert record.check('q=7: |phi_H| <= (2d)^(2d)').outcome == 'pass'
    assert record.check('C_R(phi|R) = C_G(phi) & R').outcome == 'pass'


def test_unordered_entry_skips_the_corollary():
    record = verify_entry(by_label('C7 squaring unordered'))
    assert not record.ordered
    assert record.identity == [[1, 1], [0, -2]]
    assert record.check('h(G) <= 8deg(f)+2|f(1)|+2').detail == 'unordered identity'


def test_non_soluble_fixed_points():
    record = verify_entry(by_label('A5 identity'))
    assert record.status == 'pass'
    assert record.invariants['h_C'] is None
    assert record.flags
    assert record.check('h(R) <= B1(d,h(C))').outcome == 'skipped'
    assert record.check('|phi| <= d').outcome == 'pass'
    assert record.check('|G| <= B3(d,m)').outcome == 'pass'
    assert record.to_json()['invariants']['h_C'] is None


def test_shifted_power_partial_sums():
    record = verify_entry(by_label('C2^3 shift'))
    for j in range(3):
        assert record.check(f"f_{{3,{j}}} is an identity of phi^3").outcome == 'pass'
    assert record.check('some f_{n,j} primitive').detail == 'j = 0'


def test_hypothesis_failure_has_no_main_checks():
    record = verify_entry(by_label('C3^2 companion of 1+x+x^2'))
    assert record.status == 'hypothesis-failure'
    assert not record.hypotheses['coprime']['holds']
    assert record.hypotheses['coprime']['reason']
    assert record.checks == []
    assert [c.name for c in record.addenda] == ["F = meet of O_q',q"]


def test_unsatisfied_identity_is_a_hypothesis_failure():
    record = verify_entry(make_entry(group={'stock': 'S3'}, identity={'ordered': [-2, 1]}))
    assert record.status == 'hypothesis-failure'
    assert not record.hypotheses['satisfied']['holds']
    assert record.hypotheses['satisfied']['reason'].startswith('identity fails at g = ')


def test_non_primitive_identity_is_a_hypothesis_failure():
    record = verify_entry(make_entry(group={'stock': 'S3'}, identity={'exponent': 6}))
    assert not record.hypotheses['primitive']['holds']
    assert record.status == 'hypothesis-failure'


def test_failed_inequality_is_a_violation(monkeypatch):
    monkeypatch.setattr(verification, 'b1', lambda d, m: -1)
    record = verify_entry(make_entry(group={'stock': 'S3'}))
    assert record.status == 'violation'
    assert 'h(R) <= B1(d,m)' in [c.name for c in record.violations]
    run = verification.CatalogRun([record])
    assert run.exit_code == 1


def test_regression_mismatch():
    record = verify_entry(make_entry(group={'stock': 'S3'}, expect={'regression': {'h_R': 3, 'lucky': 7}}))
    assert record.status == 'pass'
    assert "h_R = 2, expected 3" in record.mismatches
    assert "unknown regression value 'lucky'" in record.mismatches
    assert run_catalog([make_entry(group={'stock': 'S3'}, expect={'regression': {'h_R': 3}})]).exit_code == 1


def test_unexpected_resolution_error():
    record = verify_entry(make_entry(group={'psl2': 6}))
    assert record.status == 'resolution-error'
    assert record.error
    assert run_catalog([make_entry(group={'psl2': 6})]).exit_code == 2
    expected = make_entry(group={'psl2': 6}, expect={'status': 'resolution-error'})
    assert run_catalog([expected]).exit_code == 0


def test_check_constructors():
    assert Check.compare('a', True, '').outcome == 'pass'
    assert Check.compare('a', False, '').outcome == 'fail'
    assert Check.skip('a', 'why').to_json() == {'name': 'a', 'outcome': 'skipped', 'detail': 'why'}


def test_concurrent_run_keeps_the_order():
    entries = fast_builtin()
    run = run_catalog(entries, workers=3)
    assert [r.label for r in run.records] == [e.label for e in entries]
    assert run.exit_code == 0


def test_reports_are_deterministic(tmp_path):
    first = run_catalog(fast_builtin())
    second = run_catalog(fast_builtin())
    assert write_report(first, timing=False) == write_report(second, timing=False)
    write_report(first, str(tmp_path / 'first.json'))
    write_report(second, str(tmp_path / 'second.json'))
    assert strip_timing(read_report(str(tmp_path / 'first.json'))) == \
        strip_timing(read_report(str(tmp_path / 'second.json')))


def test_json_report(tmp_path):
    run = run_catalog([by_label('S3 identity'), by_label('PSL(2,6) is not a group')])
    report = json.loads(write_report(run, str(tmp_path / 'report.json')))
    assert report == read_report(str(tmp_path / 'report.json'))
    assert report['summary'] == {'exit_code': 0, 'statuses': {'pass': 1, 'resolution-error': 1}, 'entries': 2}
    s3 = report['records'][0]
    assert s3['invariants']['h_R'] == '2'
    assert 'seconds' in s3
    assert 'seconds' not in strip_timing(report)['records'][0]


def test_csv_report():
    run = run_catalog([by_label('S3 identity'), by_label('A5 identity')])
    rows = list(csv.DictReader(io.StringIO(write_report(run, fmt='csv', timing=False))))
    assert [row['label'] for row in rows] == ['S3 identity', 'A5 identity']
    assert rows[0]['h_R'] == '2'
    assert rows[1]['h_C'] == ''
    assert rows[0]['h(R) <= B1(d,m)'] == 'pass'
    assert 'seconds' not in rows[0]


def test_unknown_report_format():
    with pytest.raises(ValueError):
        write_report(run_catalog([]), fmt='xml')


def test_cap_exceeded_while_verifying_is_a_resolution_error():
    # S4/V4 has order 6, over a cap of 4
    with override(cayley_cap=4):
        run = run_catalog([make_entry(group={'stock': 'S4'}), by_label('trivial')], workers=2)
    s4, trivial = run.records
    assert s4.status == 'resolution-error'
    assert 'exceeds the cayley cap 4' in s4.error
    assert trivial.matches_expectation
    assert run.exit_code == 2


@pytest.mark.slow
def test_large_quotient_is_a_resolution_error():
    product = make_entry(group={'product': [{'stock': 'A5'}, {'stock': 'A5'}, {'stock': 'C2'}]},
                         automorphism='identity', identity={'order': 1})
    run = run_catalog([product], workers=1)
    assert run.records[0].status == 'resolution-error'
    assert 'cayley cap' in run.records[0].error
    assert run.exit_code == 2


def test_failed_cross_check_is_a_violation(monkeypatch):
    def broken(resolved):
        raise ImplementationError('cross-check failed')

    monkeypatch.setattr(verification, 'verify_corollary', broken)
    record = verify_entry(by_label('C7 squaring'))
    assert record.status == 'violation'
    assert record.error == 'cross-check failed'
    assert run_catalog([by_label('C7 squaring')]).exit_code == 1
