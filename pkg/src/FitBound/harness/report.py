#!/usr/bin/env python3
'''
Writing and reading verification reports

JSON reports hold `{"summary": ..., "records": [...]}` with sorted keys;
CSV reports hold one row per record with the invariants and the outcome of each
main check. Apart from the `seconds` fields both are byte-identical across runs.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'report_to_json',
    'write_report',
    'read_report',
    'strip_timing',
]

import csv
import io
import json
import typing
import logging

from .verification import CatalogRun

log = logging.getLogger(__name__)

_INVARIANTS = ('order', 'm', 'phi_order', 'd', 'R_order', 'h_R', 'h_C', 'quotient_order')


def report_to_json(run: CatalogRun, timing: bool = True) -> 'dict[str, typing.Any]':
    return {
        'summary': {'exit_code': run.exit_code, 'statuses': run.summary(), 'entries': len(run.records)},
        'records': [record.to_json(timing) for record in run.records],
    }


def _json_text(run: CatalogRun, timing: bool) -> str:
    return json.dumps(report_to_json(run, timing), indent=2, sort_keys=True) + '\n'


def _csv_text(run: CatalogRun, timing: bool) -> str:
    check_names: 'list[str]' = []
    for record in run.records:
        for check in record.checks:
            if check.name not in check_names:
                check_names.append(check.name)
    header = ['label', 'status', 'expected_status', *_INVARIANTS, *check_names, 'violations', 'mismatches']
    if timing:
        header.append('seconds')
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for record in run.records:
        outcomes = {check.name: check.outcome for check in record.checks}
        row = [record.label, record.status, record.expected_status]
        row += ['' if record.invariants.get(k) is None else str(record.invariants[k]) for k in _INVARIANTS]
        row += [outcomes.get(name, '') for name in check_names]
        row += ['; '.join(c.name for c in record.violations), '; '.join(record.mismatches)]
        if timing:
            row.append(f"{record.seconds:.4f}")
        writer.writerow(row)
    return buffer.getvalue()


def write_report(run: CatalogRun, filename: typing.Optional[str] = None,
                 fmt: str = 'json', timing: bool = True) -> str:
    '''
    render the report and write it to `filename` if given

    @parameters :
    * `run`         :   the catalog run
    * `filename`    :   (optional) where to write
    * `fmt`         :   'json' or 'csv'
    * `timing`      :   whether to include the wall times

    @returns :
    * the report text
    '''
    if fmt == 'json':
        text = _json_text(run, timing)
    elif fmt == 'csv':
        text = _csv_text(run, timing)
    else:
        raise ValueError(f"unknown report format '{fmt}'")
    if filename is not None:
        with open(filename, 'w', newline='') as f:
            f.write(text)
        log.info(f"wrote {fmt} report of {len(run.records)} records to '{filename}'")
    return text


def read_report(filename: str) -> 'dict[str, typing.Any]':
    '''load a JSON report'''
    with open(filename) as f:
        return json.load(f)


def strip_timing(report: 'dict[str, typing.Any]') -> 'dict[str, typing.Any]':
    '''a copy of a JSON report without the `seconds` fields'''
    return {
        'summary': report['summary'],
        'records': [{k: v for k, v in record.items() if k != 'seconds'} for record in report['records']],
    }
