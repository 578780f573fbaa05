#!/usr/bin/env python3
'''
The `fitbound` command line

    fitbound verify [--catalog PATH | --builtin] [--report PATH] [--format json|csv]
    fitbound group --file F --analyze
    fitbound ddomain --p P --e E --N N [--check-axioms]
    fitbound psl2 --q Q [--frobenius K]
    fitbound frobid --p P --e E --max-degree D
    fitbound identity-search --group F --aut A --max-degree D --coeff-bound C
    fitbound view REPORT

exit codes: 0 success, 1 a failed assertion, 2 an input error

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'cli',
]

import sys
import typing
import logging

import click

from .config import load_settings, set_settings
from .errors import FitBoundError

log = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_INPUT = 2


def _input_error(message: str) -> typing.NoReturn:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT)


@click.group()
@click.option('-v', '--verbose', count=True, help='-v for info, -vv for debug output.')
@click.option('--settings', 'settings_file', type=click.Path(dir_okay=False),
              help='A YAML or JSON file overriding the default caps and budgets.')
def cli(verbose: int, settings_file: typing.Optional[str]) -> None:
    '''Fitting height and soluble radical bounds for groups with automorphisms.'''
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    if settings_file is not None:
        try:
            set_settings(load_settings(settings_file))
        except (FitBoundError, OSError) as e:
            _input_error(str(e))


@cli.command()
@click.option('--catalog', 'catalog_file', type=click.Path(dir_okay=False), help='A catalog file.')
@click.option('--builtin', is_flag=True, help='Run the builtin catalog.')
@click.option('--report', 'report_file', type=click.Path(dir_okay=False), help='Where to write the report.')
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default='json', show_default=True)
@click.option('--workers', type=int, default=None, help='Entries verified concurrently.')
def verify(catalog_file, builtin, report_file, fmt, workers) -> None:
    '''Verify every entry of a catalog.'''
    from .harness.catalog import builtin_catalog, load_catalog
    from .harness.report import write_report
    from .harness.verification import run_catalog

    if builtin == (catalog_file is not None):
        _input_error("give exactly one of --catalog and --builtin")
    try:
        entries = builtin_catalog() if builtin else load_catalog(catalog_file)
    except (FitBoundError, OSError) as e:
        _input_error(str(e))
    run = run_catalog(entries, workers)
    for record in run.records:
        marker = '' if record.matches_expectation else '  (unexpected: ' + '; '.join(record.mismatches) + ')'
        click.echo(f"{record.status:20s} {record.label}{marker}")
    click.echo(f"{len(run.records)} entries: " +
               ', '.join(f"{n} {status}" for status, n in sorted(run.summary().items())))
    if report_file is not None:
        try:
            write_report(run, report_file, fmt)
        except OSError as e:
            _input_error(str(e))
    sys.exit(run.exit_code)


@cli.command()
@click.option('--file', 'group_file', required=True, type=click.Path(dir_okay=False),
              help='A permutation generator or Cayley table file.')
@click.option('--kind', type=click.Choice(['auto', 'permutations', 'cayley']), default='auto', show_default=True)
@click.option('--analyze', is_flag=True, help='Compute R, F and the Fitting height.')
def group(group_file, kind, analyze) -> None:
    '''Read a group and print its structure.'''
    from .groups.group import is_nilpotent, is_soluble
    from .groups.parsing import load_group_file
    from .groups.structure import fitting_height, fitting_subgroup, soluble_radical

    try:
        G = load_group_file(group_file, kind)
        click.echo(f"group       : {G.name}")
        click.echo(f"order       : {G.order}")
        if not analyze:
            return
        soluble = is_soluble(G)
        click.echo(f"abelian     : {G.is_abelian()}")
        click.echo(f"nilpotent   : {is_nilpotent(G)}")
        click.echo(f"soluble     : {soluble}")
        if soluble:
            click.echo(f"h(G)        : {fitting_height(G)}")
        R = soluble_radical(G)
        click.echo(f"|R(G)|      : {R.order}")
        click.echo(f"h(R(G))     : {fitting_height(R)}")
        click.echo(f"|F(G)|      : {fitting_subgroup(G).order}")
    except (FitBoundError, OSError) as e:
        _input_error(str(e))


@cli.command()
@click.option('--p', 'p', required=True, type=int, help='The characteristic.')
@click.option('--e', 'e', default=1, show_default=True, type=int, help='q = p^e.')
@click.option('--N', 'N', default=1, show_default=True, type=int, help='The structure constant.')
@click.option('--check-axioms', is_flag=True, help='Check the group axioms on the full table.')
def ddomain(p, e, N, check_axioms) -> None:
    '''Build D_N,K over K = GF(q^2).'''
    from .groups.constructions import build_ddomain, projection_surjective

    try:
        D = build_ddomain(p, e, N, check_axioms)
    except (FitBoundError, ValueError) as err:
        _input_error(str(err))
    surjective, _ = projection_surjective(D)
    click.echo(f"group       : {D.group.name}")
    click.echo(f"order       : {D.group.order}")
    click.echo(f"q^3         : {D.q ** 3}")
    click.echo(f"axioms      : {'checked' if check_axioms else 'not checked'}")
    click.echo(f"surjective  : {surjective}")
    for k in range(1, D.K.e):
        phi = D.frobenius_action(k)
        click.echo(f"frob^{k}      : order {phi.order()}")
    if D.group.order != D.q ** 3 or not surjective:
        sys.exit(EXIT_FAILURE)


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='A prime power.')
@click.option('--frobenius', 'k', type=int, default=None, help='Also report t -> t^(p^k).')
def psl2(q, k) -> None:
    '''Build PSL(2, q) on the projective line.'''
    from .groups.automorphism import fixed_points
    from .groups.constructions import build_psl2
    from .groups.structure import is_simple

    try:
        P = build_psl2(q)
    except (FitBoundError, ValueError) as err:
        _input_error(str(err))
    G = P.group
    click.echo(f"group       : {G.name}")
    click.echo(f"order       : {G.order}")
    click.echo(f"degree      : {G.degree}")
    click.echo(f"simple      : {is_simple(G)}")
    if k is not None:
        phi = P.frobenius_action(k)
        click.echo(f"|phi|       : {phi.order()}")
        click.echo(f"|C_G(phi)|  : {fixed_points(phi).order}")


@cli.command()
@click.option('--p', 'p', required=True, type=int, help='The characteristic.')
@click.option('--e', 'e', required=True, type=int, help='K = GF(p^e).')
@click.option('--max-degree', 'max_degree', default=None, type=int,
              help='Largest Vandermonde size checked, default e.')
@click.option('--q0', 'q0', default=None, type=int, help='The Frobenius base, default p.')
def frobid(p, e, max_degree, q0) -> None:
    '''Least additive identity of t -> t^q0 and the Vandermonde criterion.'''
    from .algebra.finite_field import make_field
    from .algebra.frobenius_identity import min_primitive_identity, vandermonde_det, vanishing_criterion

    try:
        K = make_field(p, e)
        q0 = p if q0 is None else q0
        f = min_primitive_identity(K, q0, allow_trivial=True)
    except (FitBoundError, ValueError) as err:
        _input_error(str(err))
    click.echo(f"field       : GF({K.order})")
    click.echo(f"identity    : {f.to_list()}")
    click.echo(f"degree      : {f.degree}")
    agree = True
    for d in range(1, (e if max_degree is None else max_degree) + 1):
        vanishes = vandermonde_det(K, q0, d).is_zero()
        expected = vanishing_criterion(K, q0, d)
        agree = agree and vanishes == expected
        click.echo(f"det(d={d}) = 0 : {vanishes} (criterion {expected})")
    if not agree:
        sys.exit(EXIT_FAILURE)


@cli.command('identity-search')
@click.option('--group', 'group_file', required=True, type=click.Path(dir_okay=False), help='The group file.')
@click.option('--aut', 'aut_file', required=True, type=click.Path(dir_okay=False), help='The automorphism file.')
@click.option('--max-degree', 'max_degree', default=2, show_default=True, type=int)
@click.option('--coeff-bound', 'coeff_bound', default=2, show_default=True, type=int)
def identity_search_command(group_file, aut_file, max_degree, coeff_bound) -> None:
    '''List the primitive ordered identities of an automorphism.'''
    from .groups.automorphism import read_automorphism_file
    from .groups.parsing import load_group_file
    from .harness.search import identity_search

    try:
        G = load_group_file(group_file)
        phi = read_automorphism_file(G, aut_file)
        result = identity_search(phi, max_degree, coeff_bound)
    except (FitBoundError, OSError, ValueError) as e:
        _input_error(str(e))
    for f in result.identities:
        click.echo(' '.join(str(a) for a in f.coeffs))
    click.echo(f"{len(result)} identities, {result.examined} vectors, |a_i| <= {result.bound}"
               + (', partial' if result.partial else ''))


@cli.command()
@click.argument('report_file', type=click.Path(exists=True, dir_okay=False))
def view(report_file) -> None:
    '''Open a JSON report in the report viewer (needs PyQt5).'''
    try:
        from .viewer.report_viewer import show_report
    except ImportError as e:
        _input_error(f"the viewer needs PyQt5 ({e}), install FitBound[gui]")
    sys.exit(show_report(report_file))


if __name__ == '__main__':
    cli()
