"""
Plucker - Command Line Application
Plucking polynomials of plane rooted trees: compute, closed forms,
predicates, factoring, scans and the verification suites
Version: 1.0.0
"""
import functools
import json

import click

from config import Config
from plucking.formulas import (
    delays_to_eps, family_1_4k_1, family_1a3k1b, family_delays,
    hedgehog_anti_unimodal, hedgehog_delay12,
)
from plucking.recursion import plucking, plucking_delay
from polynomial.factor import factor_quantum
from polynomial.qpoly import parse_coefficients
from polynomial.shape import is_strictly_unimodal, is_symmetric, is_unimodal
from search.report import summary_json, write_report
from search.scanner import (
    anti_unimodal_records, general_tree_records, hedgehog_polynomial, scan_hedgehog_delays,
)
from search.suites import SUITE_NAMES, SuiteOptions, run_suite
from trees.notation import parse_delayed_tree, parse_hedgehog_shorthand, parse_tree
from utils.errors import CounterexampleFoundError, FormulaMismatchError, PluckerError
from utils.helpers import format_bool, log, parse_int_list, set_verbose


# ============================================================================
# HELPERS
# ============================================================================

def handle_errors(func):
    """Map library errors to exit codes: findings 1, bad input 2"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (FormulaMismatchError, CounterexampleFoundError) as e:
            click.echo(f'error: {e}', err=True)
            raise SystemExit(1)
        except (PluckerError, ValueError) as e:
            click.echo(f'error: {e}', err=True)
            raise SystemExit(2)
    return wrapper


def read_inputs(tree, path):
    """The single --tree value, or every non-blank, non-comment line of --file"""
    if (tree is None) == (path is None):
        raise click.UsageError('give exactly one of --tree or --file')
    if tree is not None:
        return [tree]
    with open(path, encoding='utf-8') as handle:
        lines = [line.strip() for line in handle]
    return [line for line in lines if line and not line.startswith('#')]


def emit_polynomial(poly, output):
    if output == 'json':
        click.echo(json.dumps(poly.to_dict()))
    else:
        click.echo(poly.to_text())


output_option = click.option(
    '--output', type=click.Choice(Config.OUTPUT_MODES), default='text', show_default=True,
    help='Render results as text or JSON',
)


# ============================================================================
# COMMAND GROUP
# ============================================================================

@click.group()
@click.option('--verbose', is_flag=True, help='Progress lines on stderr')
def cli(verbose):
    """Plucking polynomials of plane rooted trees"""
    if verbose:
        set_verbose(True)


# ============================================================================
# COMMANDS - Single Computations
# ============================================================================

@cli.command()
@click.option('--tree', help='Plain notation, e.g. "(()(()()))"')
@click.option('--file', 'path', type=click.Path(exists=True, dir_okay=False), help='One tree per line')
@output_option
@handle_errors
def compute(tree, path, output):
    """Plucking polynomial Q(T)"""
    for text in read_inputs(tree, path):
        emit_polynomial(plucking(parse_tree(text)), output)


@cli.command()
@click.option('--tree', help='Delayed notation, e.g. "(2((3))1)"')
@click.option('--hedgehog', 'shorthand', help='Hedgehog delays, e.g. 32123 or "1^2 4^2 1^2"')
@click.option('--file', 'path', type=click.Path(exists=True, dir_okay=False), help='One delayed tree per line')
@output_option
@handle_errors
def delay(tree, shorthand, path, output):
    """Plucking polynomial with a delay function Q(T, f)"""
    if shorthand is not None:
        if tree is not None or path is not None:
            raise click.UsageError('--hedgehog cannot be combined with --tree or --file')
        emit_polynomial(hedgehog_polynomial(parse_hedgehog_shorthand(shorthand)), output)
        return
    for text in read_inputs(tree, path):
        emit_polynomial(plucking_delay(*parse_delayed_tree(text)), output)


def _require(name, value):
    if value is None:
        raise click.UsageError(f'--{name} is required for this family')
    return value


@cli.command('closed-form')
@click.option('--family', required=True, type=click.Choice(['anti-unimodal', 'delay12', '14k1', '1a3k1b']))
@click.option('--delays', help='Hedgehog delays for anti-unimodal / delay12')
@click.option('--k', type=click.IntRange(min=1))
@click.option('--a', type=click.IntRange(min=1))
@click.option('--b', type=click.IntRange(min=1))
@click.option('--cross-check', is_flag=True, help='Also run the recursion; exit 1 on disagreement')
@output_option
@handle_errors
def closed_form(family, delays, k, a, b, cross_check, output):
    """Evaluate a hedgehog closed form"""
    if family in ('anti-unimodal', 'delay12'):
        sequence = parse_hedgehog_shorthand(_require('delays', delays))
        if family == 'anti-unimodal':
            poly = hedgehog_anti_unimodal(sequence)
        else:
            poly = hedgehog_delay12(delays_to_eps(sequence))
    elif family == '14k1':
        sequence = family_delays('14k1', k=_require('k', k))
        poly = family_1_4k_1(k)
    else:
        sequence = family_delays('1a3k1b', a=_require('a', a), k=_require('k', k), b=_require('b', b))
        poly = family_1a3k1b(a, k, b)

    if cross_check:
        log(f"🔄 Cross-checking against the recursion on {len(sequence)} leaves")
        recursion = hedgehog_polynomial(sequence)
        if recursion != poly:
            raise FormulaMismatchError(family, recursion, poly)
        log("✅ Closed form matches the recursion")
    emit_polynomial(poly, output)


@cli.command()
@click.option('--poly', required=True, help='Coefficients ascending from q^0, e.g. 1,2,2,1')
@output_option
@handle_errors
def check(poly, output):
    """Unimodality and symmetry verdicts for a coefficient list"""
    p = parse_coefficients(poly)
    verdicts = {
        'unimodal': is_unimodal(p),
        'strictly_unimodal': is_strictly_unimodal(p),
        'symmetric': is_symmetric(p),
    }
    if output == 'json':
        click.echo(json.dumps(verdicts))
    else:
        click.echo(' '.join(f'{name}={format_bool(value)}' for name, value in verdicts.items()))


@cli.command()
@click.option('--poly', required=True, help='Coefficients ascending from q^0')
@output_option
@handle_errors
def factor(poly, output):
    """Pull out q^m and quantum-integer factors"""
    factored = factor_quantum(parse_coefficients(poly))
    if output == 'json':
        click.echo(json.dumps(factored.to_dict()))
    else:
        click.echo(factored.to_text())


# ============================================================================
# COMMANDS - Scans and Suites
# ============================================================================

def _write(records, out, fmt):
    if out:
        write_report(records, out, fmt)
        log(f"   Wrote {len(records)} records to {out} ({fmt})")


@cli.command()
@click.option('--kind', type=click.Choice(['hedgehog', 'anti-unimodal', 'general-trees']),
              default='hedgehog', show_default=True)
@click.option('--min-leaves', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('--max-leaves', type=click.IntRange(min=1), default=Config.CONJECTURE_MAX_LEAVES, show_default=True,
              help='Leaf bound (edge bound for general-trees)')
@click.option('--values', default='1,2', show_default=True, help='Delay values for hedgehog scans')
@click.option('--max-value', type=click.IntRange(min=1), default=Config.ANTI_UNIMODAL_MAX_VALUE, show_default=True)
@click.option('--samples', type=click.IntRange(min=1), default=Config.GENERAL_TREE_SAMPLES, show_default=True)
@click.option('--seed', type=int, default=Config.DEFAULT_SEED, show_default=True)
@click.option('--jobs', type=click.IntRange(min=1), default=Config.JOBS, show_default=True)
@click.option('--limit', type=click.IntRange(min=0), default=Config.RECORD_LIMIT, show_default=True,
              help='Refuse scans above this many records (0 = unlimited)')
@click.option('--out', type=click.Path(dir_okay=False, writable=True), help='Report file')
@click.option('--format', 'fmt', type=click.Choice(Config.REPORT_FORMATS), default=Config.REPORT_FORMAT,
              show_default=True)
@click.option('--timing', is_flag=True, help='Include elapsed_ms in the summary')
@handle_errors
def scan(kind, min_leaves, max_leaves, values, max_value, samples, seed, jobs, limit, out, fmt, timing):
    """Scan delay assignments; exit 1 when a non-unimodal record is found"""
    if kind == 'hedgehog':
        records, summary = scan_hedgehog_delays(
            min_leaves, max_leaves, parse_int_list(values, name='--values'), limit=limit, jobs=jobs
        )
    elif kind == 'anti-unimodal':
        records, summary = anti_unimodal_records(max_leaves, max_value, jobs=jobs)
    else:
        records, summary = general_tree_records(max_leaves, max_value, seed, samples)

    _write(records, out, fmt)
    click.echo(summary_json(summary.to_dict(include_elapsed=timing)))
    if summary.non_unimodal:
        raise SystemExit(1)


@cli.command()
@click.option('--suite', required=True, type=click.Choice(SUITE_NAMES))
@click.option('--max-leaves', type=click.IntRange(min=1),
              help='Leaf bound for conjecture12, prop33, prop35 and anti-unimodal; other suites run at fixed bounds')
@click.option('--k-max', type=click.IntRange(min=1), help='Largest k for 14k1 (beyond 10 is informational)')
@click.option('--seed', type=int, default=Config.DEFAULT_SEED, show_default=True)
@click.option('--jobs', type=click.IntRange(min=1), default=Config.JOBS, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False, writable=True), help='Report file for suites that scan')
@click.option('--format', 'fmt', type=click.Choice(Config.REPORT_FORMATS), default=Config.REPORT_FORMAT,
              show_default=True)
@click.option('--timing', is_flag=True, help='Include elapsed_ms in the summary')
@handle_errors
def verify(suite, max_leaves, k_max, seed, jobs, out, fmt, timing):
    """Run a verification suite; exit 1 when any assertion fails"""
    options = SuiteOptions(max_leaves=max_leaves, k_max=k_max, seed=seed, jobs=jobs)
    results, records = run_suite(suite, options)
    _write(records, out, fmt)

    success = all(r.success for r in results)
    click.echo(summary_json({
        'suite': suite,
        'success': success,
        'results': [r.to_dict(include_elapsed=timing) for r in results],
    }))
    if not success:
        raise SystemExit(1)


# ============================================================================
# MAIN
# ============================================================================

if __name__ == '__main__':
    cli()
