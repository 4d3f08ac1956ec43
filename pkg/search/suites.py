"""
Plucker - Verification Suites
Named suites behind `verify --suite`. Each suite returns a SuiteResult
instead of raising, so one failing suite never hides the others.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from config import Config
from plucking.formulas import (
    family_1_4k_1, family_1a3k1b, family_delays, hedgehog_anti_unimodal,
)
from plucking.recursion import plucking, plucking_delay
from polynomial.factor import factor_quantum
from polynomial.qpoly import ONE, QPolynomial, q_factorial
from polynomial.shape import is_unimodal
from search import golden
from search.checks import (
    check_gaussian_identities, check_prop33, check_prop35_and_corollary,
    embedding_invariance_test, two_branch_check,
)
from search.records import ScanSummary
from search.scanner import (
    anti_unimodal_records, check_garstka_list, conjecture_12_records,
    hedgehog_polynomial, scan_family_1_4k_1,
)
from trees.notation import parse_delayed_tree, parse_tree
from trees.tree import LeafRef, hedgehog, leaf_r_values, remove_leaf, two_branch_tree
from utils.errors import CounterexampleFoundError, FormulaMismatchError
from utils.helpers import elapsed_ms, log, start_timer


@dataclass
class SuiteOptions:
    """Knobs shared by all suites; None means the suite's own default"""
    max_leaves: Optional[int] = None
    k_max: Optional[int] = None
    seed: int = Config.DEFAULT_SEED
    jobs: int = 1


@dataclass
class SuiteResult:
    name: str
    success: bool
    summary: Optional[ScanSummary] = None
    details: list = field(default_factory=list)
    error: Optional[str] = None

    def to_dict(self, include_elapsed=False):
        """Convert to dictionary for JSON serialization"""
        return {
            'name': self.name,
            'success': self.success,
            'summary': self.summary.to_dict(include_elapsed) if self.summary else None,
            'details': self.details,
            'error': self.error,
        }


def _poly(reference):
    low, coeffs = reference
    return QPolynomial.from_dict({'low': low, 'coeffs': coeffs})


def _summary_suite(name, summary):
    return SuiteResult(name, not summary.non_unimodal, summary)


# ============================================================================
# Individual suites
# ============================================================================

def suite_conjecture12(options):
    n_max = options.max_leaves or Config.CONJECTURE_MAX_LEAVES
    records, summary = conjecture_12_records(n_max, jobs=options.jobs)
    return _summary_suite('conjecture12', summary), records


def suite_prop33(options):
    # eps of length n + 1 is the {1,2} hedgehog with n + 1 leaves
    n_max = options.max_leaves - 1 if options.max_leaves else Config.PROP33_MAX_N
    return _summary_suite('prop33', check_prop33(n_max)), []


def suite_prop35(options):
    n_max = options.max_leaves - 2 if options.max_leaves else Config.PROP35_MAX_N
    return _summary_suite('prop35', check_prop35_and_corollary(n_max)), []


def suite_garstka(options):
    details = []
    success = True
    for descriptor, unimodal in check_garstka_list():
        expected = golden.GARSTKA_VERDICTS[descriptor]
        success = success and unimodal == expected
        details.append({'descriptor': descriptor, 'unimodal': unimodal, 'expected': expected})

    poly = hedgehog_polynomial((2, 1, 4, 1, 2))
    if poly != _poly(golden.GARSTKA_21412_POLY):
        success = False
        details.append({'descriptor': '21412', 'polynomial': poly.to_dict(), 'expected': 'golden'})
    return SuiteResult('garstka', success, details=details), []


def suite_14k1(options):
    """Verdicts for k <= 10 are asserted; larger k are reported as informational rows"""
    k_max = options.k_max or Config.FAMILY_K_MAX
    details = []
    success = True
    for k, unimodal in scan_family_1_4k_1(k_max):
        expected = golden.FAMILY_1_4K_1_UNIMODAL.get(k)
        if expected is not None:
            success = success and unimodal == expected
        details.append({'k': k, 'unimodal': unimodal, 'expected': expected})
    return SuiteResult('14k1', success, details=details), []


def suite_anti_unimodal(options):
    n_max = options.max_leaves or Config.ANTI_UNIMODAL_MAX_LEAVES
    records, summary = anti_unimodal_records(n_max, Config.ANTI_UNIMODAL_MAX_VALUE, jobs=options.jobs)
    return _summary_suite('anti-unimodal', summary), records


def check_family_1a3k1b(bound):
    """Closed form against recursion for a, k, b in 1..bound"""
    start = start_timer()
    total = 0
    for a, k, b in product(range(1, bound + 1), repeat=3):
        delays = family_delays('1a3k1b', a=a, k=k, b=b)
        expected = hedgehog_polynomial(delays)
        actual = family_1a3k1b(a, k, b)
        total += 1
        if expected != actual:
            raise FormulaMismatchError(f'1^{a} 3^{k} 1^{b}', expected, actual)
    return ScanSummary('1a3k1b', total, 0, [], elapsed_ms(start))


def suite_1a3k1b(options):
    return _summary_suite('1a3k1b', check_family_1a3k1b(golden.FAMILY_1A3K1B_MAX)), []


def suite_embedding(options):
    summary = embedding_invariance_test(
        Config.EMBEDDING_MAX_EDGES, Config.EMBEDDING_TREES, Config.EMBEDDING_SHUFFLES, options.seed
    )
    return _summary_suite('embedding', summary), []


def suite_two_branch(options):
    (b, a), anchor = golden.TWO_BRANCH_ANCHOR
    if plucking(two_branch_tree(b, a)) != _poly(anchor):
        raise CounterexampleFoundError('two-branch anchor', f'T_{{{b},{a}}}')
    summary = two_branch_check(Config.TWO_BRANCH_MAX, Config.TWO_BRANCH_MAX)
    return _summary_suite('two-branch', summary), []


def golden_checks():
    """(label, passed) for every printed reference value"""
    checks = []

    tree = parse_tree(golden.EXAMPLE_TREE)
    checks.append(('example tree polynomial', plucking(tree) == _poly(golden.EXAMPLE_TREE_POLY)))
    checks.append(('example tree r-values', tuple(leaf_r_values(tree)) == golden.EXAMPLE_TREE_R_VALUES))
    checks.append((
        'example tree minus first leaf',
        plucking(remove_leaf(tree, LeafRef(0))) == _poly(golden.EXAMPLE_TREE_MINUS_FIRST),
    ))
    checks.append((
        'example tree minus last leaf',
        plucking(remove_leaf(tree, LeafRef(2))) == _poly(golden.EXAMPLE_TREE_MINUS_LAST),
    ))

    delayed, assignment = parse_delayed_tree(golden.DELAYED_EXAMPLE)
    checks.append(('delayed example', plucking_delay(delayed, assignment) == _poly(golden.DELAYED_EXAMPLE_POLY)))

    for n in range(golden.HEDGEHOG_FACTORIAL_MAX + 1):
        plain, _ = hedgehog((1,) * n)
        checks.append((f'hedgehog {n} is [{n}]_q!', plucking(plain) == q_factorial(n)))

    expected = _poly(golden.HEDGEHOG_32123_POLY)
    recursion = hedgehog_polynomial(golden.HEDGEHOG_32123)
    factored = factor_quantum(recursion)
    checks.append(('hedgehog 32123 recursion', recursion == expected))
    checks.append(('hedgehog 32123 closed form', hedgehog_anti_unimodal(golden.HEDGEHOG_32123) == expected))
    checks.append((
        'hedgehog 32123 factors',
        factored.shift == golden.HEDGEHOG_32123_SHIFT
        and factored.multiplicities() == golden.HEDGEHOG_32123_FACTORS
        and factored.residual == ONE,
    ))

    for k, reference in golden.FAMILY_1_4K_1_TABLES.items():
        checks.append((f'1^2 4^{k} 1^2 table', family_1_4k_1(k) == _poly(reference)))
        if k <= 3:
            checks.append((
                f'1^2 4^{k} 1^2 recursion',
                hedgehog_polynomial(family_delays('14k1', k=k)) == family_1_4k_1(k),
            ))
    for k, expected_verdict in golden.FAMILY_1_4K_1_UNIMODAL.items():
        checks.append((f'1^2 4^{k} 1^2 verdict', is_unimodal(family_1_4k_1(k)) == expected_verdict))

    garstka = hedgehog_polynomial((2, 1, 4, 1, 2))
    checks.append(('21412 polynomial', garstka == _poly(golden.GARSTKA_21412_POLY)))
    for descriptor, unimodal in check_garstka_list():
        checks.append((f'{descriptor} verdict', unimodal == golden.GARSTKA_VERDICTS[descriptor]))

    check_family_1a3k1b(golden.FAMILY_1A3K1B_MAX)
    checks.append(('1^a 3^k 1^b closed form', True))

    check_gaussian_identities(12)
    checks.append(('gaussian identities', True))
    (b, a), anchor = golden.TWO_BRANCH_ANCHOR
    checks.append(('two-branch anchor', plucking(two_branch_tree(b, a)) == _poly(anchor)))
    two_branch_check(Config.TWO_BRANCH_MAX, Config.TWO_BRANCH_MAX)
    checks.append(('two-branch Gaussian identity', True))
    return checks


def suite_golden(options):
    checks = golden_checks()
    failed = [label for label, passed in checks if not passed]
    for label in failed:
        log(f"   ❌ {label}")
    details = [{'check': label, 'passed': passed} for label, passed in checks]
    return SuiteResult('golden', not failed, details=details), []


SUITES = {
    'golden': suite_golden,
    'conjecture12': suite_conjecture12,
    'prop33': suite_prop33,
    'prop35': suite_prop35,
    'garstka': suite_garstka,
    '14k1': suite_14k1,
    'anti-unimodal': suite_anti_unimodal,
    '1a3k1b': suite_1a3k1b,
    'embedding': suite_embedding,
    'two-branch': suite_two_branch,
}

SUITE_NAMES = tuple(SUITES) + ('paper-all',)

# Suites that read SuiteOptions.max_leaves; the rest run at fixed bounds
LEAF_BOUND_SUITES = ('conjecture12', 'prop33', 'prop35', 'anti-unimodal')


# ============================================================================
# Runner
# ============================================================================

def run_suite(name, options=None):
    """
    Run one named suite, or every suite for 'paper-all'

    Returns:
        (list of SuiteResult, list of ScanRecord produced along the way)

    Raises:
        ValueError for an unknown suite name, or a leaf bound given to a
        single suite that runs at fixed bounds
    """
    options = options or SuiteOptions()
    if name == 'paper-all':
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f'unknown suite {name!r}')
    if options.max_leaves is not None and name not in LEAF_BOUND_SUITES + ('paper-all',):
        raise ValueError(f'suite {name} takes no leaf bound; only {", ".join(LEAF_BOUND_SUITES)} do')

    results, records = [], []
    for suite_name in names:
        log(f"🔄 Suite {suite_name}")
        try:
            result, produced = SUITES[suite_name](options)
        except (FormulaMismatchError, CounterexampleFoundError) as e:
            log(f"❌ Suite {suite_name} failed: {e}")
            results.append(SuiteResult(suite_name, False, error=str(e)))
            continue
        if result.success:
            log(f"✅ Suite {suite_name} passed")
        else:
            log(f"⚠️  Suite {suite_name} reported findings")
        results.append(result)
        records.extend(produced)
    return results, records
