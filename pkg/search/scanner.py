"""
Plucker - Delay Scans
Exhaustive scans over hedgehog delay assignments and the family checks
built on them
"""
import random
from itertools import product

from config import Config
from plucking.formulas import (
    delays_to_eps, family_1_4k_1, hedgehog_anti_unimodal, hedgehog_delay12, is_anti_unimodal,
)
from plucking.recursion import plucking_delay
from polynomial.shape import is_unimodal
from search.records import make_record, summarize
from search.workers import run_units
from trees.notation import parse_hedgehog_shorthand, serialize_delayed_tree
from trees.tree import hedgehog, random_tree
from utils.errors import BudgetExceededError, FormulaMismatchError
from utils.helpers import elapsed_ms, format_delays, log, start_timer

GARSTKA_DESCRIPTORS = ('21412', '214412', '1214121', '112141211', '2114112', '211141112')


def enumerate_delays(n_min, n_max, values):
    """Every delay sequence, lengths ascending, each length in lexicographic order"""
    values = sorted(set(values))
    for n in range(n_min, n_max + 1):
        yield from product(values, repeat=n)


def enumerate_anti_unimodal(n, max_value, require_one=True):
    """Anti-unimodal sequences of length n over 1..max_value, lexicographic"""
    for delays in product(range(1, max_value + 1), repeat=n):
        if require_one and 1 not in delays:
            continue
        if is_anti_unimodal(delays):
            yield delays


def hedgehog_polynomial(delays):
    """Q of the hedgehog carrying `delays`, by the delay recursion"""
    tree, assignment = hedgehog(delays)
    return plucking_delay(tree, assignment)


def _hedgehog_record(unit):
    delays, evaluator = unit
    if evaluator == 'delay12':
        poly = hedgehog_delay12(delays_to_eps(delays))
    else:
        poly = hedgehog_polynomial(delays)
    return make_record(format_delays(delays), poly)


def _anti_unimodal_unit(delays):
    return make_record(format_delays(delays), hedgehog_polynomial(delays)), hedgehog_anti_unimodal(delays)


def _canonical(units, results):
    # Lengths ascending, then lexicographic; independent of how units were scheduled
    paired = sorted(zip(units, results), key=lambda pair: (len(pair[0]), pair[0]))
    return [result for _, result in paired]


# ============================================================================
# Hedgehog delay scans
# ============================================================================

def scan_hedgehog_delays(n_min, n_max, values, limit=None, jobs=1, evaluator='recursion'):
    """
    Scan every delay sequence of each length in [n_min, n_max] over `values`

    Args:
        n_min, n_max: Leaf-count range, 1 <= n_min <= n_max
        values: Nonempty set of positive delay values
        limit: Maximum record count (None = Config.RECORD_LIMIT, 0 = unlimited)
        jobs: Worker processes
        evaluator: 'recursion' (delay recursion) or 'delay12' ({1,2} closed form)

    Returns:
        (list of ScanRecord in canonical order, ScanSummary)

    Raises:
        BudgetExceededError when the scan would exceed the record limit
    """
    values = sorted(set(values))
    if not 1 <= n_min <= n_max:
        raise ValueError(f'need 1 <= n_min <= n_max, got {n_min}..{n_max}')
    if not values or values[0] < 1:
        raise ValueError(f'delay values must be a nonempty set of positive integers: {values}')

    total = sum(len(values) ** n for n in range(n_min, n_max + 1))
    limit = Config.RECORD_LIMIT if limit is None else limit
    if limit and total > limit:
        raise BudgetExceededError(f'scan needs {total} records, limit is {limit}')

    log(f"🔄 Scanning {total} hedgehog delay assignments ({n_min}..{n_max} leaves, values {values}, {evaluator})")
    start = start_timer()
    sequences = list(enumerate_delays(n_min, n_max, values))
    results = run_units(_hedgehog_record, [(d, evaluator) for d in sequences], jobs)
    records = _canonical(sequences, results)
    summary = summarize('hedgehog-delays', records, elapsed_ms(start))
    log(f"✅ {summary.total} records, {summary.zero_count} zero, {len(summary.non_unimodal)} non-unimodal")
    return records, summary


def conjecture_12_records(n_max, jobs=1, limit=None):
    """Records and summary of the {1, 2} conjecture check (see verify_conjecture_12)"""
    records, summary = scan_hedgehog_delays(1, n_max, {1, 2}, limit=limit, jobs=jobs)
    formula, _ = scan_hedgehog_delays(1, n_max, {1, 2}, limit=limit, jobs=jobs, evaluator='delay12')
    for by_recursion, by_formula in zip(records, formula):
        if by_recursion.polynomial != by_formula.polynomial:
            raise FormulaMismatchError(
                by_recursion.input_descriptor, by_recursion.polynomial, by_formula.polynomial
            )
    summary.name = 'conjecture12'
    if summary.non_unimodal:
        log(f"⚠️  Non-unimodal {{1,2}} hedgehogs: {', '.join(summary.non_unimodal)}")
    return records, summary


def verify_conjecture_12(n_max, jobs=1, limit=None):
    """
    Scan every {1, 2} delay hedgehog up to n_max leaves twice, by the
    recursion and by the p_n(q) [n-1]_q! closed form

    Returns:
        ScanSummary; non_unimodal lists conjecture counterexamples

    Raises:
        FormulaMismatchError when the two evaluations disagree
    """
    _, summary = conjecture_12_records(n_max, jobs=jobs, limit=limit)
    return summary


# ============================================================================
# Families and listed hedgehogs
# ============================================================================

def scan_family_1_4k_1(k_max):
    """(k, unimodal) for the hedgehog 1^2 4^k 1^2, k = 1..k_max"""
    return [(k, is_unimodal(family_1_4k_1(k))) for k in range(1, k_max + 1)]


def check_garstka_list():
    """(descriptor, unimodal) for the listed hedgehog types, by the recursion"""
    return [
        (descriptor, is_unimodal(hedgehog_polynomial(parse_hedgehog_shorthand(descriptor))))
        for descriptor in GARSTKA_DESCRIPTORS
    ]


# ============================================================================
# Anti-unimodal delays
# ============================================================================

def anti_unimodal_records(n_max, max_value, jobs=1, require_one=True):
    """Records and summary of scan_anti_unimodal"""
    if n_max < 1 or max_value < 1:
        raise ValueError(f'need n_max >= 1 and max_value >= 1, got {n_max}, {max_value}')
    start = start_timer()
    sequences = [
        delays
        for n in range(1, n_max + 1)
        for delays in enumerate_anti_unimodal(n, max_value, require_one)
    ]
    log(f"🔄 Cross-checking {len(sequences)} anti-unimodal hedgehogs")
    results = _canonical(sequences, run_units(_anti_unimodal_unit, sequences, jobs))
    records = []
    for record, formula in results:
        if record.polynomial != formula:
            raise FormulaMismatchError(record.input_descriptor, record.polynomial, formula)
        records.append(record)
    summary = summarize('anti-unimodal', records, elapsed_ms(start))
    log(f"✅ {summary.total} hedgehogs, closed form matches the recursion on all of them")
    return records, summary


def scan_anti_unimodal(n_max, max_value, jobs=1, require_one=True):
    """
    Every anti-unimodal hedgehog up to n_max leaves with values <= max_value:
    closed form against recursion, plus unimodality

    Args:
        require_one: Skip sequences without a delay-1 leaf (their value is 0)

    Raises:
        FormulaMismatchError on any disagreement
    """
    _, summary = anti_unimodal_records(n_max, max_value, jobs=jobs, require_one=require_one)
    return summary


def general_tree_records(edge_max, max_value, seed, samples):
    """Records and summary of scan_general_trees_anti_unimodal"""
    if edge_max < 1:
        raise ValueError(f'edge_max must be >= 1, got {edge_max}')
    rng = random.Random(seed)
    start = start_timer()
    records = []
    for _ in range(samples):
        tree = random_tree(rng.randint(1, edge_max), rng)
        for delays in enumerate_anti_unimodal(tree.leaf_count, max_value, require_one=True):
            descriptor = serialize_delayed_tree(tree, delays)
            records.append(make_record(descriptor, plucking_delay(tree, delays)))
    summary = summarize('general-trees-anti-unimodal', records, elapsed_ms(start), exploratory=True)
    if summary.non_unimodal:
        log(f"⚠️  {len(summary.non_unimodal)} non-unimodal delayed trees (exploratory)")
    return records, summary


def scan_general_trees_anti_unimodal(edge_max, max_value, seed, samples):
    """
    Exploratory: random plane trees up to edge_max edges, every anti-unimodal
    assignment on the left-to-right leaf order; findings are reported only
    """
    _, summary = general_tree_records(edge_max, max_value, seed, samples)
    return summary
