"""
Plucker - Assertion Checks
Exhaustive proposition checks, embedding invariance and the two-branch
Gaussian identity. Each check raises CounterexampleFoundError on the
first failing input and otherwise returns a ScanSummary.
"""
import random
from itertools import product

from plucking.recursion import plucking
from polynomial.qpoly import (
    eps_poly, exact_divide, gaussian_binomial, poly_mul, poly_product, q_factorial, quantum_integer,
)
from polynomial.shape import is_symmetric, is_unimodal
from search.records import ScanSummary
from trees.notation import serialize_tree
from trees.tree import canonical_key, random_embedding, random_tree, two_branch_tree
from utils.errors import CounterexampleFoundError
from utils.helpers import elapsed_ms, log, start_timer


def eps_descriptor(bits):
    return 'eps=' + ''.join(str(b) for b in bits)


def _eps_vectors(length):
    return product((0, 1), repeat=length)


def _require_positive(**params):
    for name, value in params.items():
        if value < 1:
            raise ValueError(f'{name} must be >= 1, got {value}')


def check_prop33(n_max):
    """
    For every n <= n_max and every eps of length n + 1: p(q) [n]_q is
    unimodal and its coefficients satisfy c_n - c_(n-1) = eps_n - eps_0
    """
    _require_positive(n_max=n_max)
    start = start_timer()
    total = zero = 0
    for n in range(1, n_max + 1):
        log(f"   prop33: n = {n}")
        qn = quantum_integer(n)
        for bits in _eps_vectors(n + 1):
            p = poly_mul(eps_poly(bits), qn)
            total += 1
            zero += p.is_zero
            if not is_unimodal(p):
                raise CounterexampleFoundError('prop33 unimodality', eps_descriptor(bits), p.to_text())
            step = p.coefficient(n) - p.coefficient(n - 1)
            if step != bits[n] - bits[0]:
                raise CounterexampleFoundError(
                    'prop33 peak step', eps_descriptor(bits), f'c_n - c_(n-1) = {step}'
                )
    return ScanSummary('prop33', total, zero, [], elapsed_ms(start))


def check_prop35_and_corollary(n_max):
    """
    p(q) [n+1]_q [n]_q unimodal for every eps of length n + 2, and
    p(q) [n]_q! unimodal for every symmetric eps of length n + 1, n <= n_max
    """
    _require_positive(n_max=n_max)
    start = start_timer()
    total = zero = 0
    for n in range(1, n_max + 1):
        log(f"   prop35: n = {n}")
        pair = poly_mul(quantum_integer(n + 1), quantum_integer(n))
        for bits in _eps_vectors(n + 2):
            p = poly_mul(eps_poly(bits), pair)
            total += 1
            zero += p.is_zero
            if not is_unimodal(p):
                raise CounterexampleFoundError('prop35', eps_descriptor(bits), p.to_text())

    for n in range(0, n_max + 1):
        factorial = q_factorial(n)
        for bits in _eps_vectors(n + 1):
            eps = eps_poly(bits)
            if not is_symmetric(eps):
                continue
            p = poly_mul(eps, factorial)
            total += 1
            zero += p.is_zero
            if not is_unimodal(p):
                raise CounterexampleFoundError('symmetric eps factorial', eps_descriptor(bits), p.to_text())
    return ScanSummary('prop35', total, zero, [], elapsed_ms(start))


def embedding_invariance_test(edge_max, trees, shuffles, seed):
    """
    Plucking and the canonical key agree across random re-embeddings

    Every shuffled embedding is evaluated with an embedding-exact memo so
    the r-values of each embedding are really used.
    """
    _require_positive(edge_max=edge_max, trees=trees, shuffles=shuffles)
    rng = random.Random(seed)
    start = start_timer()
    total = 0
    for _ in range(trees):
        tree = random_tree(rng.randint(1, edge_max), rng)
        key = canonical_key(tree)
        expected = plucking(tree, canonical=False)
        total += 1
        for _ in range(shuffles):
            shuffled = random_embedding(tree, rng.getrandbits(32))
            total += 1
            if canonical_key(shuffled) != key:
                raise CounterexampleFoundError('canonical key', serialize_tree(shuffled))
            actual = plucking(shuffled, canonical=False)
            if actual != expected:
                raise CounterexampleFoundError(
                    'embedding invariance', serialize_tree(shuffled),
                    f'{actual.to_text()} != {expected.to_text()}',
                )
    return ScanSummary('embedding', total, 0, [], elapsed_ms(start))


def two_branch_check(a_max, b_max):
    """Q(T_{b,a}) equals the Gaussian polynomial (a+b choose a)_q"""
    _require_positive(a_max=a_max, b_max=b_max)
    start = start_timer()
    total = 0
    for a in range(1, a_max + 1):
        for b in range(1, b_max + 1):
            tree = two_branch_tree(b, a)
            actual = plucking(tree)
            total += 1
            if actual != gaussian_binomial(a + b, a):
                raise CounterexampleFoundError('two-branch', serialize_tree(tree), f'a={a} b={b}')
    return ScanSummary('two-branch', total, 0, [], elapsed_ms(start))


def check_gaussian_identities(n_max):
    """
    (n choose k)_q equals [n]_q! / ([k]_q! [n-k]_q!) and (n choose n-k)_q,
    and is symmetric, for 0 <= k <= n <= n_max
    """
    start = start_timer()
    total = 0
    for n in range(n_max + 1):
        for k in range(n + 1):
            binom = gaussian_binomial(n, k)
            total += 1
            ratio = exact_divide(q_factorial(n), poly_product((q_factorial(k), q_factorial(n - k))))
            if binom != ratio:
                raise CounterexampleFoundError('gaussian factorial ratio', f'n={n} k={k}')
            if binom != gaussian_binomial(n, n - k) or not is_symmetric(binom):
                raise CounterexampleFoundError('gaussian symmetry', f'n={n} k={k}')
    return ScanSummary('gaussian', total, 0, [], elapsed_ms(start))
