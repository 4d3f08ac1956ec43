"""
Plucker - Polynomials in q
Exact dense polynomials with arbitrary-precision integer coefficients,
plus the q-analog constructors (quantum integers, q-factorials, Gaussian
polynomials) the plucking computations are built from.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from utils.errors import DivideByZeroError, NotDivisibleError
from utils.helpers import parse_int_list


@dataclass(frozen=True)
class QPolynomial:
    """
    Polynomial in one variable q

    coeffs[i] is the coefficient of q^i. Trailing zeros are trimmed on
    construction, so the empty tuple is the zero polynomial and equality
    is plain tuple equality.
    """
    coeffs: tuple = ()

    def __post_init__(self):
        try:
            coeffs = tuple(operator.index(c) for c in self.coeffs)
        except TypeError:
            raise ValueError(f'coefficients must be integers, got {self.coeffs!r}') from None
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, 'coeffs', coeffs[:end])

    # ------------------------------------------------------------------
    # Shape
    # ------------------------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Highest exponent with a nonzero coefficient (-1 for zero)"""
        return len(self.coeffs) - 1

    @property
    def low_degree(self):
        """Smallest exponent with a nonzero coefficient (-1 for zero)"""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def coefficient(self, i):
        """Coefficient of q^i, 0 outside the stored range"""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def support(self):
        """Coefficients from low_degree to degree, internal zeros included"""
        if self.is_zero:
            return ()
        return self.coeffs[self.low_degree:]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        return poly_mul(self, other)

    def shift(self, m):
        """Multiply by q^m (m >= 0)"""
        if self.is_zero or m == 0:
            return self
        return QPolynomial((0,) * m + self.coeffs)

    def evaluate(self, x):
        """Exact value at an integer point (Horner)"""
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    # ------------------------------------------------------------------
    # Text and JSON forms
    # ------------------------------------------------------------------

    def to_text(self):
        """Render as `c0 + c1*q + c2*q^2 + ...`, `0` for the zero polynomial"""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                power = 'q' if i == 1 else f'q^{i}'
                body = power if abs(c) == 1 else f'{abs(c)}*{power}'
            if not terms:
                terms.append(f'-{body}' if c < 0 else body)
            else:
                terms.append(f'- {body}' if c < 0 else f'+ {body}')
        return ' '.join(terms) if terms else '0'

    def to_dict(self):
        """JSON form: coeffs[0] is the coefficient of q^low"""
        if self.is_zero:
            return {'low': 0, 'coeffs': []}
        low = self.low_degree
        return {'low': low, 'coeffs': list(self.coeffs[low:])}

    @classmethod
    def from_dict(cls, data):
        low = operator.index(data['low'])
        if low < 0:
            raise ValueError(f'low degree must be >= 0, got {low}')
        return cls((0,) * low + tuple(data['coeffs']))

    def __str__(self):
        return self.to_text()


ZERO = QPolynomial()
ONE = QPolynomial((1,))


def parse_coefficients(text):
    """
    Parse a CLI coefficient list ascending from q^0, e.g. "0,0,1,4,5,4,5,4,1"

    Raises:
        ValueError on empty or malformed input
    """
    return QPolynomial(parse_int_list(text, name='coefficient list'))


def monomial(m, c=1):
    """c * q^m"""
    return QPolynomial((0,) * m + (c,))


def poly_add(a, b):
    """Coefficientwise sum"""
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    summed = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        summed[i] += c
    return QPolynomial(summed)


def poly_sub(a, b):
    return poly_add(a, -b)


def poly_mul(a, b):
    """Exact convolution product"""
    if a.is_zero or b.is_zero:
        return ZERO
    product = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            product[i + j] += x * y
    return QPolynomial(product)


def poly_product(polys: Iterable[QPolynomial]):
    """Product of a sequence of polynomials (ONE when empty)"""
    result = ONE
    for p in polys:
        result = poly_mul(result, p)
    return result


def exact_divide(p, d):
    """
    Integer long division from the top coefficient

    Args:
        p: Dividend
        d: Divisor, nonzero

    Returns:
        Quotient q with q * d == p

    Raises:
        DivideByZeroError: d is the zero polynomial
        NotDivisibleError: a coefficient division is inexact or a remainder survives
    """
    if d.is_zero:
        raise DivideByZeroError('division by the zero polynomial')
    if p.is_zero:
        return ZERO
    if p.degree < d.degree:
        raise NotDivisibleError(f'{d} does not divide {p}')

    remainder = list(p.coeffs)
    lead = d.coeffs[-1]
    dd = d.degree
    quotient = [0] * (p.degree - dd + 1)
    for i in range(len(quotient) - 1, -1, -1):
        top = remainder[i + dd]
        if top % lead:
            raise NotDivisibleError(f'{d} does not divide {p}')
        factor = top // lead
        quotient[i] = factor
        if factor:
            for j, c in enumerate(d.coeffs):
                remainder[i + j] -= factor * c
    if any(remainder[:dd]):
        raise NotDivisibleError(f'{d} does not divide {p}')
    return QPolynomial(quotient)


# ============================================================================
# q-analogs
# ============================================================================

@lru_cache(maxsize=None)
def quantum_integer(n):
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q is the empty sum"""
    if n < 0:
        raise ValueError(f'quantum integer needs n >= 0, got {n}')
    return QPolynomial((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n):
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1"""
    if n < 0:
        raise ValueError(f'q-factorial needs n >= 0, got {n}')
    result = ONE
    for i in range(2, n + 1):
        result = poly_mul(result, quantum_integer(i))
    return result


@lru_cache(maxsize=None)
def gaussian_binomial(n, k):
    """
    Gaussian polynomial (n choose k)_q by the Pascal-style recursion

    binom(n, k) = binom(n-1, k-1) + q^k binom(n-1, k); zero outside 0 <= k <= n.
    """
    if n < 0:
        raise ValueError(f'Gaussian polynomial needs n >= 0, got {n}')
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    row = [ONE] + [ZERO] * k
    for _ in range(n):
        row = [ONE] + [poly_add(row[j - 1], row[j].shift(j)) for j in range(1, k + 1)]
    return row[k]


# ============================================================================
# 0/1 coefficient vectors
# ============================================================================

@dataclass(frozen=True)
class EpsVector:
    """A 0/1 vector, index 0 first"""
    bits: tuple = ()

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f'EpsVector entries must be 0 or 1: {bits}')
        object.__setattr__(self, 'bits', bits)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i):
        return self.bits[i]


def eps_poly(eps: EpsVector | Sequence[int]):
    """Sum of eps_i q^i"""
    bits = eps.bits if isinstance(eps, EpsVector) else EpsVector(tuple(eps)).bits
    return QPolynomial(bits)
