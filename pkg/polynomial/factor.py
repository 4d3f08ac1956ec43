"""
Plucker - Quantum Factor Extraction
Reports a polynomial as q^m times quantum integers times a residual
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from polynomial.qpoly import (
    QPolynomial, exact_divide, monomial, poly_mul, poly_product, quantum_integer,
)
from utils.errors import NotDivisibleError, ZeroPolynomialError


@dataclass(frozen=True)
class FactoredForm:
    """
    q^shift * prod([n]_q for n in quantum_factors) * residual

    quantum_factors is kept sorted in descending order; it is a multiset.
    """
    shift: int
    quantum_factors: tuple
    residual: QPolynomial

    def multiplicities(self):
        """Map n -> number of [n]_q factors, largest n first"""
        return dict(Counter(self.quantum_factors))

    def expand(self):
        factors = (quantum_integer(n) for n in self.quantum_factors)
        return poly_mul(monomial(self.shift), poly_mul(poly_product(factors), self.residual))

    def to_text(self):
        """Render like `q^3 [3]_q [2]_q^2`, residual last when not 1"""
        parts = []
        if self.shift == 1:
            parts.append('q')
        elif self.shift > 1:
            parts.append(f'q^{self.shift}')
        for n, count in self.multiplicities().items():
            parts.append(f'[{n}]_q' if count == 1 else f'[{n}]_q^{count}')
        if self.residual.coeffs != (1,):
            parts.append(f'({self.residual})')
        return ' '.join(parts) if parts else '1'

    def to_dict(self):
        return {
            'shift': self.shift,
            'factors': {str(n): count for n, count in self.multiplicities().items()},
            'residual': self.residual.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        factors = []
        for n, count in data['factors'].items():
            factors.extend([int(n)] * int(count))
        return cls(
            shift=int(data['shift']),
            quantum_factors=tuple(sorted(factors, reverse=True)),
            residual=QPolynomial.from_dict(data['residual']),
        )


def factor_quantum(p):
    """
    Greedy quantum-integer factorization (a reporting aid, not canonical)

    Pulls out q^low_degree, then divides by [n]_q for n from degree+1 down
    to 2, repeating each n until the division fails.

    Args:
        p: Nonzero QPolynomial

    Returns:
        FactoredForm whose expansion equals p

    Raises:
        ZeroPolynomialError when p is zero
    """
    if p.is_zero:
        raise ZeroPolynomialError('cannot factor the zero polynomial')

    shift = p.low_degree
    residual = QPolynomial(p.coeffs[shift:])
    factors = []
    for n in range(residual.degree + 1, 1, -1):
        divisor = quantum_integer(n)
        while residual.degree >= n - 1:
            try:
                residual = exact_divide(residual, divisor)
            except NotDivisibleError:
                break
            factors.append(n)
    return FactoredForm(shift=shift, quantum_factors=tuple(factors), residual=residual)
