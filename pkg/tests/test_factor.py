"""
Plucker - Quantum Factor Tests
"""
import pytest
from hypothesis import given

from polynomial.factor import FactoredForm, factor_quantum
from polynomial.qpoly import ONE, ZERO, QPolynomial, exact_divide, poly_mul, q_factorial, quantum_integer
from utils.errors import NotDivisibleError, ZeroPolynomialError
from tests.strategies import nonzero_polys


def P(*coeffs):
    return QPolynomial(coeffs)


def test_hedgehog_32123():
    factored = factor_quantum(P(0, 0, 0, 1, 3, 4, 3, 1))
    assert factored.shift == 3
    assert factored.multiplicities() == {3: 1, 2: 2}
    assert factored.residual == ONE
    assert factored.to_text() == 'q^3 [3]_q [2]_q^2'


def test_q_factorial_four():
    factored = factor_quantum(q_factorial(4))
    assert factored.shift == 0
    assert factored.quantum_factors == (4, 3, 2)
    assert factored.residual == ONE
    assert factored.to_text() == '[4]_q [3]_q [2]_q'


def test_no_quantum_factor():
    factored = factor_quantum(P(1, 0, 0, 0, 1))
    assert factored.quantum_factors == ()
    assert factored.residual == P(1, 0, 0, 0, 1)
    assert factored.to_text() == '(1 + q^4)'


def test_units():
    assert factor_quantum(ONE).to_text() == '1'
    assert factor_quantum(P(0, 1)).to_text() == 'q'


def test_zero_is_rejected():
    with pytest.raises(ZeroPolynomialError):
        factor_quantum(ZERO)


def test_dict_round_trip():
    factored = factor_quantum(P(0, 0, 0, 1, 3, 4, 3, 1))
    data = factored.to_dict()
    assert data == {'shift': 3, 'factors': {'3': 1, '2': 2}, 'residual': {'low': 0, 'coeffs': [1]}}
    assert FactoredForm.from_dict(data) == factored


@given(nonzero_polys(4), nonzero_polys(3))
def test_expansion_is_the_input(a, b):
    p = poly_mul(a, b)
    factored = factor_quantum(p)
    assert factored.expand() == p

    residual = factored.residual
    assert residual.coefficient(0) != 0
    for n in range(2, residual.degree + 2):
        with pytest.raises(NotDivisibleError):
            exact_divide(residual, quantum_integer(n))
