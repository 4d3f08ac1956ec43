"""
Plucker - Closed Forms
Closed-form plucking polynomials for hedgehog families
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from polynomial.qpoly import (
    ONE, ZERO, eps_poly, monomial, poly_add, poly_mul, poly_product,
    q_factorial, quantum_integer,
)
from trees.tree import hedgehog
from utils.errors import NotAntiUnimodalError


def is_anti_unimodal(values):
    """Weakly decreasing, then weakly increasing"""
    i = 0
    while i + 1 < len(values) and values[i] >= values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    return i + 1 >= len(values)


@dataclass(frozen=True)
class DelayedHedgehog:
    """Hedgehog with delays a_1 ... a_n on its leaves, left to right"""
    delays: tuple

    def __post_init__(self):
        delays = tuple(int(a) for a in self.delays)
        if any(a < 1 for a in delays):
            raise ValueError(f'hedgehog delays must be positive: {delays}')
        object.__setattr__(self, 'delays', delays)

    @property
    def leaf_count(self):
        return len(self.delays)

    def value_counts(self):
        """f_i: number of leaves with delay i"""
        return Counter(self.delays)

    def right_counts(self):
        """f_i+: leaves with delay i strictly right of the block of 1s"""
        if 1 not in self.delays:
            return Counter()
        last_one = len(self.delays) - 1 - self.delays[::-1].index(1)
        return Counter(self.delays[last_one + 1:])

    @property
    def outer_max(self):
        """max(a_1, a_n)"""
        if not self.delays:
            return 0
        return max(self.delays[0], self.delays[-1])

    def is_anti_unimodal(self):
        return is_anti_unimodal(self.delays)

    def tree(self):
        """(PlaneRootedTree, DelayAssignment) of this hedgehog"""
        return hedgehog(self.delays)


def hedgehog_plain(n):
    """Q of the hedgehog with n leaves: [n]_q!"""
    return q_factorial(n)


def hedgehog_anti_unimodal(h):
    """
    Closed form for an anti-unimodal delay function on a hedgehog

    q^(sum over i >= 2 of (i - 1) f_i+) times the product over j = 1..n of
    [f_1 + ... + f_j - j + 1]_q. A factor with a nonpositive argument, or no
    delay-1 leaf at all, makes the whole value 0.

    Args:
        h: DelayedHedgehog (or a delay sequence)

    Raises:
        NotAntiUnimodalError when the delays are not anti-unimodal
    """
    if not isinstance(h, DelayedHedgehog):
        h = DelayedHedgehog(tuple(h))
    if not h.is_anti_unimodal():
        raise NotAntiUnimodalError(f'delays {h.delays} are not anti-unimodal')
    if h.leaf_count == 0:
        return ONE
    if min(h.delays) > 1:
        return ZERO

    exponent = sum((i - 1) * count for i, count in h.right_counts().items() if i >= 2)
    counts = h.value_counts()
    result = monomial(exponent)
    running = 0
    for j in range(1, h.leaf_count + 1):
        running += counts.get(j, 0)
        size = running - j + 1
        if size <= 0:
            return ZERO
        result = poly_mul(result, quantum_integer(size))
    return result


def delays_to_eps(delays):
    """
    EpsVector bits of a {1, 2} delay sequence, reading leaves right to left

    eps_i is 1 when the i-th leaf from the right has delay 1.
    """
    if any(d not in (1, 2) for d in delays):
        raise ValueError(f'delays must be 1 or 2: {tuple(delays)}')
    return tuple(1 if d == 1 else 0 for d in reversed(delays))


def hedgehog_delay12(eps):
    """Q of a {1, 2}-delay hedgehog: p_n(q) [n - 1]_q!, and 1 for n = 0"""
    n = len(eps)
    if n == 0:
        return ONE
    return poly_mul(eps_poly(eps), q_factorial(n - 1))


def family_1_4k_1(k):
    """Hedgehog 1^2 4^k 1^2: q^k [k+1]_q! (1+q)^2 (1+q+q^2) (1+q^(k+2))"""
    if k < 1:
        raise ValueError(f'k must be >= 1, got {k}')
    return poly_product((
        monomial(k),
        q_factorial(k + 1),
        quantum_integer(2),
        quantum_integer(2),
        quantum_integer(3),
        poly_add(ONE, monomial(k + 2)),
    ))


def family_1a3k1b(a, k, b):
    """
    Hedgehog 1^a 3^k 1^b:

    [k+a+b-2]_q! ((q^(k+b-1) + q^(k+b)) [a][b] + q^(2k+2b) [a][a-1] + [b][b-1])

    [0]_q = 0 removes the middle summand for a = 1 and the last for b = 1.
    """
    if min(a, k, b) < 1:
        raise ValueError(f'a, k, b must be >= 1, got {(a, k, b)}')
    qa, qb = quantum_integer(a), quantum_integer(b)
    inner = poly_add(
        poly_product((poly_add(monomial(k + b - 1), monomial(k + b)), qa, qb)),
        poly_add(
            poly_product((monomial(2 * k + 2 * b), qa, quantum_integer(a - 1))),
            poly_mul(qb, quantum_integer(b - 1)),
        ),
    )
    return poly_mul(q_factorial(k + a + b - 2), inner)


def family_delays(name, **params):
    """
    Delay sequence of a named hedgehog family

    Args:
        name: '14k1' (needs k) or '1a3k1b' (needs a, k, b)
    """
    if name == '14k1':
        return (1, 1) + (4,) * params['k'] + (1, 1)
    if name == '1a3k1b':
        return (1,) * params['a'] + (3,) * params['k'] + (1,) * params['b']
    raise ValueError(f'unknown family {name!r}')
