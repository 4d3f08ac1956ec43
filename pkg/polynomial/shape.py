"""
Plucker - Coefficient Shape Predicates
Unimodality and symmetry, judged on the support window [low_degree, degree]
"""


def is_unimodal(p):
    """
    Coefficients weakly rise to a peak, then weakly fall

    Internal zeros count as coefficients. The zero polynomial is unimodal.
    """
    c = p.support()
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def is_strictly_unimodal(p):
    """
    Strict rise, a peak plateau of length 1 or 2, strict fall

    The zero polynomial is vacuously strictly unimodal.
    """
    c = p.support()
    i = 0
    while i + 1 < len(c) and c[i] < c[i + 1]:
        i += 1
    if i + 1 < len(c) and c[i] == c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] > c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def is_symmetric(p):
    """Support window reads the same in both directions"""
    c = p.support()
    return c == c[::-1]
