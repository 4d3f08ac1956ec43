"""
Plucker - Reference Values
Published plucking polynomials and verdicts the golden suite reproduces.
Coefficient lists are ascending, starting at q^low.
"""

# Worked 4-edge example
EXAMPLE_TREE = '(()(()()))'
EXAMPLE_TREE_POLY = (0, [1, 2, 2, 2, 1])
EXAMPLE_TREE_R_VALUES = (3, 1, 0)
EXAMPLE_TREE_MINUS_FIRST = (0, [1, 1])
EXAMPLE_TREE_MINUS_LAST = (0, [1, 1, 1])

# Delayed example
DELAYED_EXAMPLE = '(2((3))1)'
DELAYED_EXAMPLE_POLY = (3, [1])

# Hedgehog 32123
HEDGEHOG_32123 = (3, 2, 1, 2, 3)
HEDGEHOG_32123_POLY = (3, [1, 3, 4, 3, 1])
HEDGEHOG_32123_SHIFT = 3
HEDGEHOG_32123_FACTORS = {3: 1, 2: 2}


def _mirror(half):
    return list(half) + list(reversed(half))


# Hedgehog 1^2 4^k 1^2
FAMILY_1_4K_1_TABLES = {
    2: (2, [1, 5, 12, 18, 19, 17, 17, 19, 18, 12, 5, 1]),
    3: (3, [1, 6, 18, 36, 53, 61, 59, 54, 54, 59, 61, 53, 36, 18, 6, 1]),
    4: (4, [1, 7, 25, 61, 114, 173, 221, 245, 245, 234, 228, 234, 245, 245, 221, 173, 114,
            61, 25, 7, 1]),
    5: (5, [1, 8, 33, 94, 208, 381, 600, 832, 1034, 1171, 1232, 1234, 1212, 1200, 1212, 1234,
            1232, 1171, 1034, 832, 600, 381, 208, 94, 33, 8, 1]),
    6: (6, [1, 9, 42, 136, 344, 725, 1325, 2155, 3174, 4287, 5364, 6276, 6934, 7315, 7465,
            7477, 7451, 7451, 7477, 7465, 7315, 6934, 6276, 5364, 4287, 3174, 2155, 1325, 725,
            344, 136, 42, 9, 1]),
    7: (7, _mirror([1, 10, 52, 188, 532, 1257, 2582, 4737, 7909, 12179, 17468, 23514, 29896,
                    36105, 41645, 46137, 49397, 51464, 52566, 53031, 53170])),
}

FAMILY_1_4K_1_UNIMODAL = {
    1: True, 2: False, 3: False, 4: False, 5: False,
    6: False, 7: True, 8: True, 9: True, 10: True,
}

# Hedgehog 21412 and its neighbours
GARSTKA_21412_POLY = (2, [1, 4, 5, 4, 5, 4, 1])
GARSTKA_VERDICTS = {
    '21412': False,
    '214412': False,
    '1214121': True,
    '112141211': True,
    '2114112': True,
    '211141112': True,
}

# Two-branch anchor: Q(T_{1,2}) = [3]_q
TWO_BRANCH_ANCHOR = ((1, 2), (0, [1, 1, 1]))

# Leaf bound for the plain-hedgehog identity Q = [n]_q!
HEDGEHOG_FACTORIAL_MAX = 8

# Family 1^a 3^k 1^b cross-check range
FAMILY_1A3K1B_MAX = 3
