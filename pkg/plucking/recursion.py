"""
Plucker - Plucking Recursions
Q(T) sums q^r(T,v) Q(T - v) over the leaves; Q(T, f) restricts the sum to
leaves whose delay is 1 and ages the surviving delays after every pluck.
"""
from polynomial.qpoly import ONE, ZERO, poly_add
from trees.notation import serialize_delayed_tree, serialize_tree
from trees.tree import DelayAssignment, LeafRef, leaf_r_values, remove_leaf, shape_id

# Shared memo tables. Plain Q is an invariant of the unordered tree, so its
# table is keyed on the interned shape; the delay recursion depends on leaf
# positions and is keyed on the exact delayed notation.
_PLAIN_CACHE = {}
_DELAY_CACHE = {}


def clear_caches():
    """Drop every memoized value"""
    _PLAIN_CACHE.clear()
    _DELAY_CACHE.clear()


def _evaluate(start, cache, key_of, plucks):
    """
    Memoized sum of q^r * value(rest) over plucks(state), walked with an
    explicit stack so tree depth is not bounded by the interpreter.

    A state is (tree, delays); a tree without edges has value 1 and a tree
    whose plucks come back empty has value 0.
    """
    start_key = key_of(start)
    stack = [(start_key, start, None)]
    while stack:
        key, state, terms = stack.pop()
        if key in cache:
            continue
        if terms is None:
            if state[0].edge_count == 0:
                cache[key] = ONE
                continue
            pending = [(r, key_of(rest), rest) for r, rest in plucks(state)]
            stack.append((key, None, [(r, k) for r, k, _ in pending]))
            stack.extend((k, rest, None) for _, k, rest in pending if k not in cache)
            continue
        result = ZERO
        for r, k in terms:
            result = poly_add(result, cache[k].shift(r))
        cache[key] = result
    return cache[start_key]


def _plain_plucks(state):
    tree, _ = state
    return [
        (r, (remove_leaf(tree, LeafRef(index)), None))
        for index, r in enumerate(leaf_r_values(tree))
    ]


def _delay_plucks(state):
    tree, values = state
    out = []
    for index, r in enumerate(leaf_r_values(tree)):
        if values[index] != 1:
            continue
        rest = remove_leaf(tree, LeafRef(index))
        aged = [max(1, d - 1) for j, d in enumerate(values) if j != index]
        if rest.leaf_count == tree.leaf_count:
            # the parent took the plucked leaf's place
            aged.insert(index, 1)
        out.append((r, (rest, tuple(aged))))
    return out


def plucking(tree, canonical=True):
    """
    Plucking polynomial Q(T)

    Args:
        tree: PlaneRootedTree
        canonical: Memoize on the embedding-independent shape (shared table).
            With False, a fresh table keyed on the exact embedding is used,
            so every shuffled embedding is really recomputed.

    Returns:
        QPolynomial
    """
    if canonical:
        return _evaluate((tree, None), _PLAIN_CACHE, lambda s: shape_id(s[0]), _plain_plucks)
    return _evaluate((tree, None), {}, lambda s: serialize_tree(s[0]), _plain_plucks)


def plucking_delay(tree, delays):
    """
    Plucking polynomial with delay function Q(T, f)

    Only leaves with delay 1 may be plucked. After plucking v, surviving
    leaves get max(1, f(u) - 1) and a parent that just became a leaf gets 1.
    With no pluckable leaf left on a tree that still has edges the value is 0.

    Args:
        tree: PlaneRootedTree
        delays: DelayAssignment (or sequence), one value per leaf left to right

    Raises:
        LengthMismatchError when the assignment does not fit the tree
    """
    if not isinstance(delays, DelayAssignment):
        delays = DelayAssignment(tuple(delays))
    delays.check(tree)
    return _evaluate(
        (tree, delays.values), _DELAY_CACHE, lambda s: serialize_delayed_tree(*s), _delay_plucks,
    )
