"""
Plucker - Plane Rooted Trees
Immutable trees whose child order is the plane embedding, with leaf
enumeration, right-edge counts, leaf removal and canonical keys
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from utils.errors import InvalidLeafError, LengthMismatchError, ZeroDelayError


@dataclass(frozen=True)
class Node:
    """
    A vertex with its ordered children (left to right)

    edge_count and leaf_count describe the subtree hanging from this node;
    a childless node counts as one leaf.
    """
    children: tuple = ()
    edge_count: int = field(init=False, compare=False, repr=False)
    leaf_count: int = field(init=False, compare=False, repr=False)
    _shape: int = field(init=False, compare=False, repr=False, default=None)

    def __post_init__(self):
        children = tuple(self.children)
        object.__setattr__(self, 'children', children)
        object.__setattr__(self, 'edge_count', sum(c.edge_count + 1 for c in children))
        object.__setattr__(self, 'leaf_count', sum(c.leaf_count for c in children) if children else 1)


LEAF = Node()


@dataclass(frozen=True)
class PlaneRootedTree:
    """Rooted tree embedded in the plane; the root is never a leaf"""
    root: Node = LEAF

    @property
    def edge_count(self):
        return self.root.edge_count

    @property
    def leaf_count(self):
        return self.root.leaf_count if self.root.children else 0

    def __str__(self):
        from trees.notation import serialize_tree
        return serialize_tree(self)


@dataclass(frozen=True)
class LeafRef:
    """Position of a leaf in the left-to-right leaf enumeration"""
    index: int


@dataclass(frozen=True)
class DelayAssignment:
    """Delay values, one per leaf in left-to-right order"""
    values: tuple = ()

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        for v in values:
            if v < 1:
                raise ZeroDelayError(f'delay values must be positive, got {v}')
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return len(self.values)

    def check(self, tree):
        """Raise LengthMismatchError unless there is one value per leaf"""
        if len(self.values) != tree.leaf_count:
            raise LengthMismatchError(
                f'{len(self.values)} delay values for a tree with {tree.leaf_count} leaves'
            )
        return self


# ============================================================================
# Leaves and right-edge counts
# ============================================================================

def leaves(tree):
    """All leaves, left to right"""
    return [LeafRef(i) for i in range(tree.leaf_count)]


def leaf_r_values(tree):
    """
    r(T, v) for every leaf, in left-to-right leaf order

    r counts the edges right of the root-to-leaf path: at each vertex on the
    path, every sibling to the right of the path child contributes its
    subtree's edges plus the edge attaching it.
    """
    out = []
    stack = []
    _push_children(stack, tree.root, 0)
    while stack:
        node, right = stack.pop()
        if node.children:
            _push_children(stack, node, right)
        else:
            out.append(right)
    return out


def _push_children(stack, node, right):
    # Rightmost child goes in first so the leftmost is popped first
    suffix = 0
    for child in reversed(node.children):
        stack.append((child, right + suffix))
        suffix += child.edge_count + 1


def leaf_depths(tree):
    """Path length from the root to each leaf, left to right"""
    out = []
    stack = [(child, 1) for child in reversed(tree.root.children)]
    while stack:
        node, depth = stack.pop()
        if node.children:
            stack.extend((child, depth + 1) for child in reversed(node.children))
        else:
            out.append(depth)
    return out


def _check_leaf(tree, v):
    if not 0 <= v.index < tree.leaf_count:
        raise InvalidLeafError(f'leaf {v.index} out of range for {tree.leaf_count} leaves')


def r_value(tree, v):
    """Number of edges of the tree to the right of the path from v to the root"""
    _check_leaf(tree, v)
    return leaf_r_values(tree)[v.index]


def remove_leaf(tree, v):
    """
    T - v: drop the leaf and its edge

    Sibling order is preserved; the parent may become a leaf.

    Raises:
        InvalidLeafError when v is not a leaf of tree
    """
    _check_leaf(tree, v)
    index = v.index
    path = []
    node = tree.root
    while True:
        for pos, child in enumerate(node.children):
            if index < child.leaf_count:
                break
            index -= child.leaf_count
        path.append((node, pos))
        if not child.children:
            break
        node = child

    node, pos = path.pop()
    replacement = Node(node.children[:pos] + node.children[pos + 1:])
    while path:
        node, pos = path.pop()
        replacement = Node(node.children[:pos] + (replacement,) + node.children[pos + 1:])
    return PlaneRootedTree(replacement)


# ============================================================================
# Embedding-independent identity
# ============================================================================

# Sorted child shape ids -> shape id; never cleared, so ids stay stable for
# the life of the process
_SHAPE_IDS = {}


def shape_id(tree):
    """
    Interned id of the unordered shape of the tree

    Two trees in the same process get the same id iff they are isomorphic as
    unordered rooted trees. Ids are cached on the nodes, which removal
    shares freely.
    """
    stack = [(tree.root, False)]
    while stack:
        node, ready = stack.pop()
        if node._shape is not None:
            continue
        if ready:
            signature = tuple(sorted(c._shape for c in node.children))
            object.__setattr__(node, '_shape', _SHAPE_IDS.setdefault(signature, len(_SHAPE_IDS)))
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children if c._shape is None)
    return tree.root._shape


def canonical_key(tree):
    """
    AHU encoding: child keys sorted and wrapped in brackets

    Two trees get the same key iff they are isomorphic as unordered rooted
    trees.
    """
    keys = {}
    stack = [(tree.root, False)]
    while stack:
        node, ready = stack.pop()
        if ready:
            keys[id(node)] = '(' + ''.join(sorted(keys[id(c)] for c in node.children)) + ')'
        elif id(node) not in keys:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children)
    return keys[id(tree.root)]


def random_embedding(tree, seed):
    """Independently shuffle every node's children; same seed, same result"""
    rng = random.Random(seed)
    return PlaneRootedTree(_shuffled(tree.root, rng))


def _shuffled(root, rng):
    # Post-order, children left to right, each parent shuffled after its subtrees
    built = {}
    stack = [(root, False)]
    while stack:
        node, ready = stack.pop()
        if ready:
            children = [built[id(c)] for c in node.children]
            rng.shuffle(children)
            built[id(node)] = Node(tuple(children))
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
    return built[id(root)]


# ============================================================================
# Constructors
# ============================================================================

def hedgehog(delays=()):
    """Root with one leaf child per delay value, delays assigned left to right"""
    assignment = DelayAssignment(tuple(delays))
    return PlaneRootedTree(Node((LEAF,) * len(assignment))), assignment


def chain_node(length):
    """A path of `length` edges hanging below a new node"""
    node = LEAF
    for _ in range(length):
        node = Node((node,))
    return node


def chain_tree(n):
    """Path of n edges with the root at one end"""
    return PlaneRootedTree(chain_node(n))


def branch_tree(lengths):
    """Root with one chain per entry of `lengths`, left to right"""
    return PlaneRootedTree(Node(tuple(chain_node(n - 1) for n in lengths if n > 0)))


def two_branch_tree(b, a):
    """T_{b,a}: a chain of b edges on the left and a chain of a edges on the right"""
    return branch_tree((b, a))


def random_tree(edge_count, rng):
    """
    Uniform attachment: each new vertex hangs from a uniformly random
    existing vertex at a uniformly random child position

    Args:
        edge_count: Number of edges of the result
        rng: random.Random instance (consumed)
    """
    nodes = [[]]
    for _ in range(edge_count):
        parent = nodes[rng.randrange(len(nodes))]
        child = []
        parent.insert(rng.randint(0, len(parent)), child)
        nodes.append(child)
    return PlaneRootedTree(_freeze(nodes[0]))


def _freeze(children):
    frozen = {}
    stack = [(children, False)]
    while stack:
        item, ready = stack.pop()
        if ready:
            frozen[id(item)] = Node(tuple(frozen[id(c)] for c in item))
        else:
            stack.append((item, True))
            stack.extend((c, False) for c in item)
    return frozen[id(children)]
