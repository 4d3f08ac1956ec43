"""
Plucker - Tree Notation
Nested-parenthesis notation for plane rooted trees, with and without delays

    plain:    tree  ::= '(' tree* ')'
    delayed:  dtree ::= '(' item* ')'     item ::= dtree | DELAY
              DELAY ::= DIGIT | '<' INT '>'

The outermost group is the root; whitespace is ignored. Inside a delayed
tree an empty group `()` is a leaf with delay 1, and a run of digits is one
leaf per digit, so `(32123)` is a hedgehog with five leaves.
"""
import re

from trees.tree import LEAF, DelayAssignment, Node, PlaneRootedTree
from utils.errors import TreeSyntaxError, ZeroDelayError

_SHORTHAND_POWER = re.compile(r'([0-9]+)\^([0-9]+)')
_ASCII_INT = re.compile(r'[0-9]+')


def _is_ascii_int(text):
    return _ASCII_INT.fullmatch(text) is not None


def _byte_offset(text, index):
    return len(text[:index].encode('utf-8'))


def _parse(text, delayed):
    stack = []
    root = None
    delays = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if root is not None:
            raise TreeSyntaxError(f'unexpected {ch!r} after the root group', _byte_offset(text, i))
        if ch == '(':
            stack.append([])
        elif ch == ')':
            if not stack:
                raise TreeSyntaxError("unbalanced ')'", _byte_offset(text, i))
            children = stack.pop()
            if stack:
                if delayed and not children:
                    delays.append(1)
                stack[-1].append(Node(tuple(children)) if children else LEAF)
            else:
                root = Node(tuple(children))
        elif delayed and stack and (_is_ascii_int(ch) or ch == '<'):
            if ch == '<':
                end = text.find('>', i)
                body = text[i + 1:end] if end >= 0 else ''
                if end < 0 or not _is_ascii_int(body.strip()):
                    raise TreeSyntaxError('malformed <delay>', _byte_offset(text, i))
                value = int(body)
                width = end - i + 1
            else:
                value = int(ch)
                width = 1
            if value == 0:
                raise ZeroDelayError(f'delay 0 at byte {_byte_offset(text, i)}')
            delays.append(value)
            stack[-1].append(LEAF)
            i += width
            continue
        else:
            raise TreeSyntaxError(f'unexpected {ch!r}', _byte_offset(text, i))
        i += 1

    if stack:
        raise TreeSyntaxError("missing ')'", _byte_offset(text, len(text)))
    if root is None:
        raise TreeSyntaxError('empty tree notation', _byte_offset(text, len(text)))
    return PlaneRootedTree(root), delays


def parse_tree(text):
    """
    Parse plain notation such as "(()(()()))"

    Raises:
        TreeSyntaxError with the byte offset of the first problem
    """
    tree, _ = _parse(text, delayed=False)
    return tree


def parse_delayed_tree(text):
    """
    Parse delayed notation such as "(2((3))1)"

    Returns:
        (PlaneRootedTree, DelayAssignment)

    Raises:
        TreeSyntaxError on malformed input, ZeroDelayError on a 0 delay
    """
    tree, delays = _parse(text, delayed=True)
    return tree, DelayAssignment(tuple(delays))


def _serialize(tree, delays):
    parts = []
    leaf = 0
    stack = [(tree.root, False, True)]
    while stack:
        node, closing, is_root = stack.pop()
        if closing:
            parts.append(')')
            continue
        if delays is not None and not is_root and not node.children:
            value = delays[leaf]
            parts.append(str(value) if value <= 9 else f'<{value}>')
            leaf += 1
            continue
        parts.append('(')
        stack.append((node, True, is_root))
        stack.extend((child, False, False) for child in reversed(node.children))
    return ''.join(parts)


def serialize_tree(tree):
    """Inverse of parse_tree"""
    return _serialize(tree, None)


def serialize_delayed_tree(tree, delays):
    """
    Inverse of parse_delayed_tree; every leaf is written as its delay

    Args:
        tree: PlaneRootedTree
        delays: DelayAssignment or sequence of values, one per leaf
    """
    values = delays.values if isinstance(delays, DelayAssignment) else tuple(delays)
    return _serialize(tree, values)


def parse_hedgehog_shorthand(text):
    """
    Delay sequence of a hedgehog from CLI shorthand

    Accepts compact digits ("32123"), separated integers ("3 2 1 2 3",
    "3,2,1,2,3") and run-length tokens ("1^2 4^3 1^2").

    Returns:
        tuple of delay values, left to right
    """
    tokens = [t for t in re.split(r'[\s,]+', text.strip()) if t]
    if not tokens:
        raise TreeSyntaxError('empty hedgehog shorthand', 0)

    values = []
    if len(tokens) == 1 and _is_ascii_int(tokens[0]):
        values = [int(ch) for ch in tokens[0]]
    else:
        for token in tokens:
            match = _SHORTHAND_POWER.fullmatch(token)
            if match:
                values.extend([int(match.group(1))] * int(match.group(2)))
            elif _is_ascii_int(token):
                values.append(int(token))
            else:
                raise TreeSyntaxError(f'bad hedgehog token {token!r}', _byte_offset(text, text.find(token)))

    if any(v == 0 for v in values):
        raise ZeroDelayError(f'delay 0 in hedgehog shorthand {text!r}')
    return tuple(values)
