"""Full p-ary trees and their correspondence with planar p-partitions.

A node is either ``None`` (a leaf) or a tuple of exactly p children.  A
planar p-partition and a tree with the same number n of internal nodes
share one encoding, the child spec: for each label k = 2..n the pair
(a, b) saying that internal node k is the b-th child of node a, or,
on the diagram side, that the first point of block k comes right after
the b-th point of block a.  Labels follow preorder on the tree and first
points on the diagram.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .partition import PartitionError, SetPartition, is_noncrossing, serialize

Node = Optional[tuple]


@dataclass(frozen=True)
class PTree:
    p: int
    root: Node = None

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"arity must be positive, got {self.p}")
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node is None:
                continue
            if len(node) != self.p:
                raise ValueError(f"node with {len(node)} children in a {self.p}-tree")
            stack.extend(node)

    @property
    def internal(self) -> int:
        return _count(self.root, internal=True)

    @property
    def leaves(self) -> int:
        return _count(self.root, internal=False)

    def __str__(self):
        return serialize_tree(self)


def _count(node: Node, internal: bool) -> int:
    total = 0
    stack = [node]
    while stack:
        node = stack.pop()
        if node is None:
            total += not internal
        else:
            total += internal
            stack.extend(node)
    return total


def serialize_tree(T: PTree) -> str:
    out = []

    def walk(node):
        if node is None:
            out.append("*")
            return
        out.append("(")
        for child in node:
            walk(child)
        out.append(")")

    walk(T.root)
    return "".join(out)


def parse_tree(text: str, p: int | None = None) -> PTree:
    """Read the preorder form; the arity is taken from the root unless given."""
    text = text.strip()
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(text):
            raise ValueError(f"truncated tree {text!r}")
        ch = text[pos]
        pos += 1
        if ch == "*":
            return None
        if ch != "(":
            raise ValueError(f"unexpected {ch!r} in tree {text!r}")
        children = []
        while pos < len(text) and text[pos] != ")":
            children.append(node())
        if pos >= len(text):
            raise ValueError(f"unbalanced tree {text!r}")
        pos += 1
        return tuple(children)

    root = node()
    if pos != len(text):
        raise ValueError(f"trailing characters in tree {text!r}")
    if p is None:
        p = len(root) if root is not None else 1
    return PTree(p, root)


def _subtrees(p: int, n: int) -> Iterator[Node]:
    if n == 0:
        yield None
        return
    for split in _compositions(n - 1, p):
        for children in itertools.product(*[list(_subtrees(p, k)) for k in split]):
            yield tuple(children)


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enum_ptrees(p: int, n: int) -> Iterator[PTree]:
    """All full p-ary trees with n internal nodes."""
    if p < 1 or n < 0:
        raise ValueError(f"need p >= 1 and n >= 0, got p={p}, n={n}")
    for root in _subtrees(p, n):
        yield PTree(p, root)


def child_spec_of_tree(T: PTree) -> list[tuple[int, int]]:
    """Pairs (a, b) for labels 2..n, labels assigned in preorder."""
    pairs = []
    counter = 0

    def walk(node):
        nonlocal counter
        counter += 1
        me = counter
        for b, child in enumerate(node, start=1):
            if child is not None:
                pairs.append((me, b))
                walk(child)

    if T.root is not None:
        walk(T.root)
    return pairs


def tree_of_child_spec(p: int, n: int, pairs: Sequence[tuple[int, int]]) -> PTree:
    if n == 0:
        if pairs:
            raise PartitionError("a tree without internal nodes has no child spec")
        return PTree(p)
    if len(pairs) != n - 1:
        raise PartitionError(f"expected {n - 1} pairs, got {len(pairs)}")
    children: list[list] = [[None] * p for _ in range(n + 1)]
    for k, (a, b) in enumerate(pairs, start=2):
        if not (1 <= a < k and 1 <= b <= p):
            raise PartitionError(f"bad pair {(a, b)} for label {k}")
        if children[a][b - 1] is not None:
            raise PartitionError(f"slot {(a, b)} used twice")
        children[a][b - 1] = k

    def build(label):
        return tuple(None if c is None else build(c) for c in children[label])

    return PTree(p, build(1))


def child_spec_of_partition(P: SetPartition, p: int) -> list[tuple[int, int]]:
    """Pair (a, b) per block k >= 2: the point before block k's first is point b of block a."""
    _require_planar_p_partition(P, p)
    pairs = []
    for block in P.blocks[1:]:
        prev = block[0] - 1
        a = P.block_of(prev)
        pairs.append((a + 1, P.blocks[a].index(prev) + 1))
    return pairs


def partition_of_child_spec(p: int, n: int, pairs: Sequence[tuple[int, int]]) -> SetPartition:
    """Replay the pairs in label order, inserting each block's p points after its slot."""
    if n == 0:
        return SetPartition(0, [])
    order = [(1, b) for b in range(1, p + 1)]
    for k, (a, b) in enumerate(pairs, start=2):
        at = order.index((a, b)) + 1
        order[at:at] = [(k, c) for c in range(1, p + 1)]
    blocks: list[list[int]] = [[] for _ in range(n)]
    for point, (k, _) in enumerate(order, start=1):
        blocks[k - 1].append(point)
    return SetPartition(n * p, blocks)


def _require_planar_p_partition(P: SetPartition, p: int) -> None:
    if p < 1 or any(len(b) != p for b in P.blocks) or not is_noncrossing(P):
        raise PartitionError(f"{serialize(P)!r} is not a planar {p}-partition")


def tree_of_partition(P: SetPartition, p: int) -> PTree:
    pairs = child_spec_of_partition(P, p)
    return tree_of_child_spec(p, len(P.blocks), pairs)


def partition_of_tree(T: PTree) -> SetPartition:
    return partition_of_child_spec(T.p, T.internal, child_spec_of_tree(T))


def box_nodes(T: PTree) -> int:
    """Internal nodes reached from the root through last-ordinal edges only (root included)."""
    count = 0
    node = T.root
    while node is not None:
        count += 1
        node = node[-1]
    return count


def render_tree(T: PTree) -> str:
    """Indented outline, one internal node per line with its preorder label."""
    lines = []
    counter = 0

    def walk(node, depth, ordinal):
        nonlocal counter
        counter += 1
        tag = "" if ordinal is None else f" [{ordinal}]"
        leaves = sum(c is None for c in node)
        lines.append(f"{'  ' * depth}{counter}{tag}  leaves={leaves}")
        for b, child in enumerate(node, start=1):
            if child is not None:
                walk(child, depth + 1, b)

    if T.root is None:
        return "*"
    walk(T.root, 0, None)
    return "\n".join(lines)
