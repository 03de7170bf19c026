"""Set partitions of [n] in canonical form, with the planar-diagram predicates.

A partition is stored as a tuple of blocks sorted by minimum, each block an
ascending tuple of integers in 1..n.  Alongside the blocks we keep a label
array mapping every element to the ordinal of its block, which makes the
refinement test linear and the crossing test a single stack scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """Raised for malformed partitions or operands outside an operation's domain."""


class SetPartition:
    __slots__ = ("n", "blocks", "_label")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        if n < 0:
            raise PartitionError(f"ground-set size must be nonnegative, got {n}")
        canon = []
        for block in blocks:
            b = tuple(sorted(block))
            if not b:
                raise PartitionError("empty block")
            canon.append(b)
        canon.sort()
        label = [-1] * (n + 1)
        for i, b in enumerate(canon):
            for x in b:
                if not 1 <= x <= n:
                    raise PartitionError(f"element {x} outside [1..{n}]")
                if label[x] != -1:
                    raise PartitionError(f"element {x} duplicated")
                label[x] = i
        missing = [x for x in range(1, n + 1) if label[x] == -1]
        if missing:
            raise PartitionError(f"elements {missing} not covered")
        self.n = n
        self.blocks = tuple(canon)
        self._label = tuple(label)

    @classmethod
    def _trusted(cls, n: int, blocks: tuple) -> "SetPartition":
        """Build from blocks already in canonical form, skipping validation."""
        self = object.__new__(cls)
        label = [-1] * (n + 1)
        for i, b in enumerate(blocks):
            for x in b:
                label[x] = i
        self.n = n
        self.blocks = blocks
        self._label = tuple(label)
        return self

    def block_of(self, x: int) -> int:
        """Ordinal (0-based, canonical order) of the block containing x."""
        return self._label[x]

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __lt__(self, other):
        return (self.n, self.blocks) < (other.n, other.blocks)

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"SetPartition({self.n}, {[list(b) for b in self.blocks]})"

    def __str__(self):
        return serialize(self)


@dataclass(frozen=True, order=True)
class Arc:
    left: int
    right: int


def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> SetPartition:
    return SetPartition(n, blocks)


def identity(n: int) -> SetPartition:
    """The all-singletons partition I of [n]."""
    return SetPartition(n, [(x,) for x in range(1, n + 1)])


def serialize(P: SetPartition) -> str:
    return "/".join(",".join(map(str, b)) for b in P.blocks)


def parse(text: str, n: int | None = None) -> SetPartition:
    """Inverse of :func:`serialize`.

    ``n`` defaults to the largest element, so the void partition needs the
    empty string (and ``n`` of 0 or None).
    """
    text = text.strip()
    if not text:
        return SetPartition(n or 0, [])
    try:
        blocks = [[int(x) for x in b.split(",")] for b in text.split("/")]
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc
    if n is None:
        n = max(max(b) for b in blocks)
    return SetPartition(n, blocks)


def _scan(P: SetPartition):
    """Left-to-right open-block stack scan.

    Returns (crossing, boxes): whether some element arrives while another
    block is open above its own, and how many blocks open on an empty stack.
    """
    stack = []
    boxes = 0
    crossing = False
    for x in range(1, P.n + 1):
        b = P._label[x]
        block = P.blocks[b]
        if block[0] == x:
            if not stack:
                boxes += 1
            stack.append(b)
        elif stack[-1] != b:
            crossing = True
        if block[-1] == x:
            if stack[-1] == b:
                stack.pop()
            else:
                stack.remove(b)
    return crossing, boxes


def is_noncrossing(P: SetPartition) -> bool:
    return not _scan(P)[0]


def require_noncrossing(P: SetPartition, what: str = "operand") -> None:
    if not is_noncrossing(P):
        raise PartitionError(f"{what} {serialize(P)!r} is crossing")


def standard_arcs(P: SetPartition) -> list[Arc]:
    """Arcs joining consecutive elements of each block."""
    arcs = [Arc(a, b) for block in P.blocks for a, b in zip(block, block[1:])]
    arcs.sort()
    return arcs


def box_count(P: SetPartition) -> int:
    """Number of blocks not nested under another block."""
    crossing, boxes = _scan(P)
    if crossing:
        raise PartitionError(f"box_count needs a non-crossing partition, got {serialize(P)!r}")
    return boxes


def _check_same_size(P1: SetPartition, P2: SetPartition) -> None:
    if P1.n != P2.n:
        raise PartitionError(f"size mismatch: {P1.n} vs {P2.n}")


def is_refinement(P1: SetPartition, P2: SetPartition) -> bool:
    """True iff every block of P1 lies inside a block of P2 (P1 <= P2)."""
    _check_same_size(P1, P2)
    lab = P2._label
    return all(lab[x] == lab[b[0]] for b in P1.blocks for x in b)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


def _groups(uf: _UnionFind, n: int) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(uf.find(x), []).append(x)
    return list(groups.values())


def nc_closure(n: int, families: Iterable[Iterable[Iterable[int]]]) -> SetPartition:
    """Finest non-crossing partition of [n] in which every given block is contained.

    Blocks from all families are unioned, then blocks with crossing arcs are
    merged until none remain.  Every merge is forced, so the fixpoint is minimal.
    """
    uf = _UnionFind(n)
    for family in families:
        for block in family:
            block = list(block)
            for x in block[1:]:
                uf.union(block[0], x)
    while True:
        arcs = [(a, b) for g in _groups(uf, n) for a, b in zip(g, g[1:])]
        merged = False
        for i, (a, b) in enumerate(arcs):
            for c, d in arcs[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    merged |= uf.union(a, c)
        if not merged:
            return SetPartition(n, _groups(uf, n))


def nc_join(P1: SetPartition, P2: SetPartition) -> SetPartition:
    """The product ``P1 * P2``: least non-crossing partition above both operands."""
    _check_same_size(P1, P2)
    require_noncrossing(P1)
    require_noncrossing(P2)
    return nc_closure(P1.n, [P1.blocks, P2.blocks])


def contract(P: SetPartition, k: int) -> SetPartition:
    """Keep the elements congruent to 1 mod k and relabel k*j+1 as j+1."""
    if k < 1:
        raise PartitionError(f"contraction factor must be positive, got {k}")
    if P.n % k:
        raise PartitionError(f"ground size {P.n} not divisible by {k}")
    blocks = []
    for b in P.blocks:
        kept = [(x - 1) // k + 1 for x in b if (x - 1) % k == 0]
        if kept:
            blocks.append(kept)
    return SetPartition(P.n // k, blocks)


def comb_partition(total: int, m: int, r: int) -> SetPartition:
    """I_r on [total]: blocks {mk+1, ..., mk+r}, remaining elements singletons."""
    if m < 1 or total < 0 or total % m:
        raise PartitionError(f"need total divisible by m >= 1, got total={total}, m={m}")
    if not 1 <= r <= m:
        raise PartitionError(f"need 1 <= r <= m, got r={r}, m={m}")
    blocks = []
    for k in range(total // m):
        start = m * k
        blocks.append(range(start + 1, start + r + 1))
        blocks.extend((x,) for x in range(start + r + 1, start + m + 1))
    return SetPartition(total, blocks)


def block_sizes(P: SetPartition) -> list[int]:
    return [len(b) for b in P.blocks]


def is_p_partition(P: SetPartition, p: int) -> bool:
    return all(len(b) == p for b in P.blocks)


def require_same_ground(parts: Sequence[SetPartition]) -> int:
    sizes = {P.n for P in parts}
    if len(sizes) > 1:
        raise PartitionError(f"partitions over different ground sets: {sorted(sizes)}")
    return sizes.pop() if sizes else 0
