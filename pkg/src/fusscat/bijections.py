"""Maps between planar partitions with large blocks and refinement chains.

The forward maps are all of one shape.  Group the points of [m*N] into N
consecutive cells of m points; the first point of each cell is its head.
For a partition P, level r of the image is ``contract(P * I_r, m)``, where
I_r glues the first r points of every cell together.

The inverses rebuild P from the chain.  Inside a block of P consecutive
elements are separated by whole blocks whose sizes are multiples of m, so
the residue mod m advances by one along each block and a block is fixed by
its size and first point.  The first point is read off the chain: if the
level-1 block B never joins an earlier block, P's block starts at the head
of min(B); otherwise, with r the first level at which it joins one, it
starts at residue r in the closest earlier cell of its level-r class.  A
left-to-right stack scan then places every other point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .enumerate import PartitionChain, _trusted_chain, enum_multiple, enum_nc_p
from .partition import (
    PartitionError,
    SetPartition,
    comb_partition,
    contract,
    is_noncrossing,
    nc_closure,
    nc_join,
    serialize,
)


class ReconstructionError(PartitionError):
    """An inverse map found no consistent preimage for its input."""


def _unfold(P: SetPartition, m: int) -> PartitionChain:
    parts = []
    for r in range(1, m + 1):
        joined = nc_closure(P.n, [P.blocks, comb_partition(P.n, m, r).blocks])
        parts.append(contract(joined, m))
    return _trusted_chain(parts)


def _require_nc(P: SetPartition) -> None:
    if not is_noncrossing(P):
        raise PartitionError(f"{serialize(P)!r} is crossing")


def _uniform_block_size(P: SetPartition) -> int:
    sizes = {len(b) for b in P.blocks}
    if len(sizes) > 1:
        raise PartitionError(f"blocks of {serialize(P)!r} have unequal sizes {sorted(sizes)}")
    return sizes.pop() if sizes else 0


def split_even(P: SetPartition) -> PartitionChain:
    """(P', P'') for a planar 2q-partition P.

    P' keeps the odd points; P'' is the same contraction of P * I_2, so two
    blocks of P' are tied exactly when P * I_2 merges their parents.
    """
    _require_nc(P)
    size = _uniform_block_size(P)
    if size % 2:
        raise PartitionError(f"blocks of size {size} are not even")
    first = contract(P, 2)
    second = contract(nc_join(comb_partition(P.n, 2, 2), P), 2)
    return _trusted_chain((first, second))


def merge_even(chain: PartitionChain, q: int) -> SetPartition:
    """Inverse of :func:`split_even` on double partitions whose first member is a q-partition."""
    if len(chain) != 2:
        raise PartitionError(f"expected a double partition, got {len(chain)} members")
    _require_p_partition(chain[0], q)
    return _fold(chain, 2)


def unfold_m(P: SetPartition, m: int) -> PartitionChain:
    """The m-tuple (P^(1), ..., P^(m)) of a planar mp-partition P."""
    if m < 1:
        raise PartitionError(f"m must be positive, got {m}")
    _require_nc(P)
    size = _uniform_block_size(P)
    if size % m:
        raise PartitionError(f"block size {size} is not a multiple of m={m}")
    return _unfold(P, m)


def fold_m(chain: PartitionChain, m: int, p: int, method: str = "constructive") -> SetPartition:
    """The planar mp-partition P with ``unfold_m(P, m) == chain``.

    ``method="table"`` inverts through a lookup table built by unfolding
    the whole domain; it exists as an independent check on the direct
    reconstruction.
    """
    if len(chain) != m:
        raise PartitionError(f"expected a chain of length {m}, got {len(chain)}")
    _require_p_partition(chain[0], p)
    _require_method(method)
    if method == "table":
        n = chain.n // p if p else 0
        return _lookup(_fold_table(m, p, n), chain)
    return _fold(chain, m)


def multiple_to_tuple(M: SetPartition, p: int) -> PartitionChain:
    """The p-tuple ((M * I_r)^/p)_r of a planar partition with block sizes divisible by p."""
    if p < 1:
        raise PartitionError(f"p must be positive, got {p}")
    _require_nc(M)
    if M.n % p or any(len(b) % p for b in M.blocks):
        raise PartitionError(f"{serialize(M)!r} has a block size not divisible by {p}")
    return _unfold(M, p)


def tuple_to_multiple(chain: PartitionChain, p: int, method: str = "constructive") -> SetPartition:
    if len(chain) != p:
        raise PartitionError(f"expected a chain of length {p}, got {len(chain)}")
    _require_method(method)
    if method == "table":
        return _lookup(_multiple_table(p, chain.n), chain)
    return _fold(chain, p)


def _require_method(method: str) -> None:
    if method not in ("constructive", "table"):
        raise ValueError(f"unknown method {method!r}")


def _require_p_partition(P: SetPartition, p: int) -> None:
    if p < 1 or any(len(b) != p for b in P.blocks):
        raise PartitionError(f"{serialize(P)!r} is not a {p}-partition")


def first_points(chain: PartitionChain, m: int) -> list[int]:
    """First point, in [m * n], of the preimage block of each level-1 block."""
    base = chain[0]
    firsts = []
    for block in base.blocks:
        start = m * (block[0] - 1) + 1
        for r in range(2, m + 1):
            level = chain[r - 1]
            cls = level.blocks[level.block_of(block[0])]
            if cls[0] < block[0]:
                cell = max(x for x in cls if x < block[0])
                start = m * (cell - 1) + r
                break
        firsts.append(start)
    return firsts


def _fold(chain: PartitionChain, m: int) -> SetPartition:
    if len(chain) != m:
        raise PartitionError(f"expected a chain of length {m}, got {len(chain)}")
    base = chain[0]
    total = m * base.n
    firsts = first_points(chain, m)
    opener = {x: i for i, x in enumerate(firsts)}
    if len(opener) != len(firsts):
        raise ReconstructionError(f"two blocks claim the same first point for {chain}")

    remaining = [m * len(b) for b in base.blocks]
    members: list[list[int]] = [[] for _ in base.blocks]
    stack: list[int] = []
    for x in range(1, total + 1):
        while stack and remaining[stack[-1]] == 0:
            stack.pop()
        if x in opener:
            stack.append(opener[x])
        if not stack:
            raise ReconstructionError(f"point {x} has no open block while folding {chain}")
        i = stack[-1]
        if (x - 1) % m == 0 and base.block_of((x - 1) // m + 1) != i:
            raise ReconstructionError(f"head {x} lands in the wrong block while folding {chain}")
        members[i].append(x)
        remaining[i] -= 1
    if any(remaining):
        raise ReconstructionError(f"blocks left incomplete while folding {chain}")

    P = SetPartition(total, members)
    if _unfold(P, m).parts != chain.parts:
        raise ReconstructionError(f"chain {chain} is outside the image of the unfold map")
    return P


def _lookup(table: dict, chain: PartitionChain) -> SetPartition:
    try:
        return table[chain.parts]
    except KeyError:
        raise ReconstructionError(f"chain {chain} is outside the image of the unfold map") from None


@lru_cache(maxsize=None)
def _fold_table(m: int, p: int, n: int) -> dict:
    return {_unfold(P, m).parts: P for P in enum_nc_p(m * p, n)}


@lru_cache(maxsize=None)
def _multiple_table(p: int, n: int) -> dict:
    return {_unfold(M, p).parts: M for M in enum_multiple(p, n)}


@dataclass(frozen=True)
class TiedDiagram:
    """Arcs of the finest partition plus labelled ties between its blocks.

    ``ties`` holds (i, j, level) with 1-based block ordinals i < j of
    ``base``; the tie appears at chain member ``level``.
    """

    base: SetPartition
    ties: tuple
    levels: int = 1


def chain_to_tied_diagram(chain: PartitionChain) -> TiedDiagram:
    """Tie consecutive base blocks of every class not already joined a level below."""
    base = chain[0]
    ties = []
    for level in range(2, len(chain) + 1):
        below, here = chain[level - 2], chain[level - 1]
        classes: dict[int, list[int]] = {}
        for i, block in enumerate(base.blocks):
            classes.setdefault(here.block_of(block[0]), []).append(i)
        for members in classes.values():
            for a, b in zip(members, members[1:]):
                if below.block_of(base.blocks[a][0]) != below.block_of(base.blocks[b][0]):
                    ties.append((a + 1, b + 1, level))
    return TiedDiagram(base, tuple(ties), len(chain))


def tied_diagram_to_chain(diagram: TiedDiagram) -> PartitionChain:
    base = diagram.base
    parts = [base]
    for level in range(2, diagram.levels + 1):
        groups = [list(b) for b in parts[-1].blocks]
        merged = [
            (base.blocks[i - 1], base.blocks[j - 1]) for i, j, lv in diagram.ties if lv == level
        ]
        parts.append(nc_closure(base.n, [groups, [a + b for a, b in merged]]))
    return PartitionChain(tuple(parts))

