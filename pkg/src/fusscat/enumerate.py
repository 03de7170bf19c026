"""Exhaustive generators for the planar-partition families.

All generators share one recursive construction.  A non-crossing partition
of an interval is fixed by the block containing the interval's left end:
the gaps between consecutive elements of that block, and the tail after its
last element, are independent sub-intervals partitioned recursively.  The
canonical block list of the result is the chosen block followed by the
gap partitions in order, so choosing the block in lexicographic order and
nesting the sub-interval loops left to right yields partitions in
lexicographic order of their block lists.

Two kinds of pruning ride on the same recursion: a block-size rule (exactly
p, or a multiple of p), under which every sub-interval length must be a
multiple of p, and a base partition that the result must coarsen, under
which every block is a union of base blocks and every gap is closed under
the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .partition import PartitionError, SetPartition, is_noncrossing, is_refinement, serialize
from .partition import box_count


@dataclass(frozen=True)
class PartitionChain:
    """A refinement chain P1 <= P2 <= ... <= Pm of non-crossing partitions."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise PartitionError("a chain needs at least one member")
        n = parts[0].n
        for P in parts:
            if P.n != n:
                raise PartitionError("chain members over different ground sets")
            if not is_noncrossing(P):
                raise PartitionError(f"chain member {serialize(P)!r} is crossing")
        for a, b in zip(parts, parts[1:]):
            if not is_refinement(a, b):
                raise PartitionError(f"{serialize(a)!r} does not refine {serialize(b)!r}")

    @property
    def n(self) -> int:
        return self.parts[0].n

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __lt__(self, other):
        return [(P.n, P.blocks) for P in self.parts] < [(P.n, P.blocks) for P in other.parts]

    def __str__(self):
        return serialize_chain(self)


def serialize_chain(chain: PartitionChain) -> str:
    return ";".join(serialize(P) for P in chain.parts)


def parse_chain(text: str, n: int | None = None) -> PartitionChain:
    from .partition import parse

    pieces = text.strip().split(";")
    parts = [parse(s, n) for s in pieces]
    if n is None and len({P.n for P in parts}) > 1:
        # inferred sizes can differ only if a member is void
        size = max(P.n for P in parts)
        parts = [parse(s, size) for s in pieces]
    return PartitionChain(tuple(parts))


def _trusted_chain(parts) -> PartitionChain:
    # generators build chains that are valid by construction
    chain = object.__new__(PartitionChain)
    object.__setattr__(chain, "parts", tuple(parts))
    return chain


class _Rules:
    """Pruning rules for one generation run."""

    def __init__(self, mode: str = "any", p: int = 1, base: SetPartition | None = None):
        if p < 1:
            raise ValueError(f"p must be a positive integer, got {p}")
        self.mode = mode
        self.p = p
        self.base = base
        if base is not None:
            n = base.n
            self.bmin = [0] * (n + 2)
            self.bmax = [0] * (n + 2)
            for b in base.blocks:
                for x in b:
                    self.bmin[x] = b[0]
                    self.bmax[x] = b[-1]

    def region_ok(self, length: int) -> bool:
        return self.mode == "any" or length % self.p == 0

    def can_grow(self, size: int) -> bool:
        return self.mode != "exact" or size < self.p

    def size_ok(self, size: int) -> bool:
        if self.mode == "exact":
            return size == self.p
        return self.mode == "any" or size % self.p == 0

    def gap_closed(self, left: int, right: int) -> bool:
        """Whether no base block straddles the open interval (left, right)."""
        if self.base is None:
            return True
        bmin, bmax = self.bmin, self.bmax
        return all(bmin[x] > left and bmax[x] < right for x in range(left + 1, right))


def _first_blocks(lo: int, hi: int, rules: _Rules) -> Iterator[tuple]:
    """Candidate blocks containing ``lo`` inside [lo, hi], lexicographically."""
    base = rules.base

    def rest_of(y):
        if base is None:
            return frozenset()
        return frozenset(x for x in base.blocks[base.block_of(y)] if x > y)

    def extend(chosen: tuple, pending: frozenset):
        # pending: elements of base blocks already touched, still to be added
        last = chosen[-1]
        if not pending and rules.size_ok(len(chosen)) and rules.region_ok(hi - last):
            yield chosen
        if not rules.can_grow(len(chosen)):
            return
        stop = min(pending) if pending else hi
        for y in range(last + 1, stop + 1):
            if not rules.region_ok(y - last - 1):
                continue
            if pending and y == stop:
                after = pending - {y}
            elif base is not None and rules.bmin[y] != y:
                continue
            else:
                after = pending | rest_of(y)
            if rules.gap_closed(last, y):
                yield from extend(chosen + (y,), after)

    yield from extend((lo,), rest_of(lo))


def _interval(lo: int, hi: int, rules: _Rules) -> Iterator[tuple]:
    if lo > hi:
        yield ()
        return
    for block in _first_blocks(lo, hi, rules):
        regions = [(a + 1, b - 1) for a, b in zip(block, block[1:])]
        regions.append((block[-1] + 1, hi))
        for rest in _product(regions, rules):
            yield (block,) + rest


def _product(regions: Sequence[tuple[int, int]], rules: _Rules) -> Iterator[tuple]:
    if not regions:
        yield ()
        return
    (lo, hi), tail = regions[0], regions[1:]
    for head in _interval(lo, hi, rules):
        for rest in _product(tail, rules):
            yield head + rest


def _generate(n: int, rules: _Rules) -> Iterator[SetPartition]:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not rules.region_ok(n):
        return
    for blocks in _interval(1, n, rules):
        yield SetPartition._trusted(n, blocks)


def enum_nc(n: int) -> Iterator[SetPartition]:
    """Every non-crossing partition of [n]."""
    return _generate(n, _Rules())


def enum_nc_p(p: int, n: int) -> Iterator[SetPartition]:
    """Non-crossing partitions of [pn] whose blocks all have exactly p elements."""
    return _generate(p * n, _Rules("exact", p))


def enum_multiple(p: int, n: int) -> Iterator[SetPartition]:
    """Non-crossing partitions of [pn] whose block sizes are multiples of p."""
    return _generate(p * n, _Rules("multiple", p))


def coarsenings(P: SetPartition) -> Iterator[SetPartition]:
    """Every non-crossing Q with P <= Q, lexicographically."""
    if not is_noncrossing(P):
        raise PartitionError(f"{serialize(P)!r} is crossing")
    return _generate(P.n, _Rules(base=P))


def _chains_above(P: SetPartition, length: int) -> Iterator[tuple]:
    if length == 0:
        yield ()
        return
    for Q in coarsenings(P):
        for rest in _chains_above(Q, length - 1):
            yield (Q,) + rest


def _chains(bases: Iterator[SetPartition], m: int) -> Iterator[PartitionChain]:
    if m < 1:
        raise ValueError(f"chain length must be at least 1, got {m}")
    for P in bases:
        for rest in _chains_above(P, m - 1):
            yield _trusted_chain((P,) + rest)


def enum_chains(n: int, m: int) -> Iterator[PartitionChain]:
    """Refinement chains of m non-crossing partitions of [n]."""
    return _chains(enum_nc(n), m)


def enum_mtuple_p(m: int, p: int, n: int) -> Iterator[PartitionChain]:
    """Chains of length m over [pn] whose first member is a non-crossing p-partition."""
    return _chains(enum_nc_p(p, n), m)


def enum_double(q: int, n: int) -> Iterator[PartitionChain]:
    """Double planar partitions (P1 <= P2) of [qn] with P1 a q-partition."""
    return enum_mtuple_p(2, q, n)


def box_histogram(p: int, n: int) -> list[int]:
    """Entry k counts the planar p-partitions of [pn] with exactly k boxes."""
    hist = [0] * (n + 1)
    for P in enum_nc_p(p, n):
        hist[box_count(P)] += 1
    return hist


FAMILIES: dict[str, Callable[..., Iterator]] = {
    "nc": enum_nc,
    "ncp": enum_nc_p,
    "multiple": enum_multiple,
    "chains": enum_chains,
    "double": enum_double,
    "mtuple": enum_mtuple_p,
}


def count(it) -> int:
    return sum(1 for _ in it)
