"""Slow reference implementations used to cross-check the fast paths.

Nothing here shares code with the generators or the stack scans: set
partitions come from restricted growth strings, crossing is tested on every
quadruple, refinement with Python sets, and the join by exhaustive search
over the lattice.  Intended for ground sets of at most about 8 points.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .partition import SetPartition


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All Bell(n) partitions of [n], via restricted growth strings."""
    rgs = [0] * n

    def fill(i, top):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for x, b in enumerate(rgs, start=1):
                blocks.setdefault(b, []).append(x)
            yield SetPartition(n, blocks.values())
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from fill(i + 1, max(top, b))

    if n == 0:
        yield SetPartition(0, [])
        return
    rgs[0] = 0
    yield from fill(1, 0)


def crossing(P: SetPartition) -> bool:
    """Some i<j<k<l with i,k in one block and j,l in another."""
    lab = {x: i for i, b in enumerate(P.blocks) for x in b}
    for i, j, k, l in combinations(range(1, P.n + 1), 4):
        if lab[i] == lab[k] and lab[j] == lab[l] and lab[i] != lab[j]:
            return True
    return False


@lru_cache(maxsize=None)
def noncrossing(n: int) -> tuple[SetPartition, ...]:
    return tuple(P for P in set_partitions(n) if not crossing(P))


def refines(P1: SetPartition, P2: SetPartition) -> bool:
    """Every block of P1 is a subset of one block of P2."""
    where = {x: frozenset(b) for b in P2.blocks for x in b}
    return all(set(b) <= where[b[0]] for b in P1.blocks)


def boxes(P: SetPartition) -> int:
    return sum(
        not any(A[0] < B[0] and A[-1] > B[-1] for A in P.blocks if A != B) for B in P.blocks
    )


def join_by_scan(P1: SetPartition, P2: SetPartition) -> SetPartition:
    """Least element of {Q non-crossing : P1 <= Q, P2 <= Q}, found by scanning."""
    above = [Q for Q in noncrossing(P1.n) if refines(P1, Q) and refines(P2, Q)]
    finest = max(above, key=lambda Q: len(Q.blocks))
    assert all(refines(finest, Q) for Q in above)
    return finest


def family(name: str, points: int, p: int = 1) -> list[SetPartition]:
    """Filter of all NC partitions of [points] for a block-size family."""
    nc = list(noncrossing(points))
    if name == "nc":
        return nc
    if name == "ncp":
        return [P for P in nc if all(len(b) == p for b in P.blocks)]
    if name == "multiple":
        return [P for P in nc if all(len(b) % p == 0 for b in P.blocks)]
    raise ValueError(name)


@lru_cache(maxsize=None)
def _coarser(n: int) -> dict:
    universe = noncrossing(n)
    owner = {Q: {x: i for i, b in enumerate(Q.blocks) for x in b} for Q in universe}
    return {
        P: [Q for Q in universe if all(len({owner[Q][x] for x in b}) == 1 for b in P.blocks)]
        for P in universe
    }


def chains(bases, n: int, m: int) -> list[tuple]:
    """All chains of m non-crossing partitions of [n] starting in ``bases``."""
    up = _coarser(n)
    out = [(P,) for P in bases]
    for _ in range(m - 1):
        out = [c + (Q,) for c in out for Q in up[c[-1]]]
    return out
