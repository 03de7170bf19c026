"""Self-check suite: every counting identity and bijection certificate.

Each check carries the size of the ground set it enumerates, so a run can
be capped with ``max_points``.  Arithmetic-only checks are charged the
ground size of the objects they count (pn for A_n^p).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import oracles
from .bijections import (
    fold_m,
    merge_even,
    multiple_to_tuple,
    split_even,
    tuple_to_multiple,
    unfold_m,
)
from .enumerate import (
    box_histogram,
    count,
    enum_chains,
    enum_double,
    enum_multiple,
    enum_mtuple_p,
    enum_nc,
    enum_nc_p,
)
from .numbers import fuss_catalan, triangle_row
from .partition import box_count, from_blocks
from .ptree import box_nodes, enum_ptrees, partition_of_tree, tree_of_partition


@dataclass
class CheckResult:
    criterion: str
    name: str
    expected: object
    actual: object
    seconds: float

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class Check:
    criterion: str
    name: str
    points: int
    run: Callable[[], tuple]


def _roundtrip(domain, forward, backward, family):
    """(|domain|, |domain|, True) against (#inverted, |image|, image == family)."""
    domain = list(domain)
    image = [forward(x) for x in domain]
    inverted = sum(backward(y) == x for x, y in zip(domain, image))
    same = {y.parts for y in image} == {c.parts for c in family}
    return (len(domain), len(domain), True), (inverted, len({y.parts for y in image}), same)


def _p_partition_counts():
    for p in range(1, 7):
        for n in range(0, 12 // p + 1):
            yield Check("1", f"|P^{p}_{n}| = A_{n}^{p}", p * n,
                        lambda p=p, n=n: (fuss_catalan(p, n), count(enum_nc_p(p, n))))


def _triangle():
    for p in range(1, 5):
        for n in range(0, 5):
            yield Check("2", f"boxes of P^{p}_{n} = F^{p}({n},.)", p * n,
                        lambda p=p, n=n: (triangle_row(p, n), box_histogram(p, n)))
    for p in range(1, 7):
        for n in range(0, 61):
            yield Check("2", f"sum F^{p}({n},.) = A_{n}^{p}", p * n,
                        lambda p=p, n=n: (fuss_catalan(p, n), sum(triangle_row(p, n))))


def _double_partitions():
    for q in range(1, 7):
        for n in range(0, 6 // q + 1):
            yield Check("3", f"|P^(II,{q})_{n}| = A_{n}^{2 * q}", q * n,
                        lambda q=q, n=n: (fuss_catalan(2 * q, n), count(enum_double(q, n))))
    for q in range(1, 7):
        for n in range(0, 12 // (2 * q) + 1):
            yield Check("3", f"split/merge round trip on P^{2 * q}_{n}", 2 * q * n,
                        lambda q=q, n=n: _roundtrip(enum_nc_p(2 * q, n), split_even,
                                                    lambda c: merge_even(c, q), enum_double(q, n)))


def _mtuples():
    for m in range(1, 7):
        for p in range(1, 6 // m + 1):
            for n in range(0, 6 // p + 1):
                yield Check("4", f"|P^(({m}),{p})_{n}| = A_{n}^{m * p}", p * n,
                            lambda m=m, p=p, n=n: (fuss_catalan(m * p, n),
                                                   count(enum_mtuple_p(m, p, n))))
    for m in range(1, 13):
        for p in range(1, 12 // m + 1):
            for n in range(0, 12 // (m * p) + 1):
                yield Check("4", f"unfold/fold round trip m={m} on P^{m * p}_{n}", m * p * n,
                            lambda m=m, p=p, n=n: _roundtrip(
                                enum_nc_p(m * p, n), lambda P: unfold_m(P, m),
                                lambda c: fold_m(c, m, p), enum_mtuple_p(m, p, n)))


def _chain_counts():
    for n in range(0, 6):
        for m in range(2, 6):
            yield Check("5", f"{m - 1}-chains over [{n}] = A_{n}^{m}", n,
                        lambda n=n, m=m: (fuss_catalan(m, n), count(enum_chains(n, m - 1))))


def _multiples():
    for p in range(1, 11):
        for n in range(0, 10 // p + 1):
            yield Check("6", f"|M^{p}_{n}| = A_{n}^{p + 1}", p * n,
                        lambda p=p, n=n: (fuss_catalan(p + 1, n), count(enum_multiple(p, n))))
            yield Check("6", f"M^{p}_{n} <-> {p}-chains round trip", p * n,
                        lambda p=p, n=n: _roundtrip(enum_multiple(p, n),
                                                    lambda M: multiple_to_tuple(M, p),
                                                    lambda c: tuple_to_multiple(c, p),
                                                    enum_chains(n, p)))


def _trees():
    grid = [(p, n) for p in range(2, 5) for n in range(0, 6)]
    grid += [(2, n) for n in range(6, 9)]
    for p, n in grid:
        yield Check("7", f"|T^{p}_{n}| = A_{n}^{p}", p * n,
                    lambda p=p, n=n: (fuss_catalan(p, n), count(enum_ptrees(p, n))))
    for p in range(1, 13):
        for n in range(0, 12 // p + 1):
            yield Check("7", f"tau round trip and boxes on P^{p}_{n}", p * n,
                        lambda p=p, n=n: _tau(p, n))


def _tau(p, n):
    domain = list(enum_nc_p(p, n))
    trees = [tree_of_partition(P, p) for P in domain]
    back = sum(partition_of_tree(T) == P for P, T in zip(domain, trees))
    boxes_ok = all(box_nodes(T) == box_count(P) for P, T in zip(domain, trees))
    forward = sum(tree_of_partition(partition_of_tree(T), p) == T for T in enum_ptrees(p, n))
    return (len(domain), len(domain), True), (back, forward, boxes_ok)


def _worked_example():
    def run():
        P = from_blocks(12, [[1, 2, 7, 12], [3, 4, 5, 6], [8, 9, 10, 11]])
        expected_chain = ("1,4/2,3/5,6", "1,4,5,6/2,3")
        chain = split_even(P)
        return (expected_chain, str(P)), (tuple(str(X) for X in chain), str(merge_even(chain, 2)))

    yield Check("8", "split_even worked example and its inverse", 12, run)


def _oracle_grid(limit: int) -> Iterator[tuple]:
    for points in range(0, limit + 1):
        yield ("nc", points, 1)
        for p in range(1, points + 1):
            if points % p == 0:
                yield ("ncp", points, p)
                yield ("multiple", points, p)


def _oracle():
    for name, points, p in _oracle_grid(8):
        def run(name=name, points=points, p=p):
            gen = {"nc": lambda: enum_nc(points),
                   "ncp": lambda: enum_nc_p(p, points // p),
                   "multiple": lambda: enum_multiple(p, points // p)}[name]
            return set(oracles.family(name, points, p)), set(gen())
        yield Check("9", f"{name} p={p} on [{points}] matches naive filter", points, run)
    for points in range(0, 9):
        for m in range(1, 4):
            def run(points=points, m=m):
                naive = set(oracles.chains(oracles.noncrossing(points), points, m))
                return naive, {c.parts for c in enum_chains(points, m)}
            yield Check("9", f"{m}-chains on [{points}] match naive filter", points, run)
            for p in range(1, points + 1):
                if points % p:
                    continue
                def run(points=points, m=m, p=p):
                    bases = oracles.family("ncp", points, p)
                    naive = set(oracles.chains(bases, points, m))
                    return naive, {c.parts for c in enum_mtuple_p(m, p, points // p)}
                yield Check("9", f"{m}-chains from {p}-partitions on [{points}] match naive filter",
                            points, run)


# acceptance criterion -> the checks that establish it
SECTIONS = {
    1: _p_partition_counts,
    2: _triangle,
    3: _double_partitions,
    4: _mtuples,
    5: _chain_counts,
    6: _multiples,
    7: _trees,
    8: _worked_example,
    9: _oracle,
}


def checks(max_points: int) -> list[Check]:
    return [c for section in SECTIONS.values() for c in section() if c.points <= max_points]


def verify_all(max_points: int = 12) -> list[CheckResult]:
    results = []
    for check in checks(max_points):
        start = time.perf_counter()
        expected, actual = check.run()
        results.append(CheckResult(check.criterion, check.name, expected, actual,
                                   time.perf_counter() - start))
    return results
