"""Exact Fuss-Catalan numbers and the box-count triangle F^p(n, k).

Everything here is integer arithmetic.  ``fuss_catalan`` goes through a
multiplicative binomial; ``triangle_row`` goes through the box recurrence.
The two paths share only ``binomial`` and are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def binomial(x: int, k: int) -> int:
    """C(x, k) for integers x >= -1.

    Uses the multiplicative formula with exact running division.  Lower index
    -1 is given the convention C(-1, -1) = 1 and C(x, -1) = 0 otherwise, which
    is what the p = 1 triangle needs.
    """
    if k == -1:
        return 1 if x == -1 else 0
    if k < 0 or x < k:
        return 0
    k = min(k, x - k)
    acc = 1
    for i in range(k):
        acc = acc * (x - i) // (i + 1)
    return acc


def fuss_catalan(p: int, n: int) -> int:
    """A_n^p = C(pn+1, n) / (pn+1)."""
    if p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    top = p * n + 1
    q, r = divmod(binomial(top, n), top)
    assert r == 0
    return q


@dataclass
class Triangle:
    """Rows 0..N of F^p(n, k); ``rows[n][k]`` for 0 <= k <= n."""

    p: int
    rows: list[list[int]] = field(default_factory=list)

    @property
    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def t(self, n: int, k: int) -> int:
        """Reflected entry T^p(n, k) = F^p(n, n-k)."""
        if not 0 <= k <= n < len(self.rows):
            raise IndexError(f"T^{self.p}({n},{k}) out of range")
        return self.rows[n][n - k]


def next_row(p: int, prev: list[int]) -> list[int]:
    n = len(prev)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = sum(binomial(j - k + p - 1, p - 2) * prev[j] for j in range(k - 1, n))
    return row


def triangle(p: int, n_max: int) -> Triangle:
    if p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")
    tri = Triangle(p, [[1]])
    for _ in range(n_max):
        tri.rows.append(next_row(p, tri.rows[-1]))
    return tri


def triangle_row(p: int, n: int) -> list[int]:
    """Row n of F^p, built up from row 0 keeping only the previous row."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_row(p, n))


# p -> (n, row n): the most recent row, so increasing requests resume from it
_last_row: dict[int, tuple[int, tuple[int, ...]]] = {}


def _row(p: int, n: int) -> tuple[int, ...]:
    if p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")
    start, row = _last_row.get(p, (0, (1,)))
    if start > n:
        start, row = 0, (1,)
    current = list(row)
    for _ in range(n - start):
        current = next_row(p, current)
    _last_row[p] = (n, tuple(current))
    return tuple(current)


def t_entry(p: int, n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise IndexError(f"T^{p}({n},{k}) out of range")
    return _row(p, n)[n - k]
