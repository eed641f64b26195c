"""Young diagrams, the index sets Theta_{r,d}(j) and the blow-up counters.

Three counters are computed here by unrelated routes:

* :func:`a_tilde` sums binomial products over the index vectors of
  :func:`enumerate_theta`;
* :func:`a_count` counts decorated tuples ``(m_a, Y_a)`` of Young diagrams
  with bounded column counts;
* :func:`a_infinity` reads coefficients off the lattice theta series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .series import NEG_INFINITY, coefficient, lattice_theta_sum

__all__ = [
    "YoungDiagram",
    "ThetaVector",
    "DecoratedTuple",
    "young_diagrams",
    "partition_count",
    "restricted_partition_count",
    "enumerate_theta",
    "a_tilde",
    "pairing",
    "pairing_half",
    "enumerate_decorated",
    "a_count",
    "a_infinity",
    "rank1_bijection",
    "rank1_inverse",
]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    """A Young diagram stored by its row lengths (weakly decreasing)."""

    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(x) for x in self.rows)
        if any(x < 1 for x in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, heights: Sequence[int]) -> "YoungDiagram":
        """Build from column heights given in any order; zeros are ignored."""
        if any(h < 0 for h in heights):
            raise ValueError("column heights must be non-negative")
        cols = sorted((h for h in heights if h), reverse=True)
        return cls(_conjugate(cols))

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def columns(self) -> int:
        return self.rows[0] if self.rows else 0

    def column_heights(self) -> tuple[int, ...]:
        """Column heights from left to right (weakly decreasing)."""
        return _conjugate(self.rows)

    def __len__(self):
        return self.size


def _conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


@dataclass(frozen=True)
class ThetaVector:
    """Vector ``(k_1, ..., k_l)`` in canonical form (last entry nonzero)."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if entries and entries[-1] == 0:
            raise ValueError(f"canonical form forbids trailing zeros: {entries}")
        if any(x < 0 for x in entries):
            raise ValueError(f"entries must be non-negative: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def canonical(cls, entries: Sequence[int]) -> "ThetaVector":
        e = list(entries)
        while e and e[-1] == 0:
            e.pop()
        return cls(tuple(e))

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def weight(self) -> int:
        return sum(i * k for i, k in enumerate(self.entries, start=1))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.entries, start=1) if k)


@dataclass(frozen=True)
class DecoratedTuple:
    pairs: tuple[tuple[int, YoungDiagram], ...]

    def __post_init__(self):
        for m, y in self.pairs:
            if m < 0 or y.columns > m:
                raise ValueError(f"need 0 <= c(Y) <= m, got m={m}, Y={y.rows}")

    @property
    def m(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.pairs)

    @property
    def size(self) -> int:
        return sum(y.size for _, y in self.pairs)


def young_diagrams(n: int, max_columns: int | None = None) -> Iterator[YoungDiagram]:
    """All diagrams with ``n`` boxes and at most ``max_columns`` columns.

    Generated in reverse lexicographic order of rows.
    """
    if n < 0:
        return
    cap = n if max_columns is None else min(n, max_columns)

    def rec(left: int, largest: int, rows: list[int]):
        if left == 0:
            yield YoungDiagram(tuple(rows))
            return
        for part in range(min(left, largest), 0, -1):
            rows.append(part)
            yield from rec(left - part, part, rows)
            rows.pop()

    if n == 0:
        yield YoungDiagram()
    elif cap > 0:
        yield from rec(n, cap, [])


@lru_cache(maxsize=None)
def _partition_table(n: int) -> tuple[int, ...]:
    # Euler's pentagonal number recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def partition_count(j: int) -> int:
    """Number of partitions of ``j`` (``p(0) = 1``, ``p(j) = 0`` for ``j < 0``)."""
    if j < 0:
        return 0
    return _partition_table(j)[j]


@lru_cache(maxsize=None)
def restricted_partition_count(j: int, max_part: int) -> int:
    """Partitions of ``j`` into parts of size at most ``max_part``."""
    if j == 0:
        return 1
    if j < 0 or max_part <= 0:
        return 0
    return restricted_partition_count(j, max_part - 1) + restricted_partition_count(
        j - max_part, max_part
    )


def _min_fill(units: int, start: int, cap: int) -> int:
    # cheapest weight for placing `units` at indices start, start+1, ... with <= cap each
    full, rem = divmod(units, cap)
    return cap * (full * start + full * (full - 1) // 2) + rem * (start + full)


def enumerate_theta(r: int, d: int, j: int) -> list[ThetaVector]:
    """Canonical vectors with ``0 <= k_i <= r``, ``sum k_i = rd`` and
    ``sum i*k_i = j + rd(d+1)/2``, in lexicographic order."""
    if r < 1:
        raise ValueError("rank must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    total = r * d
    target = j + r * d * (d + 1) // 2
    if total == 0:
        return [ThetaVector()] if j == 0 else []
    out: list[ThetaVector] = []
    prefix: list[int] = []

    def rec(i: int, units: int, weight: int) -> None:
        # position i is the next index to fill; sum so far leaves `units`, `weight`
        if _min_fill(units, i, r) > weight:
            return
        for k in range(min(r, units) + 1):
            left_units = units - k
            left_weight = weight - i * k
            if left_units == 0:
                if left_weight == 0 and k > 0:
                    out.append(ThetaVector(tuple(prefix) + (k,)))
                continue
            prefix.append(k)
            rec(i + 1, left_units, left_weight)
            prefix.pop()

    rec(1, total, target)
    return out


def a_tilde(r: int, d: int, j: int) -> int:
    """Binomial-weighted count of :func:`enumerate_theta`."""
    total = 0
    for v in enumerate_theta(r, d, j):
        w = 1
        for k in v.entries:
            w *= comb(r, k)
        total += w
    return total


def pairing(m: Sequence[int]) -> Fraction:
    """``sum_{a,b} (m_a - m_b)^2 / (2r)`` as an exact rational."""
    r = len(m)
    if r < 1:
        raise ValueError("empty vector")
    s = sum((x - y) ** 2 for x in m for y in m)
    return Fraction(s, 2 * r)


def pairing_half(m: Sequence[int]) -> int:
    """``pairing(m) / 2``, which is always an integer; checked, not assumed."""
    half = pairing(m) / 2
    if half.denominator != 1:
        raise ArithmeticError(f"(m,m)/2 = {half} is not integral for m = {tuple(m)}")
    return half.numerator


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_decorated(r: int, d: int, j: int) -> Iterator[DecoratedTuple]:
    """Every decorated tuple counted by ``A_{r,d}(j)``; for small cases."""
    for m in _compositions(r * d, r):
        budget = j - pairing_half(m)
        if budget < 0:
            continue
        yield from _decorate(m, budget, ())


def _decorate(m, budget, acc):
    alpha = len(acc)
    if alpha == len(m) - 1:
        for y in young_diagrams(budget, m[alpha]):
            yield DecoratedTuple(acc + ((m[alpha], y),))
        return
    for size in range(budget + 1):
        for y in young_diagrams(size, m[alpha]):
            yield from _decorate(m, budget - size, acc + ((m[alpha], y),))


@lru_cache(maxsize=None)
def _diagram_count(n: int, max_columns: int) -> int:
    return sum(1 for _ in young_diagrams(n, max_columns))


def a_count(r: int, d: int, j: int) -> int:
    """Number of decorated tuples ``(m_a, Y_a)`` with ``sum m_a = rd``,
    ``c(Y_a) <= m_a`` and ``|Y| + (m,m)/2 = j``."""
    if r < 1:
        raise ValueError("rank must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    total = 0
    for m in _compositions(r * d, r):
        budget = j - pairing_half(m)
        if budget < 0:
            continue
        # number of r-tuples of diagrams with total size `budget`
        ways = [1] + [0] * budget
        for cap in m:
            counts = [_diagram_count(s, cap) for s in range(budget + 1)]
            ways = [
                sum(ways[t] * counts[s - t] for t in range(s + 1))
                for s in range(budget + 1)
            ]
        total += ways[budget]
    return total


def a_infinity(r: int, j: int) -> int:
    """``A_{r,+inf}(j)``, read off the unbounded lattice theta series."""
    return coefficient(lattice_theta_sum(r, NEG_INFINITY, 0, j), j)


def rank1_bijection(v: ThetaVector | Sequence[int]) -> YoungDiagram:
    """Send a rank-one index vector with support ``i_1 < ... < i_d`` to the
    diagram whose ``t``-th column has ``i_t - t`` boxes."""
    if not isinstance(v, ThetaVector):
        v = ThetaVector.canonical(v)
    if any(k not in (0, 1) for k in v.entries):
        raise ValueError(f"rank-one vectors have entries in {{0, 1}}: {v.entries}")
    heights = [i - t for t, i in enumerate(v.support(), start=1)]
    return YoungDiagram.from_columns(heights)


def rank1_inverse(y: YoungDiagram, d: int) -> ThetaVector:
    """Inverse of :func:`rank1_bijection` on diagrams with at most ``d`` columns."""
    if y.columns > d:
        raise ValueError(f"diagram has {y.columns} columns, more than d = {d}")
    heights = sorted(y.column_heights())
    heights = [0] * (d - len(heights)) + heights
    support = [h + t for t, h in enumerate(heights, start=1)]
    entries = [0] * (support[-1] if support else 0)
    for i in support:
        entries[i - 1] = 1
    return ThetaVector(tuple(entries))
