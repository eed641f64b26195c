"""Brute-force references used to freeze expected values in the tests.

Nothing here imports the package under test.
"""

from itertools import combinations, combinations_with_replacement, product
from math import comb


def brute_partitions(n, max_part=None):
    """All partitions of n (as descending tuples), built by adding parts in
    ascending order, then filtered by the largest part."""
    def grow(left, smallest):
        if left == 0:
            yield ()
            return
        for part in range(smallest, left + 1):
            for rest in grow(left - part, part):
                yield (part,) + rest

    found = [tuple(reversed(p)) for p in grow(n, 1)]
    if max_part is not None:
        found = [p for p in found if not p or p[0] <= max_part]
    return sorted(found)


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        for k, y in enumerate(b):
            if i + k <= order:
                out[i + k] += x * y
    return out


def euler_product_naive(top, power, order):
    """prod_{d=1}^{top} (1 - q^d)^{-power}, expanding each geometric factor."""
    out = [1] + [0] * order
    for d in range(1, top + 1):
        geo = [1 if n % d == 0 else 0 for n in range(order + 1)]
        for _ in range(power):
            out = poly_mul(out, geo, order)
    return out


def brute_theta(r, d, j):
    """Canonical Theta vectors: choose rd indices with repetition (each at most
    r times) whose sum is the target weight."""
    target = j + r * d * (d + 1) // 2
    if r * d == 0:
        return [()] if j == 0 else []
    found = []
    for idx in combinations_with_replacement(range(1, target + 1), r * d):
        if sum(idx) != target:
            continue
        v = [0] * max(idx)
        for i in idx:
            v[i - 1] += 1
        if max(v) <= r:
            found.append(tuple(v))
    return found


def brute_a_tilde(r, d, j):
    total = 0
    for v in brute_theta(r, d, j):
        w = 1
        for k in v:
            w *= comb(r, k)
        total += w
    return total


def brute_a_count(r, d, j):
    """Count (m_a, Y_a) tuples directly from the definition."""
    from fractions import Fraction

    total = 0
    for m in product(range(r * d + 1), repeat=r):
        if sum(m) != r * d:
            continue
        pair = Fraction(sum((a - b) ** 2 for a in m for b in m), 2 * r)
        budget = j - pair / 2
        if budget < 0 or budget.denominator != 1:
            continue
        budget = int(budget)
        # distribute `budget` boxes over the r diagrams
        for sizes in product(range(budget + 1), repeat=r):
            if sum(sizes) != budget:
                continue
            ways = 1
            for s, cap in zip(sizes, m):
                ways *= len(brute_partitions(s, cap))
            total += ways
    return total


def increasing_sequences(d, total):
    """Strictly increasing positive d-tuples with the given sum."""
    return [c for c in combinations(range(1, total + 1), d) if sum(c) == total]
