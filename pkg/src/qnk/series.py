"""Truncated power series in ``q`` with exact integer coefficients.

All generating functions of the package live here: Euler products,
the Hilbert-scheme series of a surface and the lattice/theta sums that
produce the blow-up multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Sequence

__all__ = [
    "INFINITY",
    "NEG_INFINITY",
    "QSeries",
    "series_mul",
    "inv_one_minus_qd",
    "euler_product_inv",
    "goettsche_series",
    "blowup_series",
    "nk_series",
    "lattice_vectors",
    "lattice_theta_sum",
    "coefficient",
]

INFINITY = float("inf")
NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class QSeries:
    """``c_0 + c_1 q + ... + c_N q^N`` modulo ``q^{N+1}``."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], order: int) -> "QSeries":
        """Pad with zeros or truncate ``coeffs`` to exactly ``order``."""
        c = list(coeffs[: order + 1])
        c.extend([0] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls.from_coeffs([], order)

    @classmethod
    def monomial(cls, n: int, order: int, c: int = 1) -> "QSeries":
        if n < 0:
            raise ValueError("negative exponent")
        if n > order:
            return cls.zero(order)
        coeffs = [0] * (order + 1)
        coeffs[n] = c
        return cls(order, tuple(coeffs))

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(
                f"cannot raise truncation order from {self.order} to {order}"
            )
        return QSeries(order, self.coeffs[: order + 1])

    def __getitem__(self, n: int) -> int:
        return coefficient(self, n)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def _coerce(self, other):
        if isinstance(other, int):
            return self, QSeries.from_coeffs([other], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        return QSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.order, tuple(other * c for c in self.coeffs))
        if not isinstance(other, QSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            raise ValueError("negative powers need an explicit inverse")
        result = QSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"QSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"{c}*q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated Cauchy product; mixed orders truncate to the smaller one."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    for i in range(n + 1):
        ai = ac[i]
        if not ai:
            continue
        for k in range(n + 1 - i):
            bk = bc[k]
            if bk:
                out[i + k] += ai * bk
    return QSeries(n, tuple(out))


def inv_one_minus_qd(d: int, order: int) -> QSeries:
    """Geometric series ``1/(1 - q^d)``."""
    if d < 1:
        raise ValueError(f"1/(1 - q^{d}) is not a power series unit for d < 1")
    coeffs = [0] * (order + 1)
    for n in range(0, order + 1, d):
        coeffs[n] = 1
    return QSeries(order, tuple(coeffs))


def _mul_inv_one_minus_qd_inplace(c: list[int], d: int) -> None:
    # c <- c / (1 - q^d): running sum with stride d
    for n in range(d, len(c)):
        c[n] += c[n - d]


def _mul_one_minus_qd_inplace(c: list[int], d: int) -> None:
    for n in range(len(c) - 1, d - 1, -1):
        c[n] -= c[n - d]


def euler_product_inv(k, power: int, order: int) -> QSeries:
    """``(prod_{d=1}^{k} 1/(1-q^d))^power``; ``k=INFINITY`` runs d up to ``order``.

    ``power`` may be zero or negative (negative powers expand the product
    of ``(1 - q^d)`` directly).
    """
    if k == INFINITY:
        top = order
    else:
        if k < 0:
            raise ValueError(f"k must be non-negative or INFINITY, got {k}")
        top = min(int(k), order)
    c = [0] * (order + 1)
    c[0] = 1
    step = _mul_inv_one_minus_qd_inplace if power >= 0 else _mul_one_minus_qd_inplace
    for d in range(1, top + 1):
        for _ in range(abs(power)):
            step(c, d)
    return QSeries(order, tuple(c))


def goettsche_series(e_S: int, order: int) -> QSeries:
    """Generating series of Euler characteristics of ``Hilb^n(S)`` for ``e(S) = e_S``."""
    return euler_product_inv(INFINITY, e_S, order)


def blowup_series(e_S: int, order: int) -> QSeries:
    """Right-hand side of the blow-up formula: one extra Euler product times ``Z_S``."""
    return series_mul(euler_product_inv(INFINITY, 1, order), goettsche_series(e_S, order))


def nk_series(k: int, e_S: int, order: int) -> QSeries:
    """Euler characteristics of the ``M^k(1, 0, -n)`` moduli, summed over ``n``."""
    return series_mul(euler_product_inv(k, 1, order), goettsche_series(e_S, order))


def lattice_vectors(r: int, floor, max_norm: int) -> list[tuple[int, ...]]:
    """Zero-sum vectors ``m`` of length ``r`` with ``m_a >= floor`` and ``sum m_a^2 <= max_norm``.

    Returned in lexicographic order. ``floor`` may be ``NEG_INFINITY``.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    if max_norm < 0:
        return []
    bound = isqrt(max_norm)
    lo_floor = -bound if floor == NEG_INFINITY else max(int(floor), -bound)
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(pos: int, partial_sum: int, partial_norm: int) -> None:
        left = r - pos
        if left == 1:
            last = -partial_sum
            if last >= lo_floor and partial_norm + last * last <= max_norm:
                out.append(tuple(prefix) + (last,))
            return
        budget = max_norm - partial_norm
        b = isqrt(budget)
        for x in range(max(lo_floor, -b), b + 1):
            # the remaining left-1 entries must sum to -(partial_sum+x);
            # their squared norm is at least s^2/(left-1)
            s = partial_sum + x
            rest = budget - x * x
            if s * s > rest * (left - 1):
                continue
            if -s < lo_floor * (left - 1):
                continue
            prefix.append(x)
            rec(pos + 1, s, partial_norm + x * x)
            prefix.pop()

    rec(0, 0, 0)
    return out


def lattice_theta_sum(r: int, floor, d: int, order: int) -> QSeries:
    """Blow-up multiplicity series for rank ``r``.

    With a finite floor this is the sum over zero-sum ``m`` with
    ``m_a >= -d`` of ``prod_a prod_{k<=m_a+d} 1/(1-q^k)`` times
    ``q^{sum m_a^2 / 2}``. With ``floor=NEG_INFINITY`` the ``m`` range over
    all zero-sum vectors and the prefactor is the full Euler product to the
    power ``r``. The ``floor`` argument is ``-d`` in the finite case; passing
    any other finite value is rejected.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    infinite = floor == NEG_INFINITY
    if not infinite:
        if d < 0:
            raise ValueError("d must be non-negative")
        if floor != -d:
            raise ValueError(f"finite floor must equal -d = {-d}, got {floor}")
    total = [0] * (order + 1)
    cache: dict[int, QSeries] = {}
    for m in lattice_vectors(r, floor, 2 * order):
        norm = sum(x * x for x in m)
        if norm % 2:
            raise ArithmeticError(f"odd squared norm for zero-sum vector {m}")
        shift = norm // 2
        if infinite:
            total[shift] += 1
            continue
        prefactor = QSeries.monomial(shift, order)
        for x in m:
            cols = x + d
            if cols not in cache:
                cache[cols] = euler_product_inv(cols, 1, order)
            prefactor = series_mul(prefactor, cache[cols])
        for n, c in enumerate(prefactor.coeffs):
            total[n] += c
    theta = QSeries(order, tuple(total))
    if infinite:
        return series_mul(euler_product_inv(INFINITY, r, order), theta)
    return theta


def coefficient(s: QSeries, n: int) -> int:
    """Exact coefficient of ``q^n``; asking past the truncation order is an error."""
    if n < 0:
        raise IndexError(f"negative exponent {n}")
    if n > s.order:
        raise IndexError(f"q^{n} is beyond the truncation order {s.order}")
    return s.coeffs[n]
