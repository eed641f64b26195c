"""Numerical Chern characters on a surface ``S`` and its one-point blow-up.

A class on the blow-up is ``f^*w_1 + a C`` in degree two, where ``C`` is the
exceptional curve; only the intersection numbers ``C^2 = -1``,
``f^*D . C = 0`` and ``f^*D . f^*D' = D . D'`` are ever used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import NamedTuple

__all__ = [
    "AssumptionError",
    "SurfaceKind",
    "SurfaceInvariants",
    "PRESETS",
    "del_pezzo",
    "surface_preset",
    "BaseClass",
    "BlowupClass",
    "Validation",
    "validate_assumption",
    "require_assumption",
    "discriminant",
    "moduli_dimension",
    "quot_expected_dims",
    "exceptional_sheaf_ch",
    "CH_OC_MINUS_1",
    "pullback",
    "class_vd",
    "twist",
]


class AssumptionError(ValueError):
    """The class/surface pair violates the smoothness assumption."""


class SurfaceKind(enum.Enum):
    DEL_PEZZO = "del_pezzo"
    K3 = "k3"
    ABELIAN = "abelian"
    OTHER = "other"


_FIXED = {
    SurfaceKind.K3: (24, 2, 0),
    SurfaceKind.ABELIAN: (0, 0, 2),
}


@dataclass(frozen=True)
class SurfaceInvariants:
    euler: int
    chi_O: int
    h1_O: int
    kind: SurfaceKind = SurfaceKind.OTHER
    name: str = ""

    def __post_init__(self):
        if self.h1_O < 0:
            raise ValueError("h^1(O_S) must be non-negative")
        fixed = _FIXED.get(self.kind)
        if fixed and (self.euler, self.chi_O, self.h1_O) != fixed:
            raise ValueError(
                f"{self.kind.value} surfaces have (e, chi(O), h^1(O)) = {fixed}, "
                f"got {(self.euler, self.chi_O, self.h1_O)}"
            )
        if self.kind is SurfaceKind.DEL_PEZZO:
            if (self.chi_O, self.h1_O) != (1, 0) or not 3 <= self.euler <= 11:
                raise ValueError(
                    "del Pezzo surfaces have chi(O) = 1, h^1(O) = 0 and 3 <= e <= 11"
                )

    @property
    def k_squared(self) -> int:
        """``K_S^2`` from Noether's formula."""
        return 12 * self.chi_O - self.euler


def del_pezzo(degree: int) -> SurfaceInvariants:
    """Del Pezzo surface with ``K^2 = degree`` (so ``e = 12 - degree``)."""
    if not 1 <= degree <= 9:
        raise ValueError(f"del Pezzo degree must be in 1..9, got {degree}")
    return SurfaceInvariants(12 - degree, 1, 0, SurfaceKind.DEL_PEZZO, f"dP{degree}")


PRESETS: dict[str, SurfaceInvariants] = {
    "p2": SurfaceInvariants(3, 1, 0, SurfaceKind.DEL_PEZZO, "p2"),
    "p1xp1": SurfaceInvariants(4, 1, 0, SurfaceKind.DEL_PEZZO, "p1xp1"),
    "cubic": SurfaceInvariants(9, 1, 0, SurfaceKind.DEL_PEZZO, "cubic"),
    "k3": SurfaceInvariants(24, 2, 0, SurfaceKind.K3, "k3"),
    "abelian": SurfaceInvariants(0, 0, 2, SurfaceKind.ABELIAN, "abelian"),
}


def surface_preset(name: str) -> SurfaceInvariants:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise KeyError(
            f"unknown surface {name!r}; choose from {', '.join(sorted(PRESETS))}"
        ) from None


@dataclass(frozen=True)
class BaseClass:
    """``w = (w_0, w_1, w_2)`` on ``S``, remembered through ``H.w_1`` and ``w_1^2``."""

    rank: int
    h_dot_c1: int
    c1_sq: int
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ch2", Fraction(self.ch2))

    @classmethod
    def hilbert(cls, n: int) -> "BaseClass":
        """Ideal sheaves of ``n`` points: ``(1, 0, -n)``."""
        return cls(1, 0, 0, Fraction(-n))

    def shift_ch2(self, j) -> "BaseClass":
        """``w + (0, 0, j)``."""
        return replace(self, ch2=self.ch2 + Fraction(j))


@dataclass(frozen=True)
class BlowupClass:
    """``f^*(rank, w_1) + c_coeff * C`` with total second Chern character ``ch2``."""

    rank: int
    h_dot_c1: int
    c1_sq: int
    c_coeff: int
    ch2: Fraction

    def __post_init__(self):
        ch2 = Fraction(self.ch2)
        if 2 % ch2.denominator:
            raise ArithmeticError(f"ch2 = {ch2} has denominator not dividing 2")
        object.__setattr__(self, "ch2", ch2)

    @property
    def ch1_sq(self) -> int:
        return self.c1_sq - self.c_coeff * self.c_coeff

    def ch1_dot_c(self) -> int:
        return -self.c_coeff

    def to_base(self) -> BaseClass:
        """The class on ``S`` when there is no exceptional part."""
        if self.c_coeff:
            raise ValueError("class has a nonzero exceptional component")
        return BaseClass(self.rank, self.h_dot_c1, self.c1_sq, self.ch2)


class Validation(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


def validate_assumption(w: BaseClass, s: SurfaceInvariants | None = None) -> Validation:
    """Check positivity of rank, ``gcd(w_0, H.w_1) = 1`` and the surface clause.

    The surface clause holds for ideal-sheaf-type classes ``w_0 = 1, w_1 = 0``
    on any surface, otherwise only on del Pezzo, K3 and abelian surfaces.
    """
    if w.rank <= 0:
        return Validation(False, f"positivity clause: w0 = {w.rank} is not positive")
    if gcd(w.rank, w.h_dot_c1) != 1:
        return Validation(
            False, f"gcd clause: gcd(w0, H.w1) = gcd({w.rank}, {w.h_dot_c1}) != 1"
        )
    if w.rank == 1 and w.h_dot_c1 == 0 and w.c1_sq == 0:
        return Validation(True, "rank one with w1 = 0")
    kind = s.kind if s is not None else SurfaceKind.OTHER
    if kind is SurfaceKind.OTHER:
        return Validation(
            False,
            "surface clause: (w0, w1) != (1, 0) needs a del Pezzo, K3 or abelian surface",
        )
    return Validation(True, f"{kind.value} surface")


def require_assumption(w: BaseClass, s: SurfaceInvariants | None = None) -> None:
    v = validate_assumption(w, s)
    if not v:
        raise AssumptionError(v.reason)


def discriminant(w: BaseClass) -> Fraction:
    return w.c1_sq - 2 * w.rank * w.ch2


def moduli_dimension(w: BaseClass, d: int, s: SurfaceInvariants) -> int:
    """Dimension of ``M^k(f^*w - d ch(O_C(-1)))`` when nonempty.

    The value may be negative; callers decide what that means.
    """
    require_assumption(w, s)
    r = w.rank
    dim = discriminant(w) - (r * r - 1) * s.chi_O + s.h1_O - d * (r + d)
    if dim.denominator != 1:
        raise ValueError(f"non-integral dimension {dim}: inconsistent class {w}")
    return dim.numerator


def quot_expected_dims(dim_X, delta, d):
    """Expected dimensions of ``Quot_d(G)`` and ``Quot_d(K)`` over a base of
    dimension ``dim_X`` where ``G`` has rank ``delta``. Accepts symbols too."""
    return dim_X + delta * d - d * d, dim_X - delta * d - d * d


def exceptional_sheaf_ch(m: int) -> tuple[int, int, Fraction]:
    """``(rank, C-coefficient of ch_1, ch_2)`` of ``O_C(m)``.

    Derived from Riemann-Roch on the blow-up: for a sheaf with
    ``ch = (0, C, x)`` one has ``chi = -K.C/2 + x = 1/2 + x``, and
    ``chi(O_C(m)) = m + 1`` because ``C`` is a smooth rational curve.
    """
    k_dot_c = -1  # adjunction on a (-1)-curve: K.C = -2 - C^2
    chi = m + 1
    ch2 = Fraction(chi) - Fraction(-k_dot_c, 2)
    return 0, 1, ch2


CH_OC_MINUS_1 = exceptional_sheaf_ch(-1)


def pullback(w: BaseClass) -> BlowupClass:
    return BlowupClass(w.rank, w.h_dot_c1, w.c1_sq, 0, w.ch2)


def class_vd(w: BaseClass, d: int) -> BlowupClass:
    """``v_d = f^*w - d * ch(O_C(-1))``."""
    _, c_part, ch2_part = CH_OC_MINUS_1
    return BlowupClass(w.rank, w.h_dot_c1, w.c1_sq, -d * c_part, w.ch2 - d * ch2_part)


def twist(v: BlowupClass, k: int) -> BlowupClass:
    """``v . e^{-kC}`` with ``e^{-kC} = (1, -kC, -k^2/2)``."""
    return replace(
        v,
        c_coeff=v.c_coeff - k * v.rank,
        ch2=v.ch2 + k * v.c_coeff - Fraction(v.rank * k * k, 2),
    )
