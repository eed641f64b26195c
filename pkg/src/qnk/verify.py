"""Identity suites shared by the command line and the test-suite.

Each suite returns a list of :class:`Check` records, one per identity
instance, so failures can be reported with their exact parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import partitions as pc
from . import series as sc
from .chern import (
    PRESETS,
    BaseClass,
    SurfaceInvariants,
    moduli_dimension,
    quot_expected_dims,
)
from .sod import terminal_multiplicities

__all__ = [
    "Check",
    "SUITES",
    "check_lemma53",
    "check_bijection",
    "check_quadratic_form",
    "check_thm52",
    "check_euler",
    "check_stabilize",
    "check_dims",
    "run_suite",
]


@dataclass
class Check:
    suite: str
    identity: str
    params: dict[str, Any]
    expected: Any
    actual: Any
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = self.expected == self.actual

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "identity": self.identity,
            "params": dict(sorted(self.params.items())),
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "ok": self.ok,
        }


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def check_lemma53(rmax: int, dmax: int, jmax: int) -> list[Check]:
    """A_tilde = A = generating-function coefficient, term by term."""
    out = []
    for r in range(1, rmax + 1):
        for d in range(dmax + 1):
            theta = sc.lattice_theta_sum(r, -d, d, jmax)
            for j in range(jmax + 1):
                p = {"r": r, "d": d, "j": j}
                tilde = pc.a_tilde(r, d, j)
                out.append(Check("lemma53", "a_tilde == a_count", p, tilde, pc.a_count(r, d, j)))
                out.append(Check("lemma53", "a_tilde == genfun", p, tilde, theta[j]))
    return out


def check_bijection(dmax: int, jmax: int) -> list[Check]:
    """The rank-one map hits every diagram with |Y| = j and c(Y) <= d once."""
    out = []
    for d in range(dmax + 1):
        for j in range(jmax + 1):
            p = {"d": d, "j": j}
            vectors = pc.enumerate_theta(1, d, j)
            images = [pc.rank1_bijection(v) for v in vectors]
            target = sorted(pc.young_diagrams(j, d))
            out.append(Check("lemma53", "bijection image", p, target, sorted(images)))
            out.append(Check("lemma53", "bijection injective", p, len(images), len(set(images))))
            back = [pc.rank1_inverse(y, d) for y in images]
            out.append(Check("lemma53", "inverse after forward", p, vectors, back))
            fwd = [pc.rank1_bijection(pc.rank1_inverse(y, d)) for y in target]
            out.append(Check("lemma53", "forward after inverse", p, target, fwd))
    return out


def sample_zero_offset_vectors(rng: random.Random, count: int, rmax: int = 5, bound: int = 10):
    """Random ``(r, d, m)`` with ``m`` in ``[-bound, bound]^r`` and ``sum m = r d``."""
    out = []
    while len(out) < count:
        r = rng.randint(1, rmax)
        m = [rng.randint(-bound, bound) for _ in range(r)]
        if sum(m) % r:
            continue
        out.append((r, sum(m) // r, tuple(m)))
    return out


def check_quadratic_form(samples: int = 1000, seed: int = 0) -> list[Check]:
    out = []
    rng = random.Random(seed)
    for r, d, m in sample_zero_offset_vectors(rng, samples):
        lhs = sum((a - b) ** 2 for a in m for b in m)
        rhs = 2 * r * sum(a * a for a in m) - 2 * r * r * d * d
        out.append(Check("lemma53", "quadratic form", {"r": r, "d": d, "m": list(m)}, rhs, lhs))
        shifted = pc.pairing([a - d for a in m])
        out.append(Check("lemma53", "pairing shift invariance", {"r": r, "m": list(m)}, pc.pairing(m), shifted))
    return out


def check_thm52(rmax: int, dmax: int, jmax: int) -> list[Check]:
    """Engine terminal multiplicities against A_tilde at level d (= d'+1)."""
    out = []
    for r in range(1, rmax + 1):
        for level in range(1, dmax + 1):
            mults = terminal_multiplicities(r, level, jmax)
            for j in range(jmax + 1):
                p = {"r": r, "d": level, "j": j}
                out.append(Check("thm52", "sod == a_tilde", p, pc.a_tilde(r, level, j), mults[j]))
    return out


def _surfaces(surface: str | None) -> list[SurfaceInvariants]:
    if surface in (None, "all"):
        return [PRESETS[k] for k in sorted(PRESETS)]
    return [PRESETS[surface.lower()]]


def check_euler(surface: str | None, order: int, kmax: int = 6) -> list[Check]:
    """Blow-up formula, its M^k refinement, and the decomposition's Euler shadow."""
    out = []
    p_inf = sc.euler_product_inv(sc.INFINITY, 1, order)
    for s in _surfaces(surface):
        z_s = sc.goettsche_series(s.euler, order)
        z_hat = sc.goettsche_series(s.euler + 1, order)
        prod = sc.series_mul(p_inf, z_s)
        for n in range(order + 1):
            p = {"surface": s.name, "n": n}
            out.append(Check("euler", "Z_hat == P * Z_S", p, z_hat[n], prod[n]))
            conv = sum(pc.partition_count(j) * z_s[n - j] for j in range(n + 1))
            out.append(Check("euler", "Z_hat == sum p(j) Z_S", p, z_hat[n], conv))
        for k in range(kmax + 1):
            nk = sc.nk_series(k, s.euler, order)
            a_k = terminal_multiplicities(1, k, order) if k else [1] + [0] * order
            for n in range(order + 1):
                p = {"surface": s.name, "k": k, "n": n}
                conv = sum(a_k[j] * z_s[n - j] for j in range(n + 1))
                out.append(Check("euler", "M^k series == sum A_k(j) Z_S", p, nk[n], conv))
    return out


def check_stabilize(rmax: int, dmax: int) -> list[Check]:
    out = []
    for r in range(1, rmax + 1):
        inf = sc.lattice_theta_sum(r, sc.NEG_INFINITY, 0, dmax)
        for d in range(dmax + 1):
            for j in range(d + 1):
                p = {"r": r, "d": d, "j": j}
                out.append(Check("stabilize", "A_{r,d} == A_{r,inf}", p, inf[j], pc.a_count(r, d, j)))
    return out


def check_dims(surface: str, w: BaseClass, dmax: int) -> list[Check]:
    """Dimension ledger of M^k(v_d) for d = 0..dmax."""
    s = PRESETS[surface.lower()]
    out = []
    base = moduli_dimension(w, 0, s)
    for d in range(dmax + 1):
        dim = moduli_dimension(w, d, s)
        p = {"surface": s.name, "d": d, "dim": dim}
        out.append(Check("dims", "dim M^0(v_d) == dim Quot_d(K)", p, quot_expected_dims(base, w.rank, d)[1], dim))
        out.append(Check("dims", "dim M^1(v_d) == dim Quot_{d+w0}(G)", p, quot_expected_dims(base, w.rank, d + w.rank)[0], dim))
        if d < dmax:
            step = dim - moduli_dimension(w, d + 1, s)
            out.append(Check("dims", "dim drop == w0 + 2d + 1", p, w.rank + 2 * d + 1, step))
    return out


SUITES = ("lemma53", "thm52", "euler", "stabilize", "dims")


def run_suite(
    name: str,
    rmax: int = 3,
    dmax: int = 5,
    jmax: int = 10,
    order: int = 20,
    surface: str | None = None,
    w: BaseClass | None = None,
    samples: int = 1000,
    seed: int = 0,
) -> list[Check]:
    if name == "all":
        out = []
        for suite in SUITES:
            out.extend(run_suite(suite, rmax, dmax, jmax, order, surface, w, samples, seed))
        return out
    if name == "lemma53":
        return (
            check_lemma53(rmax, dmax, jmax)
            + check_bijection(dmax, jmax)
            + check_quadratic_form(samples, seed)
        )
    if name == "thm52":
        return check_thm52(rmax, dmax, jmax)
    if name == "euler":
        return check_euler(surface, order)
    if name == "stabilize":
        return check_stabilize(rmax, dmax)
    if name == "dims":
        surf = surface if surface not in (None, "all") else "k3"
        return check_dims(surf, w if w is not None else BaseClass.hilbert(5), dmax)
    raise ValueError(f"unknown suite {name!r}")
