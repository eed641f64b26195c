"""Multiplicity bookkeeping for the recursive blow-up decomposition.

Starting from ``M^{d+1}(f^*w)`` the engine repeatedly rewrites a 1-stable
node ``M^1(f^*u - D ch(O_C(-1)))`` into ``C(w_0, k)`` copies of the 0-stable
nodes ``M^0(f^*u - (D + w_0 - k) ch(O_C(-1)))`` and re-twists every 0-stable
node with a nonzero exceptional part back to a 1-stable one. A 0-stable node
with no exceptional part is ``M_S(w + (0, 0, j))`` and is terminal.

Only classes are manipulated; the index ``j`` of a terminal node is read off
its second Chern character, and independently re-derived from the chosen
``k`` sequence as a consistency check.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from .chern import (
    BaseClass,
    BlowupClass,
    SurfaceInvariants,
    discriminant,
    pullback,
    require_assumption,
    twist,
)

__all__ = [
    "ResourceGuardError",
    "SODNode",
    "SODState",
    "SODResult",
    "seed",
    "expand_step",
    "run",
    "terminal_multiplicities",
    "DEFAULT_MAX_NODES",
]

DEFAULT_MAX_NODES = 2_000_000


class ResourceGuardError(RuntimeError):
    pass


@dataclass(frozen=True)
class SODNode:
    id: int
    level: str  # "M0" or "M1"
    cls: BlowupClass
    depth: int
    accumulated: tuple[int, ...] = ()

    @property
    def deficit(self) -> int:
        """Multiple of ``ch(O_C(-1))`` subtracted from the pullback part."""
        return -self.cls.c_coeff

    def base_part(self) -> BaseClass:
        """``u`` in ``f^*u - D ch(O_C(-1))``."""
        ch2 = self.cls.ch2 + Fraction(self.cls.c_coeff, 2)
        return BaseClass(self.cls.rank, self.cls.h_dot_c1, self.cls.c1_sq, ch2)


@dataclass
class SODState:
    w: BaseClass
    d: int
    pending: deque = field(default_factory=deque)
    terminal: dict[int, int] = field(default_factory=dict)
    steps: list[dict[str, Any]] = field(default_factory=list)
    surface: SurfaceInvariants | None = None
    max_nodes: int = DEFAULT_MAX_NODES
    _next_id: int = 0

    @property
    def rank(self) -> int:
        return self.w.rank

    @property
    def total_units(self) -> int:
        return self.w.rank * (self.d + 1)

    @property
    def weight_offset(self) -> int:
        r, d = self.w.rank, self.d
        return r * (d + 1) * (d + 2) // 2

    def new_node(self, level, cls, depth, accumulated) -> SODNode:
        if self._next_id >= self.max_nodes:
            raise ResourceGuardError(f"node budget of {self.max_nodes} exhausted")
        node = SODNode(self._next_id, level, cls, depth, accumulated)
        self._next_id += 1
        return node

    @property
    def nodes_created(self) -> int:
        return self._next_id

    def expected_dim(self, node: SODNode) -> int | None:
        if self.surface is None or node.deficit < 0:
            return None
        u = node.base_part()
        r = u.rank
        dim = (
            discriminant(u)
            - (r * r - 1) * self.surface.chi_O
            + self.surface.h1_O
            - node.deficit * (r + node.deficit)
        )
        return int(dim) if dim.denominator == 1 else None


@dataclass
class SODResult:
    state: SODState
    j_max: int

    @property
    def terminal(self) -> dict[int, int]:
        return dict(sorted(self.state.terminal.items()))

    def multiplicities(self) -> list[int]:
        return [self.state.terminal.get(j, 0) for j in range(self.j_max + 1)]

    def terminal_rows(self) -> list[dict[str, Any]]:
        rows = []
        for j, mult in sorted(self.state.terminal.items()):
            row: dict[str, Any] = {"j": j, "multiplicity": str(mult)}
            s = self.state.surface
            if s is not None:
                w = self.state.w.shift_ch2(j)
                r = w.rank
                dim = discriminant(w) - (r * r - 1) * s.chi_O + s.h1_O
                row["expected_dim"] = int(dim) if dim.denominator == 1 else str(dim)
                row["empty"] = bool(dim < 0)
            rows.append(row)
        return rows

    def to_dict(self) -> dict[str, Any]:
        w = self.state.w
        return {
            "seed": {
                "w0": w.rank,
                "h_dot_c1": w.h_dot_c1,
                "c1_sq": w.c1_sq,
                "ch2_num": w.ch2.numerator,
                "ch2_den": w.ch2.denominator,
                "d": self.state.d,
            },
            "j_max": self.j_max,
            "steps": self.state.steps,
            "terminal": self.terminal_rows(),
        }

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault("indent", 2)
        return json.dumps(self.to_dict(), **kwargs)


def _cheapest_completion(units: int, next_index: int, cap: int) -> int:
    # least extra weight sum(i*k_i) for placing `units` at next_index, next_index+1, ...
    weight = 0
    i = next_index
    while units > 0:
        take = min(cap, units)
        weight += i * take
        units -= take
        i += 1
    return weight


def seed(
    w: BaseClass,
    d: int,
    surface: SurfaceInvariants | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> SODState:
    """State holding the single 1-stable node isomorphic to ``M^{d+1}(f^*w)``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    require_assumption(w, surface)
    state = SODState(w=w, d=d, surface=surface, max_nodes=max_nodes)
    # M^{d+1}(v) = M^1(v . e^{-dC})
    cls = twist(pullback(w), d)
    shifted = w.shift_ch2(Fraction(-w.rank * d * (d + 1), 2))
    expected = BlowupClass(
        w.rank, w.h_dot_c1, w.c1_sq, -w.rank * d, shifted.ch2 + Fraction(w.rank * d, 2)
    )
    assert cls == expected, (cls, expected)
    node = state.new_node("M1", cls, 0, ())
    state.pending.append((node, 1))
    return state


def expand_step(state: SODState, j_max: int) -> SODState:
    """Rewrite the oldest pending 1-stable node; mutates and returns ``state``."""
    node, mult = state.pending.popleft()
    r = state.rank
    u = node.base_part()
    children = []
    for k in range(r + 1):
        deficit = node.deficit + r - k
        if deficit < 0:
            # Quot of negative rank: no summand
            continue
        cls = BlowupClass(u.rank, u.h_dot_c1, u.c1_sq, -deficit, u.ch2 + Fraction(deficit, 2))
        child = state.new_node("M0", cls, node.depth + 1, node.accumulated + (k,))
        children.append((child, mult * comb(r, k)))
    state.steps.append(
        {
            "parent_id": node.id,
            "rule": "prop5.1",
            "children": [
                _child_record(state, c, k_mult) for c, k_mult in children
            ],
        }
    )
    for child, cmult in children:
        _settle(state, child, cmult, j_max)
    return state


def _child_record(state: SODState, node: SODNode, mult: int) -> dict[str, Any]:
    rec: dict[str, Any] = {"id": node.id, "k": node.accumulated[-1], "multiplicity": str(mult)}
    dim = state.expected_dim(node)
    if dim is not None:
        rec["expected_dim"] = dim
        rec["empty"] = dim < 0
    return rec


def _settle(state: SODState, node: SODNode, mult: int, j_max: int) -> None:
    ks = node.accumulated
    weight = sum(i * k for i, k in enumerate(ks, start=1))
    if node.deficit == 0:
        j_frac = node.cls.ch2 - state.w.ch2
        j = weight - state.weight_offset
        if j_frac != j:
            raise AssertionError(f"terminal index mismatch: ch2 gives {j_frac}, k gives {j}")
        if 0 <= j <= j_max:
            state.terminal[j] = state.terminal.get(j, 0) + mult
            rule = "terminal"
        else:
            rule = "prune"
        state.steps.append(
            {
                "parent_id": node.id,
                "rule": rule,
                "j": j,
                "children": [],
                "multiplicity": str(mult),
                "k_vector": list(ks),
            }
        )
        return
    bound = weight + _cheapest_completion(node.deficit, len(ks) + 1, state.rank)
    if bound - state.weight_offset > j_max:
        state.steps.append(
            {"parent_id": node.id, "rule": "prune", "children": [], "multiplicity": str(mult)}
        )
        return
    # M^0(x) = M^1(x . e^{C})
    lifted = state.new_node("M1", twist(node.cls, -1), node.depth, ks)
    state.steps.append(
        {
            "parent_id": node.id,
            "rule": "twist",
            "children": [{"id": lifted.id, "k": None, "multiplicity": str(mult)}],
        }
    )
    state.pending.append((lifted, mult))


def run(
    w: BaseClass,
    d: int,
    j_max: int,
    surface: SurfaceInvariants | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> SODResult:
    """Expand ``M^{d+1}(f^*w)`` until nothing is pending.

    Terminal multiplicities are kept for ``0 <= j <= j_max``.
    """
    state = seed(w, d, surface=surface, max_nodes=max_nodes)
    while state.pending:
        expand_step(state, j_max)
    return SODResult(state, j_max)


def _representative_class(r: int) -> tuple[BaseClass, SurfaceInvariants | None]:
    if r == 1:
        return BaseClass.hilbert(0), None
    from .chern import PRESETS

    return BaseClass(r, 1, 0, Fraction(0)), PRESETS["k3"]


def terminal_multiplicities(r: int, level: int, j_max: int, **kwargs) -> list[int]:
    """Multiplicities of ``M_S(w + (0,0,j))`` inside ``M^{level}(f^*w)`` for a
    representative rank-``r`` class; they do not depend on the class.

    ``level = 0`` is ``M^0(f^*w) = M_S(w)`` itself.
    """
    if level == 0:
        return [1] + [0] * j_max
    w, surface = _representative_class(r)
    return run(w, level - 1, j_max, surface=surface, **kwargs).multiplicities()
