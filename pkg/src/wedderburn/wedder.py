"""Analytic Artin-Wedderburn solver.

Combines three exact ingredients: the block count and center degrees from
the q-power orbits, matrix blocks forced by doubly transitive permutation
actions, and the mass constraint sum(d * n^2) = |G|.  The solver enumerates
every assignment of matrix sizes to the remaining center-degree slots and
reports whether the constraints pin the decomposition uniquely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .charkit import deleted_module_check
from .cyclo import build_context, cyclotomic_partition, component_count_and_degrees
from .errors import ModularCaseError
from .perm import FiniteGroup, builtin_sl32_s8

__all__ = [
    "Component",
    "Decomposition",
    "SolverReport",
    "forced_components",
    "solve",
    "classify_type",
    "splitting_field_check",
    "is_sl32_class_data",
    "SL32_CLASS_SIZES",
]

SL32_CLASS_SIZES = (1, 21, 56, 42, 24, 24)
SL32_CLASS_ORDERS = (1, 2, 3, 4, 7, 7)


@dataclass(frozen=True)
class Component:
    """One simple block: an n x n matrix ring over the degree-d extension of
    the coefficient field."""

    n: int
    d: int

    def mass(self) -> int:
        return self.d * self.n * self.n

    def sort_key(self) -> tuple[int, int]:
        return (self.d, self.n)


@dataclass(frozen=True)
class Decomposition:
    """A full block decomposition; components are kept sorted by (d, n) and
    their masses must add up to the group order."""

    components: tuple[Component, ...]
    group_order: int
    p: int | None = None
    k: int | None = None

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=Component.sort_key))
        object.__setattr__(self, "components", comps)
        total = sum(c.mass() for c in comps)
        if total != self.group_order:
            raise ValueError(f"component masses sum to {total}, expected {self.group_order}")
        if Component(1, 1) not in comps:
            raise ValueError("decomposition is missing the trivial (1, 1) block")

    @property
    def q(self) -> int | None:
        if self.p is None or self.k is None:
            return None
        return self.p**self.k

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((c.n, c.d) for c in self.components)


@dataclass(frozen=True)
class SolverReport:
    solutions: tuple[Decomposition, ...]
    unique: bool
    forced: tuple[Component, ...]


def forced_components(G: FiniteGroup, p: int, actions) -> list[Component]:
    """Blocks forced a priori: the trivial block (1, 1), plus one block of
    size (points - 1) over the base field for every action whose deleted
    module certifies irreducible in characteristic p."""
    if G.order % p == 0:
        raise ModularCaseError(p, G.order)
    comps = [Component(1, 1)]
    for action in actions:
        _, ok = deleted_module_check(action, p)
        if ok:
            comps.append(Component(action.degree - 1, 1))
    return comps


def solve(group_order: int, degrees, forced, p: int | None = None, k: int | None = None) -> SolverReport:
    """Enumerate all decompositions consistent with the given center degrees
    and forced blocks.

    Every forced block consumes one degree-1 slot.  The remaining slots are
    filled with all matrix sizes n >= 1 such that the total mass equals the
    group order; solutions are deduplicated as multisets.
    """
    degrees = sorted(degrees)
    forced = tuple(sorted(forced, key=Component.sort_key))
    for c in forced:
        if c.d != 1:
            raise ValueError(f"forced component {c} must sit over a degree-1 slot")
    ones = sum(1 for d in degrees if d == 1)
    if len(forced) > ones:
        raise ValueError(
            f"{len(forced)} forced components exceed the {ones} available degree-1 slots"
        )
    forced_mass = sum(c.mass() for c in forced)
    if forced_mass > group_order:
        raise ValueError(f"forced mass {forced_mass} exceeds group order {group_order}")
    remaining = list(degrees)
    for _ in range(len(forced)):
        remaining.remove(1)
    groups = sorted({d: remaining.count(d) for d in remaining}.items())
    target = group_order - forced_mass
    # minimal mass still owed by groups gi.. (every slot holds at least n = 1)
    suffix_min = [0] * (len(groups) + 1)
    for gi in range(len(groups) - 1, -1, -1):
        d, cnt = groups[gi]
        suffix_min[gi] = suffix_min[gi + 1] + d * cnt
    solutions: list[tuple[Component, ...]] = []
    chosen: list[Component] = []

    def assign_group(gi: int, rem: int):
        if gi == len(groups):
            if rem == 0:
                solutions.append(tuple(chosen))
            return
        d, cnt = groups[gi]

        def assign_slot(j: int, rem2: int, last: int):
            if j == cnt:
                assign_group(gi + 1, rem2)
                return
            reserve = (cnt - j - 1) * d + suffix_min[gi + 1]
            budget = rem2 - reserve
            if budget < d:
                return
            nmax = min(last, math.isqrt(budget // d))
            for n in range(nmax, 0, -1):
                chosen.append(Component(n, d))
                assign_slot(j + 1, rem2 - d * n * n, n)
                chosen.pop()

        assign_slot(0, rem, math.isqrt(max(target, 0)))

    assign_group(0, target)
    decs = tuple(
        Decomposition(components=forced + sol, group_order=group_order, p=p, k=k)
        for sol in sorted(solutions, key=lambda s: tuple(c.sort_key() for c in sorted(s, key=Component.sort_key)))
    )
    return SolverReport(solutions=decs, unique=len(decs) == 1, forced=forced)


def is_sl32_class_data(G: FiniteGroup) -> bool:
    """Whether the group carries the class statistics of SL(3,2): order 168
    with six classes of sizes (1, 21, 56, 42, 24, 24) and element orders
    (1, 2, 3, 4, 7, 7)."""
    return (
        G.order == 168
        and tuple(c.size for c in G.classes) == SL32_CLASS_SIZES
        and tuple(c.element_order for c in G.classes) == SL32_CLASS_ORDERS
    )


@lru_cache(maxsize=None)
def _order7_class_indices() -> tuple[int, int]:
    G = builtin_sl32_s8()
    idx = tuple(i for i, c in enumerate(G.classes) if c.element_order == 7)
    if len(idx) != 2:
        raise AssertionError("SL(3,2) must have exactly two classes of order-7 elements")
    return idx


def classify_type(p: int, k: int) -> int:
    """SL(3,2)-specific classification of (p, k): type 1 when every class is
    alone in its q-power orbit (six blocks over F_q), type 2 when the two
    order-7 classes fuse (five blocks, one of them over F_{q^2}).

    Computed from the group itself, never from a lookup table.
    """
    if p in (2, 3, 7):
        raise ModularCaseError(p, 168)
    G = builtin_sl32_s8()
    ctx = build_context(G, p, k)
    part = cyclotomic_partition(ctx)
    a, b = _order7_class_indices()
    merged = any(a in orbit and b in orbit for orbit in part.orbits)
    return 2 if merged else 1


def splitting_field_check(dec: Decomposition) -> bool:
    """True iff every block sits over the base field itself, equivalently
    sum(n^2) = |G|."""
    return all(c.d == 1 for c in dec.components)


def analytic_decomposition(G: FiniteGroup, p: int, k: int, actions) -> SolverReport:
    """The full analytic pipeline: center degrees from the q-power orbits,
    forced blocks from the given actions, then exhaustive mass assignment."""
    ctx = build_context(G, p, k)
    _, degrees = component_count_and_degrees(ctx)
    forced = forced_components(G, p, actions)
    return solve(G.order, degrees, forced, p=p, k=k)
