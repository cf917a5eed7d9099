"""2-Disjoint Connected Subgraphs and the pair-guessing P4 algorithm built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import Graph, is_connected, iter_bits, mask_connected, reach
from .search import _Budget, _checked
from .witness import PatternSpec, WitnessStructure

__all__ = ["TwoDCSSolution", "solve_2dcs", "check_2dcs", "p4_contractible"]


@dataclass(frozen=True)
class TwoDCSSolution:
    a1: frozenset[str]
    a2: frozenset[str]


def check_2dcs(g: Graph, z1: Iterable, z2: Iterable, sol: TwoDCSSolution) -> bool:
    """True iff ``sol`` partitions ``g`` into connected sides holding the terminals."""
    z1, z2 = {str(x) for x in z1}, {str(x) for x in z2}
    if sol.a1 & sol.a2 or sol.a1 | sol.a2 != set(g.vertices):
        return False
    if not (z1 <= sol.a1 and z2 <= sol.a2):
        return False
    adj = g.adjacency
    return mask_connected(adj, g.mask(sol.a1)) and mask_connected(adj, g.mask(sol.a2))


def _validate_terminals(g: Graph, z1: Iterable, z2: Iterable) -> tuple[int, int]:
    z1, z2 = list(z1), list(z2)
    if not z1 or not z2:
        raise ValueError("terminal sets must be nonempty")
    m1, m2 = g.mask(z1), g.mask(z2)
    if m1 & m2:
        raise ValueError("terminal sets must be disjoint")
    return m1, m2


def _solve(adj: tuple[int, ...], full: int, z1: int, z2: int, budget: _Budget) -> tuple[int, int] | None:
    # s1/s2 are committed sides; everything else is still free
    def alive(side: int, other: int) -> int | None:
        territory = full & ~other
        r = reach(adj, side & -side, territory)
        return r if r & side == side else None

    def branch(s1: int, s2: int) -> tuple[int, int] | None:
        budget.tick()
        while True:
            r1 = alive(s1, s2)
            if r1 is None:
                return None
            r2 = alive(s2, s1)
            if r2 is None:
                return None
            free = full & ~(s1 | s2)
            # a free vertex one side cannot reach must join the other side
            only2 = free & ~r1
            only1 = free & ~r2
            if only1 & only2:
                return None
            if not (only1 | only2):
                break
            s1 |= only1
            s2 |= only2
        free = full & ~(s1 | s2)
        if not free:
            return s1, s2
        # grow side 1 along its boundary first
        frontier = 0
        for x in iter_bits(s1):
            frontier |= adj[x]
        frontier &= free
        pick = frontier & -frontier if frontier else free & -free
        return branch(s1 | pick, s2) or branch(s1, s2 | pick)

    return branch(z1, z2)


def solve_2dcs(
    g: Graph, z1: Iterable, z2: Iterable, *, budget: int | None = None
) -> TwoDCSSolution | None:
    """Partition ``g`` into connected ``a1 >= z1`` and ``a2 >= z2``, or return ``None``.

    Plain branch-and-prune over the non-terminal vertices; a branch dies as
    soon as one side's committed vertices fall apart inside the vertices the
    other side has not claimed.
    """
    m1, m2 = _validate_terminals(g, z1, z2)
    full = (1 << len(g)) - 1
    found = _solve(g.adjacency, full, m1, m2, _Budget(budget))
    if found is None:
        return None
    return TwoDCSSolution(g.names(found[0]), g.names(found[1]))


Solver2DCS = Callable[..., TwoDCSSolution | None]


def p4_contractible(
    g: Graph, *, budget: int | None = None, solver: Solver2DCS = solve_2dcs
) -> WitnessStructure | None:
    """Decide P4-contractibility by guessing the end vertices of the path.

    For each non-adjacent pair ``u < v`` with disjoint, nonempty
    neighbourhoods, ask whether ``g - {u, v}`` splits into two connected sets
    containing ``N(u)`` and ``N(v)`` respectively.  ``solver`` is any function
    with the signature of :func:`solve_2dcs`.
    """
    if len(g) < 4 or not is_connected(g):
        return None
    pattern = PatternSpec.path(4)
    names = g.vertices
    for i, u in enumerate(names):
        nu = g.neighbours(u)
        if not nu:
            continue
        for v in names[i + 1:]:
            nv = g.neighbours(v)
            if not nv or v in nu or nu & nv:
                continue
            rest = g.remove_vertices([u, v])
            sol = solver(rest, nu, nv, budget=budget)
            if sol is None:
                continue
            ws = WitnessStructure(pattern, {"p1": [u], "p2": sol.a1, "p3": sol.a2, "p4": [v]})
            return _checked(g, ws)
    return None

