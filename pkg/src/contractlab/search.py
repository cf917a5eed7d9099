"""Exhaustive contractibility search.

Both solvers rest on one observation: contracting edges never increases
distances, so if ``x`` lands in class ``a`` and ``y`` in class ``b`` then
``dist_H(a, b) <= dist_G(x, y)``.  Each vertex carries a domain of classes it
may still join; fixing one vertex shrinks every other domain through this
distance bound, and a class whose fixed members cannot reach each other inside
its remaining territory kills the branch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, connected_components, distance_matrix, iter_bits, reach
from .witness import PatternSpec, WitnessStructure, verify_witness

__all__ = [
    "SearchBudgetExceeded",
    "SuitablePair",
    "contracts_to",
    "find_suitable_pair",
    "c3_contractible",
    "cyclicity",
]


class SearchBudgetExceeded(RuntimeError):
    """The search visited more nodes than allowed; the answer is unknown."""

    def __init__(self, budget: int) -> None:
        super().__init__(f"search budget of {budget} nodes exceeded")
        self.budget = budget


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None) -> None:
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.limit)


def _checked(g: Graph, ws: WitnessStructure) -> WitnessStructure:
    check = verify_witness(g, ws)
    if not check:
        raise AssertionError(f"solver produced a bad witness ({check})")
    return ws


# -- generic pattern search ---------------------------------------------------


class _PatternSearch:
    def __init__(self, g: Graph, pattern: PatternSpec, budget: _Budget) -> None:
        h = pattern.graph()
        labels = pattern.labels
        k = len(labels)
        hdist = distance_matrix(h)
        # pattern index order follows labels, not h's sorted vertex order
        pos = [h.index(lab) for lab in labels]
        self.k = k
        self.ball = [
            [
                sum(1 << b for b in range(k) if 0 <= hdist[pos[a]][pos[b]] <= d)
                for d in range(k + 1)
            ]
            for a in range(k)
        ]
        self.h_edges = [
            (a, b) for a in range(k) for b in range(a + 1, k) if h.has_edge(labels[a], labels[b])
        ]
        self.adj = g.adjacency
        self.n = len(g)
        self.dist = distance_matrix(g)
        self.order = sorted(range(self.n), key=lambda i: (-self.adj[i].bit_count(), i))
        self.budget = budget

    def _fix(self, dom: list[int], done: int, stack: list[int]) -> int | None:
        """Propagate distance bounds from every vertex on ``stack``."""
        n, k, ball = self.n, self.k, self.ball
        while stack:
            x = stack.pop()
            bx = ball[dom[x].bit_length() - 1]
            row = self.dist[x]
            for y in range(n):
                d = row[y]
                if d <= 0:
                    continue
                nd = dom[y] & bx[d if d < k else k]
                if done >> y & 1:
                    # both fixed, possibly in the same round: still check the pair
                    if not nd:
                        return None
                    continue
                if nd != dom[y]:
                    if not nd:
                        return None
                    dom[y] = nd
                    if not nd & (nd - 1):
                        done |= 1 << y
                        stack.append(y)
        return done

    def _propagate(self, dom: list[int], done: int, stack: list[int]) -> int | None:
        n, k, adj = self.n, self.k, self.adj
        while True:
            done = self._fix(dom, done, stack)
            if done is None:
                return None
            terr = [0] * k
            fixed = [0] * k
            for y in range(n):
                bit = 1 << y
                for c in iter_bits(dom[y]):
                    terr[c] |= bit
                if done & bit:
                    fixed[dom[y].bit_length() - 1] |= bit
            for c in range(k):
                t = terr[c]
                if not t:
                    return None
                f = fixed[c]
                if not f:
                    continue
                r = reach(adj, f & -f, t)
                if r & f != f:
                    return None
                # territory cut off from the fixed core cannot join class c
                for y in iter_bits(t & ~r):
                    nd = dom[y] & ~(1 << c)
                    if not nd:
                        return None
                    dom[y] = nd
                    if not nd & (nd - 1):
                        done |= 1 << y
                        stack.append(y)
            if stack:
                continue
            for a, b in self.h_edges:
                t = terr[a]
                nb = 0
                for y in iter_bits(t):
                    nb |= adj[y]
                if not nb & terr[b]:
                    return None
            return done

    def run(self, dom: list[int]) -> list[int] | None:
        stack = [y for y in range(self.n) if not dom[y] & (dom[y] - 1)]
        done = 0
        for y in stack:
            done |= 1 << y
        done = self._propagate(dom, done, stack)
        if done is None:
            return None
        return self._branch(dom, done)

    def _branch(self, dom: list[int], done: int) -> list[int] | None:
        self.budget.tick()
        x = next((y for y in self.order if not done >> y & 1), None)
        if x is None:
            return dom
        for c in iter_bits(dom[x]):
            child = dom[:]
            child[x] = 1 << c
            cdone = self._propagate(child, done | 1 << x, [x])
            if cdone is None:
                continue
            found = self._branch(child, cdone)
            if found is not None:
                return found
        return None


def contracts_to(
    g: Graph, pattern: PatternSpec, *, budget: int | None = None
) -> WitnessStructure | None:
    """Search for a ``pattern``-witness structure of ``g``.

    Vertices are branched on in descending degree order and classes are
    tried in pattern order, so the witness returned is deterministic.  Raises
    :class:`SearchBudgetExceeded` when more than ``budget`` search nodes are
    needed.
    """
    h = pattern.graph()
    if len(h) > len(g):
        raise ValueError(f"pattern has {len(h)} vertices but the graph only {len(g)}")
    if len(connected_components(g)) != len(connected_components(h)):
        return None
    if g.num_edges < h.num_edges:
        return None
    search = _PatternSearch(g, pattern, _Budget(budget))
    dom = [(1 << search.k) - 1] * len(g)
    if pattern.kind == "cycle":
        # cycles are vertex-transitive: the first vertex may as well sit in c1
        dom[search.order[0]] = 1
    found = search.run(dom)
    if found is None:
        return None
    labels = pattern.labels
    classes = {lab: [] for lab in labels}
    for y, d in enumerate(found):
        classes[labels[d.bit_length() - 1]].append(g.vertices[y])
    return _checked(g, WitnessStructure(pattern, classes))


# -- suitable pairs -----------------------------------------------------------


@dataclass(frozen=True)
class SuitablePair:
    u: str
    v: str
    witness: WitnessStructure


class _PairSearch:
    """Path witness search with ``W(p1) = {u}`` and ``W(pl) = {v}``.

    Class indices run 1..l and every domain is an interval ``lo..hi``;
    distance bounds intersect intervals with intervals, so they stay that way.
    """

    def __init__(self, g: Graph, length: int, dist: list[list[int]], budget: _Budget) -> None:
        self.adj = g.adjacency
        self.n = len(g)
        self.length = length
        self.dist = dist
        self.budget = budget
        self.degree = [row.bit_count() for row in self.adj]

    def solve(self, u: int, v: int) -> list[int] | None:
        ell, dist = self.length, self.dist
        lo = [0] * self.n
        hi = [0] * self.n
        for y in range(self.n):
            if y == u:
                lo[y] = hi[y] = 1
            elif y == v:
                lo[y] = hi[y] = ell
            else:
                lo[y] = max(2, ell - dist[v][y])
                hi[y] = min(ell - 1, dist[u][y] + 1)
                if lo[y] > hi[y]:
                    return None
        done = 0
        stack = []
        for y in range(self.n):
            if lo[y] == hi[y]:
                done |= 1 << y
                stack.append(y)
        done = self._propagate(lo, hi, done, stack)
        if done is None:
            return None
        return self._branch(lo, hi, done)

    def _propagate(self, lo: list[int], hi: list[int], done: int, stack: list[int]) -> int | None:
        n, ell, adj, dist = self.n, self.length, self.adj, self.dist
        while True:
            while stack:
                x = stack.pop()
                i = lo[x]
                row = dist[x]
                for y in range(n):
                    d = row[y]
                    a, b = lo[y], hi[y]
                    if a < i - d:
                        a = i - d
                    if b > i + d:
                        b = i + d
                    if a > b:
                        return None
                    if done >> y & 1:
                        continue
                    if a != lo[y] or b != hi[y]:
                        lo[y], hi[y] = a, b
                        if a == b:
                            done |= 1 << y
                            stack.append(y)
            terr = [0] * (ell + 2)
            fixed = [0] * (ell + 2)
            for y in range(n):
                bit = 1 << y
                for i in range(lo[y], hi[y] + 1):
                    terr[i] |= bit
                if done & bit:
                    fixed[lo[y]] |= bit
            for i in range(2, ell):
                t, f = terr[i], fixed[i]
                if not t:
                    return None
                if not f:
                    continue
                r = reach(adj, f & -f, t)
                if r & f != f:
                    return None
                for y in iter_bits(t & ~r):
                    # only interval ends can be trimmed
                    if lo[y] == i:
                        lo[y] += 1
                    elif hi[y] == i:
                        hi[y] -= 1
                    else:
                        continue
                    if lo[y] == hi[y]:
                        done |= 1 << y
                        stack.append(y)
            if stack:
                continue
            for i in range(1, ell):
                nb = 0
                for y in iter_bits(terr[i]):
                    nb |= adj[y]
                if not nb & terr[i + 1]:
                    return None
            return done

    def _branch(self, lo: list[int], hi: list[int], done: int) -> list[int] | None:
        self.budget.tick()
        best = None
        for y in range(self.n):
            if done >> y & 1:
                continue
            key = (hi[y] - lo[y], -self.degree[y])
            if best is None or key < best[0]:
                best = (key, y)
        if best is None:
            return lo
        x = best[1]
        for i in range(lo[x], hi[x] + 1):
            clo, chi = lo[:], hi[:]
            clo[x] = chi[x] = i
            cdone = self._propagate(clo, chi, done | 1 << x, [x])
            if cdone is None:
                continue
            found = self._branch(clo, chi, cdone)
            if found is not None:
                return found
        return None


def find_suitable_pair(g: Graph, length: int, *, budget: int | None = None) -> SuitablePair | None:
    """Find a pair ``(u, v)`` with a ``P_length`` witness having ``{u}``, ``{v}`` as end classes.

    Pairs are scanned in lexicographic order and only pairs at distance at
    least ``length - 1`` are tried.  A graph contracts to a path of this
    length exactly when such a pair exists.
    """
    if length < 3:
        raise ValueError("suitable pairs are defined for paths of length >= 3")
    if len(g) < length or len(connected_components(g)) != 1:
        return None
    dist = distance_matrix(g)
    search = _PairSearch(g, length, dist, _Budget(budget))
    pattern = PatternSpec.path(length)
    labels = pattern.labels
    n = len(g)
    for u in range(n):
        for v in range(u + 1, n):
            if dist[u][v] < length - 1:
                continue
            found = search.solve(u, v)
            if found is None:
                continue
            classes = {lab: [] for lab in labels}
            for y, i in enumerate(found):
                classes[labels[i - 1]].append(g.vertices[y])
            ws = _checked(g, WitnessStructure(pattern, classes))
            return SuitablePair(g.vertices[u], g.vertices[v], ws)
    return None


# -- cycles -------------------------------------------------------------------


def c3_contractible(g: Graph) -> bool:
    """A graph contracts to a triangle iff it is connected and not a forest."""
    return len(g) >= 3 and len(connected_components(g)) == 1 and g.num_edges >= len(g)


def cyclicity(g: Graph, *, budget: int | None = None) -> int:
    """Length of the longest cycle ``g`` contracts to, or 0 if there is none.

    Since a graph contracting to ``C_k`` also contracts to every shorter cycle,
    the feasible lengths form a range ``3..c`` and the scan stops at the first
    failure.  ``budget`` applies to each individual cycle search.
    """
    if not c3_contractible(g):
        return 0
    best = 3
    for k in range(4, len(g) + 1):
        if contracts_to(g, PatternSpec.cycle(k), budget=budget) is None:
            break
        best = k
    return best
