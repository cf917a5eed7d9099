"""Slow, obviously-correct reference implementations used only by the tests.

None of these touch the bitmask machinery or the pruned solvers: they work on
plain neighbour sets and enumerate everything.
"""

from __future__ import annotations

import itertools
import random

from contractlab import Graph


def nbrs(g: Graph) -> dict[str, set[str]]:
    out = {v: set() for v in g.vertices}
    for a, b in g.edges:
        out[a].add(b)
        out[b].add(a)
    return out


def dfs_connected(adj: dict[str, set[str]], block) -> bool:
    block = set(block)
    if not block:
        return False
    start = next(iter(block))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in block and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == block


def set_partitions(items: list):
    """All set partitions of ``items`` (restricted growth strings)."""
    n = len(items)
    if n == 0:
        yield []
        return

    def rec(i, labels, k):
        if i == n:
            blocks = [[] for _ in range(k)]
            for x, lab in zip(items, labels):
                blocks[lab].append(x)
            yield blocks
            return
        for lab in range(k + 1):
            labels.append(lab)
            yield from rec(i + 1, labels, max(k, lab + 1))
            labels.pop()

    yield from rec(0, [], 0)


def quotient_edges(adj: dict[str, set[str]], blocks: list[list[str]]) -> set[tuple[int, int]]:
    owner = {x: b for b, block in enumerate(blocks) for x in block}
    out = set()
    for x, ys in adj.items():
        for y in ys:
            a, b = owner[x], owner[y]
            if a != b:
                out.add((min(a, b), max(a, b)))
    return out


def shape_of(k: int, edges: set[tuple[int, int]]) -> str | None:
    """'path' or 'cycle' if the k-vertex graph with these edges is P_k or C_k."""
    deg = [0] * k
    adj = {i: set() for i in range(k)}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        adj[a].add(b)
        adj[b].add(a)
    if not dfs_connected({str(i): {str(j) for j in adj[i]} for i in adj}, [str(i) for i in range(k)]):
        return None
    if len(edges) == k - 1 and max(deg, default=0) <= 2:
        return "path"
    if k >= 3 and len(edges) == k and all(d == 2 for d in deg):
        return "cycle"
    return None


def contraction_shapes(g: Graph) -> set[tuple[str, int]]:
    """Every (``'path'``/``'cycle'``, length) that ``g`` contracts to, by brute force."""
    adj = nbrs(g)
    found = set()
    for blocks in set_partitions(list(g.vertices)):
        if not all(dfs_connected(adj, b) for b in blocks):
            continue
        shape = shape_of(len(blocks), quotient_edges(adj, blocks))
        if shape:
            found.add((shape, len(blocks)))
    return found


def brute_contracts_to(g: Graph, h: Graph) -> bool:
    """Partition enumeration plus permutation isomorphism; for tiny ``h`` only."""
    adj = nbrs(g)
    k = len(h)
    target = {frozenset(e) for e in h.edges}
    hv = list(h.vertices)
    for blocks in set_partitions(list(g.vertices)):
        if len(blocks) != k or not all(dfs_connected(adj, b) for b in blocks):
            continue
        q = quotient_edges(adj, blocks)
        for perm in itertools.permutations(hv):
            if {frozenset((perm[a], perm[b])) for a, b in q} == target:
                return True
    return False


def brute_2dcs(g: Graph, z1: set[str], z2: set[str]) -> list[tuple[frozenset, frozenset]]:
    """All valid 2-DCS partitions, by enumerating every side assignment."""
    adj = nbrs(g)
    free = [x for x in g.vertices if x not in z1 and x not in z2]
    out = []
    for sides in itertools.product((1, 2), repeat=len(free)):
        a1 = set(z1) | {x for x, s in zip(free, sides) if s == 1}
        a2 = set(z2) | {x for x, s in zip(free, sides) if s == 2}
        if dfs_connected(adj, a1) and dfs_connected(adj, a2):
            out.append((frozenset(a1), frozenset(a2)))
    return out


def brute_colourings(elements, hyperedges) -> list[tuple[frozenset, frozenset]]:
    """Every 2-colouring, both orientations, over all 2^m assignments."""
    out = []
    for sides in itertools.product((1, 2), repeat=len(elements)):
        q1 = frozenset(q for q, s in zip(elements, sides) if s == 1)
        q2 = frozenset(q for q, s in zip(elements, sides) if s == 2)
        if all(set(s) & q1 and set(s) & q2 for s in hyperedges):
            out.append((q1, q2))
    return out


def floyd_warshall(g: Graph) -> dict[str, dict[str, float]]:
    inf = float("inf")
    vs = list(g.vertices)
    d = {a: {b: (0 if a == b else inf) for b in vs} for a in vs}
    for a, b in g.edges:
        d[a][b] = d[b][a] = 1
    for k in vs:
        for i in vs:
            dik = d[i][k]
            for j in vs:
                if dik + d[k][j] < d[i][j]:
                    d[i][j] = dik + d[k][j]
    return d


def has_odd_cycle(g: Graph) -> bool:
    """Odd closed walk exists iff odd cycle exists; count walks by matrix powers."""
    vs = list(g.vertices)
    n = len(vs)
    idx = {v: i for i, v in enumerate(vs)}
    a = [[0] * n for _ in range(n)]
    for x, y in g.edges:
        a[idx[x]][idx[y]] = a[idx[y]][idx[x]] = 1
    p = [row[:] for row in a]
    for length in range(2, n + 1):
        p = [[int(any(p[i][k] and a[k][j] for k in range(n))) for j in range(n)] for i in range(n)]
        if length % 2 and any(p[i][i] for i in range(n)):
            return True
    return False


def all_graphs(n: int):
    vs = [str(i) for i in range(1, n + 1)]
    pairs = list(itertools.combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        yield Graph(vs, [p for k, p in enumerate(pairs) if mask >> k & 1])


def random_graph(rng: random.Random, n: int, p: float, connected: bool = False) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    while True:
        edges = [(a, b) for a, b in itertools.combinations(vs, 2) if rng.random() < p]
        g = Graph(vs, edges)
        if not connected or dfs_connected(nbrs(g), vs):
            return g


def bullet_counts(m: int, n: int, incidences: int) -> tuple[int, int]:
    """Vertex and edge counts of the P5 gadget, summed construction step by step."""
    vertices = m + n  # incidence graph
    edges = incidences
    vertices += n  # hyperedge copies
    edges += incidences  # q_i -- S_j'
    edges += n * n  # S x S' complete bipartite
    vertices += incidences  # subdivide q_i S_j: one new vertex ...
    edges += incidences  # ... and one extra edge per incidence
    vertices += 3  # q*, u1, u2
    edges += 2  # q* u1, q* u2
    edges += incidences  # q* -- every subdivision vertex
    edges += 2 * n  # u1, u2 -- every S_j
    vertices += 2  # v, w
    edges += 2 + n  # u1 v, u2 v, w -- every S_j'
    return vertices, edges
