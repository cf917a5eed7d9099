"""Simple undirected graphs with contraction-oriented primitives.

Vertices are strings on the outside and dense integers on the inside; the
integer ``i`` is the position of the vertex in the sorted vertex tuple, and
adjacency is stored as one Python ``int`` bitmask per vertex.  Graphs are
immutable: every operation that changes structure returns a new graph.
"""

from __future__ import annotations

import json
import math
import re
from collections import deque
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Graph",
    "GraphError",
    "contract_edge",
    "quotient",
    "subdivide_edge",
    "is_bipartite",
    "distances",
    "distance_matrix",
    "diameter",
    "is_connected",
    "is_connected_subset",
    "connected_components",
    "graph_to_json",
    "graph_from_json",
    "dumps",
    "to_dot",
]


class GraphError(ValueError):
    """Raised for malformed graphs or operations on absent vertices/edges."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reach(adj: tuple[int, ...] | list[int], seed: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``seed`` using only ``allowed`` vertices."""
    seen = seed & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= adj[i]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def mask_connected(adj: tuple[int, ...] | list[int], mask: int) -> bool:
    if not mask:
        return False
    return reach(adj, mask & -mask, mask) == mask


class Graph:
    """Finite simple undirected graph with stable string vertex ids.

    ``Graph(vertices, edges)`` is strict: every edge endpoint must be listed in
    ``vertices``.  Use :meth:`from_edges` to infer the vertex set.
    """

    __slots__ = ("_names", "_index", "_adj", "_edges")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()) -> None:
        names = tuple(sorted({str(v) for v in vertices}))
        index = {name: i for i, name in enumerate(names)}
        adj = [0] * len(names)
        for edge in edges:
            a, b = (str(x) for x in edge)
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            try:
                i, j = index[a], index[b]
            except KeyError as exc:
                raise GraphError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._names = names
        self._index = index
        self._adj = tuple(adj)
        self._edges: tuple[tuple[str, str], ...] | None = None

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> Graph:
        edges = [tuple(str(x) for x in e) for e in edges]
        verts = {str(v) for v in vertices}
        for a, b in edges:
            verts.add(a)
            verts.add(b)
        return cls(verts, edges)

    @classmethod
    def _from_masks(cls, names: tuple[str, ...], adj: list[int]) -> Graph:
        # names must already be sorted and adj consistent with them
        g = cls.__new__(cls)
        g._names = names
        g._index = {name: i for i, name in enumerate(names)}
        g._adj = tuple(adj)
        g._edges = None
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._names

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        if self._edges is None:
            names = self._names
            out = []
            for i, row in enumerate(self._adj):
                for j in iter_bits(row >> (i + 1)):
                    out.append((names[i], names[i + 1 + j]))
            self._edges = tuple(sorted(out))
        return self._edges

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks, indexed like :attr:`vertices`."""
        return self._adj

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, v: object) -> bool:
        return str(v) in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self._names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._names == other._names and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._names, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def index(self, v: object) -> int:
        try:
            return self._index[str(v)]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def mask(self, vs: Iterable) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def names(self, mask: int) -> frozenset[str]:
        return frozenset(self._names[i] for i in iter_bits(mask))

    def neighbours(self, v: object) -> frozenset[str]:
        return self.names(self._adj[self.index(v)])

    def degree(self, v: object) -> int:
        return self._adj[self.index(v)].bit_count()

    def has_edge(self, u: object, v: object) -> bool:
        i, j = self.index(u), self.index(v)
        return bool(self._adj[i] >> j & 1)

    # -- structural edits, all returning new graphs ----------------------

    def induced(self, vs: Iterable) -> Graph:
        keep = self.mask(vs)
        return self._restrict(keep)

    def remove_vertices(self, vs: Iterable) -> Graph:
        drop = self.mask(vs)
        full = (1 << len(self._names)) - 1
        return self._restrict(full & ~drop)

    def _restrict(self, keep: int) -> Graph:
        old = list(iter_bits(keep))
        pos = {o: k for k, o in enumerate(old)}
        adj = []
        for o in old:
            row = 0
            for j in iter_bits(self._adj[o] & keep):
                row |= 1 << pos[j]
            adj.append(row)
        return Graph._from_masks(tuple(self._names[o] for o in old), adj)

    def remove_edge(self, u: object, v: object) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"{u!r}{v!r} is not an edge")
        a, b = str(u), str(v)
        return Graph(self._names, [e for e in self.edges if set(e) != {a, b}])

    def add_vertices(self, vs: Iterable, edges: Iterable = ()) -> Graph:
        return Graph([*self._names, *vs], [*self.edges, *edges])


# -- operations --------------------------------------------------------------

_MERGE_SUFFIX = re.compile(r"^(.*)#(\d+)$")


def _merge_parts(name: str) -> tuple[str, int]:
    m = _MERGE_SUFFIX.match(name)
    if m:
        return m.group(1), int(m.group(2))
    return name, 0


def _fresh(taken: Iterable[str], base: str) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    k = 2
    while f"{base}.{k}" in taken:
        k += 1
    return f"{base}.{k}"


def contract_edge(g: Graph, u: object, v: object) -> Graph:
    """Contract edge ``uv`` into one vertex adjacent to ``N(u) | N(v) - {u, v}``.

    The merged vertex is named after the smaller of the two ids, suffixed with
    the number of merges it represents (``"a#1"``, then ``"a#2"`` ...), so
    contracting ``uv`` and ``vu`` gives the same graph.
    """
    u, v = str(u), str(v)
    if u == v:
        raise GraphError("cannot contract a vertex with itself")
    if not g.has_edge(u, v):
        raise GraphError(f"{u!r}{v!r} is not an edge")
    base, cu = _merge_parts(min(u, v))
    _, cv = _merge_parts(max(u, v))
    rest = [x for x in g.vertices if x not in (u, v)]
    merged = _fresh(rest, f"{base}#{cu + cv + 1}")
    nbrs = (g.neighbours(u) | g.neighbours(v)) - {u, v}
    edges = [e for e in g.edges if u not in e and v not in e]
    edges += [(merged, y) for y in nbrs]
    return Graph([*rest, merged], edges)


def subdivide_edge(g: Graph, u: object, v: object) -> Graph:
    """Replace edge ``uv`` by a path ``u - z - v`` through a fresh vertex ``z``."""
    u, v = str(u), str(v)
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"{u!r}{v!r} is not an edge")
    a, b = sorted((u, v))
    z = _fresh(g.vertices, f"{a}~{b}")
    edges = [e for e in g.edges if set(e) != {a, b}] + [(z, a), (z, b)]
    return Graph([*g.vertices, z], edges)


def quotient(g: Graph, parts: Mapping[object, Iterable]) -> Graph:
    """Collapse each labelled class of a vertex partition to a single vertex.

    Two class-vertices are adjacent iff some edge of ``g`` joins the classes.
    Classes need not be connected.
    """
    owner: dict[int, str] = {}
    for label, members in parts.items():
        members = list(members)
        if not members:
            raise GraphError(f"class {label!r} is empty")
        for x in members:
            i = g.index(x)
            if i in owner:
                raise GraphError(f"vertex {x!r} lies in classes {owner[i]!r} and {str(label)!r}")
            owner[i] = str(label)
    if len(owner) != len(g):
        missing = sorted(set(g.vertices) - {g.vertices[i] for i in owner})
        raise GraphError(f"vertices not covered by the partition: {missing}")
    edges = set()
    for a, b in g.edges:
        la, lb = owner[g.index(a)], owner[g.index(b)]
        if la != lb:
            edges.add((la, lb) if la < lb else (lb, la))
    return Graph((str(label) for label in parts), edges)


def connected_components(g: Graph) -> list[frozenset[str]]:
    adj = g.adjacency
    left = (1 << len(g)) - 1
    comps = []
    while left:
        comp = reach(adj, left & -left, left)
        comps.append(g.names(comp))
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(g) > 0 and mask_connected(g.adjacency, (1 << len(g)) - 1)


def is_connected_subset(g: Graph, s: Iterable) -> bool:
    s = list(s)
    if not s:
        raise GraphError("subset must be nonempty")
    return mask_connected(g.adjacency, g.mask(s))


def is_bipartite(g: Graph) -> tuple[frozenset[str], frozenset[str]] | None:
    """Return a bipartition ``(A, B)`` or ``None`` when there is an odd cycle.

    Each component is coloured by BFS from its smallest vertex id, which is
    placed in ``A``.
    """
    side = [-1] * len(g)
    adj = g.adjacency
    for root in range(len(g)):  # index order is id order
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in iter_bits(adj[x]):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    names = g.vertices
    a = frozenset(names[i] for i in range(len(g)) if side[i] == 0)
    return a, frozenset(names) - a


def distance_matrix(g: Graph) -> list[list[int]]:
    """BFS distances by vertex index; ``-1`` marks unreachable pairs."""
    adj = g.adjacency
    n = len(g)
    out = []
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        seen = frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= adj[i]
            frontier = nxt & ~seen
            seen |= frontier
            for i in iter_bits(frontier):
                row[i] = d
        out.append(row)
    return out


def distances(g: Graph) -> dict[str, dict[str, int]]:
    """All-pairs shortest path lengths; unreachable pairs are omitted."""
    names = g.vertices
    return {
        names[i]: {names[j]: d for j, d in enumerate(row) if d >= 0}
        for i, row in enumerate(distance_matrix(g))
    }


def diameter(g: Graph) -> float:
    """Largest distance; ``math.inf`` for disconnected graphs, 0 for K1/empty."""
    best = 0
    for row in distance_matrix(g):
        for d in row:
            if d < 0:
                return math.inf
            best = max(best, d)
    return best


# -- serialisation -----------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def graph_from_json(data: Mapping) -> Graph:
    try:
        vertices = data["vertices"]
        edges = data["edges"]
    except (KeyError, TypeError):
        raise GraphError("graph JSON needs 'vertices' and 'edges'") from None
    if not all(isinstance(v, str) for v in vertices):
        raise GraphError("vertex ids must be strings")
    if len(set(vertices)) != len(vertices):
        raise GraphError("duplicate vertex ids")
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphError(f"malformed edge {e!r}")
    return Graph(vertices, edges)


def dumps(obj: Mapping) -> str:
    """Canonical JSON text used for every artifact this package writes."""
    return json.dumps(obj, ensure_ascii=False) + "\n"


def to_dot(g: Graph, colours: Mapping[str, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        attr = f' [style=filled, fillcolor="{colours[v]}"]' if colours and v in colours else ""
        lines.append(f'  "{v}"{attr};')
    for a, b in g.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
