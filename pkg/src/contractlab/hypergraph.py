"""Hypergraph 2-colourability: instances, normal form and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Hypergraph",
    "TwoColouring",
    "NormalizationError",
    "normalize",
    "is_normalized",
    "is_two_colourable",
    "check_colouring",
    "enumerate_instances",
]


class NormalizationError(ValueError):
    """The hypergraph cannot be brought into the form the gadgets expect."""


@dataclass(frozen=True)
class Hypergraph:
    """Element list ``Q`` and an ordered list of hyperedges over it.

    Element order matters: it fixes gadget vertex names and the order in which
    the colouring oracle explores assignments.  Duplicate hyperedges are kept.
    """

    elements: tuple[str, ...]
    hyperedges: tuple[frozenset[str], ...]

    def __init__(self, elements: Iterable, hyperedges: Iterable[Iterable] = ()) -> None:
        elements = tuple(str(q) for q in elements)
        if len(set(elements)) != len(elements):
            raise ValueError("element ids must be unique")
        edges = tuple(frozenset(str(q) for q in s) for s in hyperedges)
        known = set(elements)
        for j, s in enumerate(edges, 1):
            if not s <= known:
                raise ValueError(f"hyperedge {j} uses unknown elements {sorted(s - known)}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "hyperedges", edges)

    @property
    def m(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.hyperedges)

    @property
    def incidences(self) -> int:
        return sum(len(s) for s in self.hyperedges)

    def ordered(self, s: Iterable[str]) -> list[str]:
        """Members of ``s`` in element order."""
        s = set(s)
        return [q for q in self.elements if q in s]

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "hyperedges": [self.ordered(s) for s in self.hyperedges],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Hypergraph:
        try:
            elements = data["elements"]
            hyperedges = data["hyperedges"]
        except (KeyError, TypeError):
            raise ValueError("hypergraph JSON needs 'elements' and 'hyperedges'") from None
        if not all(isinstance(q, str) for q in elements):
            raise ValueError("element ids must be strings")
        return cls(elements, hyperedges)

    def __repr__(self) -> str:
        edges = ", ".join("{" + ",".join(self.ordered(s)) + "}" for s in self.hyperedges)
        return f"Hypergraph(Q={{{','.join(self.elements)}}}, S=[{edges}])"


@dataclass(frozen=True)
class TwoColouring:
    q1: frozenset[str]
    q2: frozenset[str]

    def __init__(self, q1: Iterable, q2: Iterable) -> None:
        object.__setattr__(self, "q1", frozenset(str(q) for q in q1))
        object.__setattr__(self, "q2", frozenset(str(q) for q in q2))

    def swapped(self) -> TwoColouring:
        return TwoColouring(self.q2, self.q1)

    def to_json(self, h: Hypergraph | None = None) -> dict:
        order = h.ordered if h is not None else sorted
        return {"q1": list(order(self.q1)), "q2": list(order(self.q2))}

    @classmethod
    def from_json(cls, data: Mapping) -> TwoColouring:
        return cls(data["q1"], data["q2"])


def is_normalized(h: Hypergraph) -> bool:
    return (
        h.m >= 2
        and h.n >= 2
        and all(h.hyperedges)
        and h.hyperedges[-1] == frozenset(h.elements)
    )


def normalize(h: Hypergraph) -> Hypergraph:
    """Append ``Q`` as the last hyperedge, twice if that is needed to reach n >= 2.

    Colourability is unchanged: a valid colouring has two nonempty classes, so
    it meets ``Q`` on both sides.
    """
    if h.m < 2:
        raise NormalizationError(f"need at least 2 elements, got {h.m}")
    for j, s in enumerate(h.hyperedges, 1):
        if not s:
            raise NormalizationError(f"hyperedge {j} is empty")
    full = frozenset(h.elements)
    edges = list(h.hyperedges) + [full]
    if len(edges) < 2:
        edges.append(full)
    return Hypergraph(h.elements, edges)


def check_colouring(h: Hypergraph, c: TwoColouring) -> bool:
    if c.q1 & c.q2 or (c.q1 | c.q2) != frozenset(h.elements):
        return False
    return all(s & c.q1 and s & c.q2 for s in h.hyperedges)


def is_two_colourable(h: Hypergraph) -> TwoColouring | None:
    """First valid colouring in lexicographic order, or ``None``.

    The first element always goes to ``q1``; the remaining elements are scanned
    in input order with side 1 tried before side 2.
    """
    if not h.elements:
        return TwoColouring((), ()) if not h.hyperedges else None
    first, rest = h.elements[0], h.elements[1:]
    bit = {q: 1 << k for k, q in enumerate(h.elements)}
    edge_masks = [sum(bit[q] for q in s) for s in h.hyperedges]
    full = (1 << h.m) - 1
    for sides in product((0, 1), repeat=len(rest)):
        side2 = 0
        for q, s in zip(rest, sides):
            if s:
                side2 |= bit[q]
        side1 = full & ~side2
        if all(e & side1 and e & side2 for e in edge_masks):
            q2 = [q for q in rest if side2 & bit[q]]
            q1 = [first] + [q for q in rest if not side2 & bit[q]]
            return TwoColouring(q1, q2)
    return None


def enumerate_instances(max_elements: int, max_edges: int) -> Iterator[Hypergraph]:
    """Every normalized instance from ``m <= max_elements`` and families of at
    most ``max_edges`` distinct nonempty hyperedges (before ``Q`` is appended).

    Families with fewer than two elements are skipped since they cannot be
    normalized.  Families that normalize to the same instance (the empty
    family and ``{Q}``) are yielded once.
    """
    seen = set()
    for m in range(2, max_elements + 1):
        elements = [f"q{i}" for i in range(1, m + 1)]
        subsets = [
            frozenset(c)
            for size in range(1, m + 1)
            for c in combinations(elements, size)
        ]
        for k in range(0, max_edges + 1):
            for family in combinations(subsets, k):
                h = normalize(Hypergraph(elements, family))
                if h not in seen:
                    seen.add(h)
                    yield h
