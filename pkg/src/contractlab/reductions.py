"""Hypergraph-to-graph gadgets whose contractibility encodes 2-colourability.

Vertex naming (``i`` indexes elements, ``j`` hyperedges, both from 1)::

    q{i}      element q_i                  S{j}    hyperedge vertex S_j
    Sp{j}     hyperedge copy S_j'          q{i}_{j} subdivision vertex of q_i S_j
    qstar, u1, u2, v, w, x                 the fixed connector vertices

The P5 gadget ``G`` is bipartite and contracts to P5 iff the hypergraph is
2-colourable.  Dropping ``qstar`` and ``u2`` and adding ``x ~ v, w`` gives the
C6 gadget ``G'``; removing the edge ``vx`` from that gives the P6 gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .graph import Graph, graph_from_json, graph_to_json, to_dot
from .hypergraph import Hypergraph, TwoColouring, check_colouring, is_normalized
from .witness import PatternSpec, WitnessStructure, verify_witness

__all__ = [
    "Role",
    "VertexRole",
    "LabeledGadget",
    "GadgetError",
    "build_p5_gadget",
    "build_c6_gadget",
    "build_p6_gadget",
    "build_gadget",
    "colouring_to_p5_witness",
    "colouring_to_c6_witness",
    "colouring_to_p6_witness",
    "p5_witness_to_colouring",
]


class GadgetError(ValueError):
    """Bad gadget input, or a witness that does not decode to a colouring."""


class Role(Enum):
    STAR = "Star"
    U1 = "U1"
    U2 = "U2"
    V = "V"
    W = "W"
    X = "X"
    ELEMENT = "Element"
    HYPEREDGE = "Hyperedge"
    HYPEREDGE_COPY = "HyperedgeCopy"
    SUBDIVISION = "Subdivision"


_INDEXED = {Role.ELEMENT: 1, Role.HYPEREDGE: 1, Role.HYPEREDGE_COPY: 1, Role.SUBDIVISION: 2}


@dataclass(frozen=True)
class VertexRole:
    kind: Role
    i: int | None = None
    j: int | None = None

    def __str__(self) -> str:
        parts = [self.kind.value] + [str(t) for t in (self.i, self.j) if t is not None]
        return ":".join(parts)

    @classmethod
    def parse(cls, text: str) -> VertexRole:
        head, *idx = text.split(":")
        try:
            kind = Role(head)
        except ValueError:
            raise GadgetError(f"unknown role {text!r}") from None
        if len(idx) != _INDEXED.get(kind, 0):
            raise GadgetError(f"role {text!r} has the wrong number of indices")
        nums = [int(t) for t in idx]
        if kind is Role.ELEMENT:
            return cls(kind, i=nums[0])
        if kind in (Role.HYPEREDGE, Role.HYPEREDGE_COPY):
            return cls(kind, j=nums[0])
        if kind is Role.SUBDIVISION:
            return cls(kind, i=nums[0], j=nums[1])
        return cls(kind)


_ROLE_COLOURS = {
    Role.STAR: "gold",
    Role.U1: "orange",
    Role.U2: "orange",
    Role.V: "tomato",
    Role.W: "tomato",
    Role.X: "tomato",
    Role.ELEMENT: "lightblue",
    Role.HYPEREDGE: "palegreen",
    Role.HYPEREDGE_COPY: "darkseagreen",
    Role.SUBDIVISION: "lightgrey",
}


@dataclass(frozen=True)
class LabeledGadget:
    kind: str  # "p5", "c6" or "p6"
    graph: Graph
    roles: Mapping[str, VertexRole]
    source: Hypergraph

    def __hash__(self) -> int:
        return hash((self.kind, self.graph, self.source))

    def element_vertex(self, q: str) -> str:
        return f"q{self.source.elements.index(q) + 1}"

    def with_role(self, *kinds: Role) -> frozenset[str]:
        return frozenset(x for x, r in self.roles.items() if r.kind in kinds)

    def to_json(self) -> dict:
        out = graph_to_json(self.graph)
        out["kind"] = self.kind
        out["roles"] = {x: str(self.roles[x]) for x in self.graph.vertices}
        out["source"] = self.source.to_json()
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> LabeledGadget:
        """Parse gadget JSON and check it against a fresh construction."""
        try:
            kind = data["kind"]
            source = Hypergraph.from_json(data["source"])
            roles = {x: VertexRole.parse(r) for x, r in data["roles"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise GadgetError(f"malformed gadget JSON: {exc}") from None
        graph = graph_from_json(data)
        expected = build_gadget(kind, source)
        if graph != expected.graph:
            raise GadgetError("gadget graph does not match its source hypergraph")
        if roles != dict(expected.roles):
            raise GadgetError("gadget roles do not match the construction")
        return expected

    def to_dot(self) -> str:
        colours = {x: _ROLE_COLOURS[r.kind] for x, r in self.roles.items()}
        return to_dot(self.graph, colours, name=self.kind)


def _require_normalized(h: Hypergraph) -> None:
    if not is_normalized(h):
        raise GadgetError(
            "hypergraph must be normalized (m >= 2, n >= 2, nonempty hyperedges, last hyperedge = Q)"
        )


def build_p5_gadget(h: Hypergraph) -> LabeledGadget:
    _require_normalized(h)
    roles: dict[str, VertexRole] = {
        "qstar": VertexRole(Role.STAR),
        "u1": VertexRole(Role.U1),
        "u2": VertexRole(Role.U2),
        "v": VertexRole(Role.V),
        "w": VertexRole(Role.W),
    }
    edges: list[tuple[str, str]] = [("qstar", "u1"), ("qstar", "u2"), ("u1", "v"), ("u2", "v")]
    for i in range(1, h.m + 1):
        roles[f"q{i}"] = VertexRole(Role.ELEMENT, i=i)
    for j in range(1, h.n + 1):
        roles[f"S{j}"] = VertexRole(Role.HYPEREDGE, j=j)
        roles[f"Sp{j}"] = VertexRole(Role.HYPEREDGE_COPY, j=j)
        edges += [("u1", f"S{j}"), ("u2", f"S{j}"), ("w", f"Sp{j}")]
        edges += [(f"S{j}", f"Sp{k}") for k in range(1, h.n + 1)]
    for j, s in enumerate(h.hyperedges, 1):
        for i, q in enumerate(h.elements, 1):
            if q not in s:
                continue
            sub = f"q{i}_{j}"
            roles[sub] = VertexRole(Role.SUBDIVISION, i=i, j=j)
            edges += [(sub, f"q{i}"), (sub, f"S{j}"), (sub, "qstar"), (f"q{i}", f"Sp{j}")]
    return LabeledGadget("p5", Graph(roles, edges), roles, h)


def build_c6_gadget(h: Hypergraph) -> LabeledGadget:
    base = build_p5_gadget(h)
    g = base.graph.remove_vertices(["qstar", "u2"]).add_vertices(["x"], [("x", "v"), ("x", "w")])
    roles = {x: r for x, r in base.roles.items() if x not in ("qstar", "u2")}
    roles["x"] = VertexRole(Role.X)
    return LabeledGadget("c6", g, roles, h)


def build_p6_gadget(h: Hypergraph) -> LabeledGadget:
    base = build_c6_gadget(h)
    return LabeledGadget("p6", base.graph.remove_edge("v", "x"), base.roles, h)


_BUILDERS = {"p5": build_p5_gadget, "c6": build_c6_gadget, "p6": build_p6_gadget}


def build_gadget(kind: str, h: Hypergraph) -> LabeledGadget:
    try:
        return _BUILDERS[kind](h)
    except KeyError:
        raise GadgetError(f"unknown gadget kind {kind!r}") from None


# -- colourings <-> witness structures ------------------------------------------


def _colour_sides(gadget: LabeledGadget, c: TwoColouring) -> tuple[set[str], set[str]]:
    if not check_colouring(gadget.source, c):
        raise GadgetError("not a valid 2-colouring of the source hypergraph")
    return {gadget.element_vertex(q) for q in c.q1}, {gadget.element_vertex(q) for q in c.q2}


def _middle_classes(gadget: LabeledGadget, c: TwoColouring) -> tuple[set[str], set[str]]:
    q1, q2 = _colour_sides(gadget, c)
    third = set(gadget.with_role(Role.HYPEREDGE, Role.SUBDIVISION)) | q1
    fourth = set(gadget.with_role(Role.HYPEREDGE_COPY)) | q2
    return third, fourth


def _require_kind(gadget: LabeledGadget, kind: str) -> None:
    if gadget.kind != kind:
        raise GadgetError(f"expected a {kind} gadget, got {gadget.kind}")


def colouring_to_p5_witness(gadget: LabeledGadget, c: TwoColouring) -> WitnessStructure:
    _require_kind(gadget, "p5")
    third, fourth = _middle_classes(gadget, c)
    return WitnessStructure(
        PatternSpec.path(5),
        {"p1": ["v"], "p2": ["qstar", "u1", "u2"], "p3": third, "p4": fourth, "p5": ["w"]},
    )


def colouring_to_c6_witness(gadget: LabeledGadget, c: TwoColouring) -> WitnessStructure:
    _require_kind(gadget, "c6")
    third, fourth = _middle_classes(gadget, c)
    return WitnessStructure(
        PatternSpec.cycle(6),
        {"c1": ["v"], "c2": ["u1"], "c3": third, "c4": fourth, "c5": ["w"], "c6": ["x"]},
    )


def colouring_to_p6_witness(gadget: LabeledGadget, c: TwoColouring) -> WitnessStructure:
    _require_kind(gadget, "p6")
    third, fourth = _middle_classes(gadget, c)
    return WitnessStructure(
        PatternSpec.path(6),
        {"p1": ["v"], "p2": ["u1"], "p3": third, "p4": fourth, "p5": ["w"], "p6": ["x"]},
    )


def p5_witness_to_colouring(gadget: LabeledGadget, ws: WitnessStructure) -> TwoColouring:
    """Read a 2-colouring off a P5 witness whose end classes are ``{v}`` and ``{w}``.

    Elements in the third class form one colour, elements in the fourth the
    other.  In a valid witness every element lands in one of the two (an
    element in the second class would touch ``Sp{n}`` in the fourth), so a
    leftover element or a failing colouring is reported as an error rather
    than patched.
    """
    _require_kind(gadget, "p5")
    if ws.pattern != PatternSpec.path(5):
        raise GadgetError(f"expected a P5 witness, got {ws.pattern}")
    check = verify_witness(gadget.graph, ws)
    if not check:
        raise GadgetError(f"witness is not valid for this gadget ({check})")
    if ws["p1"] == {"w"} and ws["p5"] == {"v"}:
        ws = ws.reversed()
    if ws["p1"] != {"v"} or ws["p5"] != {"w"}:
        raise GadgetError(
            f"end classes must be {{v}} and {{w}}, got {sorted(ws['p1'])} and {sorted(ws['p5'])}"
        )
    name_of = {f"q{i}": q for i, q in enumerate(gadget.source.elements, 1)}
    q1 = [name_of[x] for x in sorted(ws["p3"]) if x in name_of]
    q2 = [name_of[x] for x in sorted(ws["p4"]) if x in name_of]
    leftover = set(gadget.source.elements) - set(q1) - set(q2)
    if leftover:
        raise GadgetError(f"elements outside the middle classes: {sorted(leftover)}")
    colouring = TwoColouring(q1, q2)
    if not check_colouring(gadget.source, colouring):
        raise GadgetError("extracted partition is not a 2-colouring")
    return colouring

