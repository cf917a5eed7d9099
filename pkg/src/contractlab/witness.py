"""Pattern graphs, witness structures and witness verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import Graph, graph_from_json, graph_to_json, mask_connected

__all__ = [
    "PatternSpec",
    "WitnessStructure",
    "WitnessCheck",
    "verify_witness",
]

MAX_EXPLICIT_PATTERN = 8


@dataclass(frozen=True)
class PatternSpec:
    """A path ``p1..pl``, a cycle ``c1..ck`` or an explicit small graph."""

    kind: str
    size: int
    explicit: Graph | None = None

    def __post_init__(self) -> None:
        if self.kind == "path":
            if self.size < 1:
                raise ValueError("path patterns need at least 1 vertex")
        elif self.kind == "cycle":
            if self.size < 3:
                raise ValueError("cycle patterns need at least 3 vertices")
        elif self.kind == "explicit":
            if self.explicit is None or len(self.explicit) != self.size:
                raise ValueError("explicit pattern needs a graph of the given size")
            if self.size > MAX_EXPLICIT_PATTERN:
                raise ValueError(f"explicit patterns are limited to {MAX_EXPLICIT_PATTERN} vertices")
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    @classmethod
    def path(cls, length: int) -> PatternSpec:
        return cls("path", length)

    @classmethod
    def cycle(cls, length: int) -> PatternSpec:
        return cls("cycle", length)

    @classmethod
    def of(cls, h: Graph) -> PatternSpec:
        return cls("explicit", len(h), h)

    @property
    def labels(self) -> tuple[str, ...]:
        """Pattern vertex names in pattern order."""
        if self.kind == "path":
            return tuple(f"p{i}" for i in range(1, self.size + 1))
        if self.kind == "cycle":
            return tuple(f"c{i}" for i in range(1, self.size + 1))
        return self.explicit.vertices

    def graph(self) -> Graph:
        labels = self.labels
        if self.kind == "path":
            return Graph(labels, zip(labels, labels[1:]))
        if self.kind == "cycle":
            return Graph(labels, zip(labels, labels[1:] + labels[:1]))
        return self.explicit

    def to_json(self) -> dict:
        if self.kind == "explicit":
            return {"kind": "explicit", "size": self.size, "graph": graph_to_json(self.explicit)}
        return {"kind": self.kind, "size": self.size}

    @classmethod
    def from_json(cls, data: Mapping) -> PatternSpec:
        kind = data.get("kind")
        if kind == "explicit":
            return cls.of(graph_from_json(data["graph"]))
        return cls(kind, int(data["size"]))

    def __str__(self) -> str:
        return {"path": "P", "cycle": "C"}.get(self.kind, "H") + str(self.size)


@dataclass(frozen=True)
class WitnessStructure:
    """Assignment of pattern vertices to classes of host-graph vertices."""

    pattern: PatternSpec
    classes: Mapping[str, frozenset[str]]

    def __init__(self, pattern: PatternSpec, classes: Mapping[str, Iterable]) -> None:
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(
            self,
            "classes",
            {str(h): frozenset(str(x) for x in members) for h, members in classes.items()},
        )

    def __hash__(self) -> int:
        return hash((self.pattern, tuple(sorted(self.classes.items(), key=lambda kv: kv[0]))))

    def __getitem__(self, label: str) -> frozenset[str]:
        return self.classes[label]

    def sizes(self) -> list[int]:
        return [len(self.classes.get(label, ())) for label in self.pattern.labels]

    def reversed(self) -> WitnessStructure:
        """Same structure read from the other end (paths only)."""
        if self.pattern.kind != "path":
            raise ValueError("only path witnesses can be reversed")
        labels = self.pattern.labels
        return WitnessStructure(
            self.pattern, {a: self.classes[b] for a, b in zip(labels, reversed(labels))}
        )

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern.to_json(),
            "classes": {label: sorted(self.classes[label]) for label in self.pattern.labels if label in self.classes},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> WitnessStructure:
        try:
            pattern = PatternSpec.from_json(data["pattern"])
            classes = data["classes"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed witness JSON: {exc}") from None
        return cls(pattern, classes)


@dataclass(frozen=True)
class WitnessCheck:
    """Outcome of :func:`verify_witness`; truthy iff the witness is valid.

    ``condition`` is one of ``"partition"``, ``"connectivity"`` or
    ``"adjacency"`` and names the first requirement that failed.
    """

    ok: bool
    condition: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "valid" if self.ok else f"invalid: {self.condition}: {self.detail}"


def verify_witness(g: Graph, ws: WitnessStructure) -> WitnessCheck:
    h = ws.pattern.graph()
    labels = ws.pattern.labels
    extra = sorted(set(ws.classes) - set(labels))
    if extra:
        return WitnessCheck(False, "partition", f"unknown pattern vertices {extra}")
    owner: dict[str, str] = {}
    masks: dict[str, int] = {}
    for label in labels:
        members = ws.classes.get(label, frozenset())
        if not members:
            return WitnessCheck(False, "partition", f"class {label} is empty")
        for x in sorted(members):
            if x not in g:
                return WitnessCheck(False, "partition", f"class {label} has foreign vertex {x}")
            if x in owner:
                return WitnessCheck(False, "partition", f"vertex {x} in classes {owner[x]} and {label}")
            owner[x] = label
        masks[label] = g.mask(members)
    missing = [x for x in g.vertices if x not in owner]
    if missing:
        return WitnessCheck(False, "partition", f"uncovered vertices {missing}")

    adj = g.adjacency
    for label in labels:
        if not mask_connected(adj, masks[label]):
            return WitnessCheck(False, "connectivity", f"class {label} is disconnected")

    reach_of = {}
    for label in labels:
        r = 0
        for x in ws.classes[label]:
            r |= adj[g.index(x)]
        reach_of[label] = r
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            linked = bool(reach_of[a] & masks[b])
            if linked != h.has_edge(a, b):
                what = "missing edge" if not linked else "unexpected edge"
                return WitnessCheck(False, "adjacency", f"{what} between classes {a} and {b}")
    return WitnessCheck(True)

