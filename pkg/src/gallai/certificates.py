"""Verdicts and the certificates that justify them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, ClassVar, Union

from .formats import to_graph6
from .graph import Edge, Graph, VertexSet


@dataclass(frozen=True)
class Ok:
    """Positive answer. ``ordering`` holds a perfect elimination ordering when one was computed."""

    ordering: tuple[int, ...] | None = None
    kind: ClassVar[str] = "ok"

    def data(self) -> dict[str, Any]:
        return {} if self.ordering is None else {"ordering": list(self.ordering)}


@dataclass(frozen=True)
class ChordlessCycle:
    cycle: tuple[int, ...]
    kind: ClassVar[str] = "chordless_cycle"

    def data(self) -> dict[str, Any]:
        return {"cycle": list(self.cycle)}


@dataclass(frozen=True)
class PatternEmbedding:
    """``mapping[i]`` is the host vertex playing pattern vertex ``i``."""

    pattern: str
    mapping: tuple[int, ...]
    kind: ClassVar[str] = "pattern_embedding"

    def data(self) -> dict[str, Any]:
        return {"pattern": self.pattern, "mapping": list(self.mapping)}


@dataclass(frozen=True)
class NonIndependentHomogeneousSet:
    members: VertexSet
    edge: Edge
    kind: ClassVar[str] = "non_independent_homogeneous_set"

    def data(self) -> dict[str, Any]:
        return {"members": list(self.members), "edge": list(self.edge)}


@dataclass(frozen=True)
class GallaiCycle:
    """Source edges whose Gallai-graph vertices form a cycle, in cyclic order."""

    edges: tuple[Edge, ...]
    kind: ClassVar[str] = "gallai_cycle"

    def data(self) -> dict[str, Any]:
        return {"edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class GallaiDisconnection:
    """Two source edges lying in different components of the Gallai graph."""

    first: Edge
    second: Edge
    kind: ClassVar[str] = "gallai_disconnection"

    def data(self) -> dict[str, Any]:
        return {"edges": [list(self.first), list(self.second)]}


# Condition ids for BlockViolation.
BLOCK_SHAPE = "block-shape"
CUT_VERTEX_BLOCKS = "cut-vertex-blocks"
CUT_VERTEX_DEGREE = "cut-vertex-degree"
TRIANGLE_CUT_VERTICES = "triangle-cut-vertices"
GEM_CUT_VERTICES = "gem-cut-vertices"
GEM_CUT_DEGREE = "gem-cut-degree"
BLOCK_CONDITIONS = (
    BLOCK_SHAPE,
    CUT_VERTEX_BLOCKS,
    CUT_VERTEX_DEGREE,
    TRIANGLE_CUT_VERTICES,
    GEM_CUT_VERTICES,
    GEM_CUT_DEGREE,
)


@dataclass(frozen=True)
class BlockViolation:
    """A block breaking one of the structural conditions.

    ``vertex`` names the offending cut-vertex for the cut-vertex conditions
    and for ``gem-cut-degree``.
    """

    block: VertexSet
    condition: str
    vertex: int | None = None
    kind: ClassVar[str] = "block_violation"

    def data(self) -> dict[str, Any]:
        out: dict[str, Any] = {"block": list(self.block), "condition": self.condition}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        return out


Certificate = Union[
    Ok,
    ChordlessCycle,
    PatternEmbedding,
    NonIndependentHomogeneousSet,
    GallaiCycle,
    GallaiDisconnection,
    BlockViolation,
]


@dataclass(frozen=True)
class Verdict:
    answer: bool
    certificate: Certificate = field(default_factory=Ok)
    question: str = ""
    route: str | None = None

    def __bool__(self) -> bool:
        return self.answer

    def to_dict(self, g: Graph) -> dict[str, Any]:
        out: dict[str, Any] = {"input": to_graph6(g), "question": self.question}
        if self.route is not None:
            out["route"] = self.route
        out["answer"] = self.answer
        out["certificate"] = {"kind": self.certificate.kind, "data": self.certificate.data()}
        return out

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g), separators=(",", ":"))
