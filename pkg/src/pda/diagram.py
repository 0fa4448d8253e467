"""Lagrangian-projection diagrams of partitioned Legendrian links.

A diagram is given by oriented components (cyclic visit lists through
crossings, each crossing visited once "over" and once "under"), crossing
signs and gradings, per-component basepoint (*) and homology (.) markers,
a partition of components into pieces, and an outer-face designation.

The rotation system at a crossing lists the four stubs counterclockwise:
index 0 = over-out, 1 = under-out (positive crossing) or under-in
(negative crossing), 2 = over-in, 3 = the remaining under end.  Quadrant
k lies between stubs k and k+1 (mod 4); its Reeb sign is + exactly when
stub k lies on the over-strand, so quadrants 0 and 2 are positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

SCHEMA_VERSION = 1

Stub = Tuple[str, int]  # (crossing id, stub index 0..3)
Dart = Tuple[int, int]  # (arc index, direction +1/-1)


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    id: str
    sign: int  # +1 or -1
    grading: Optional[int] = None


@dataclass(frozen=True)
class Component:
    id: str
    rot: int
    visits: Tuple[Tuple[str, str], ...]  # (crossing id, "over"|"under")


@dataclass(frozen=True)
class Arc:
    index: int
    component: str
    position: int  # arc after visit `position` of its component
    tail: Stub
    head: Stub
    dot: bool
    star: bool


@dataclass(frozen=True)
class Chord:
    id: str
    start_component: str  # under strand
    end_component: str  # over strand
    start_piece: int
    end_piece: int
    sign: int  # sigma: 1 iff negative crossing
    grading: Optional[int]

    @property
    def pure(self) -> bool:
        return self.start_component == self.end_component

    @property
    def piece_pure(self) -> bool:
        return self.start_piece == self.end_piece


def _out_stub(sign: int, strand: str) -> int:
    if strand == "over":
        return 0
    return 1 if sign == 1 else 3


def _in_stub(sign: int, strand: str) -> int:
    if strand == "over":
        return 2
    return 3 if sign == 1 else 1


class LagrangianDiagram:
    """Validated diagram with its derived planar-map structure."""

    def __init__(
        self,
        components: List[Component],
        crossings: List[Crossing],
        markers: Dict[str, Dict[str, int]],
        partition: Dict[str, int],
        options: Optional[dict] = None,
        name: str = "",
    ):
        self.components = list(components)
        self.crossings = list(crossings)
        self.markers = {c: dict(m) for c, m in markers.items()}
        self.partition = dict(partition)
        self.options = dict(options or {})
        self.name = name
        self.crossing_by_id = {c.id: c for c in self.crossings}
        self.component_by_id = {c.id: c for c in self.components}
        self._validate_combinatorics()
        self._build_arcs()
        self._build_faces()
        self._validate_planarity()

    # -- validation and derived structure ------------------------------------

    def _validate_combinatorics(self) -> None:
        if len(self.crossing_by_id) != len(self.crossings):
            raise DiagramError("duplicate crossing ids")
        if len(self.component_by_id) != len(self.components):
            raise DiagramError("duplicate component ids")
        seen: Dict[Tuple[str, str], int] = {}
        for comp in self.components:
            for cid, strand in comp.visits:
                if cid not in self.crossing_by_id:
                    raise DiagramError(f"unknown crossing {cid!r}")
                if strand not in ("over", "under"):
                    raise DiagramError(f"bad strand {strand!r}")
                seen[(cid, strand)] = seen.get((cid, strand), 0) + 1
        for c in self.crossings:
            for strand in ("over", "under"):
                if seen.get((c.id, strand), 0) != 1:
                    raise DiagramError(
                        f"crossing {c.id!r} must be visited exactly once as {strand}"
                    )
            if c.sign not in (1, -1):
                raise DiagramError(f"crossing {c.id!r} has bad sign")
            if c.grading is not None:
                sigma = 1 if c.sign == -1 else 0
                if c.grading % 2 != sigma % 2:
                    raise DiagramError(
                        f"crossing {c.id!r}: grading parity must match sign parity"
                    )
        pieces = set(self.partition.values())
        if set(self.partition) != set(self.component_by_id):
            raise DiagramError("partition must cover exactly the component ids")
        if pieces != set(range(1, len(pieces) + 1)):
            raise DiagramError("pieces must be numbered 1..N with no gaps")
        for comp in self.components:
            marks = self.markers.get(comp.id)
            if marks is None or "star" not in marks or "dot" not in marks:
                raise DiagramError(f"component {comp.id!r} needs star and dot markers")
            n = max(len(comp.visits), 1)
            for k in ("star", "dot"):
                if not (0 <= marks[k] < n):
                    raise DiagramError(f"component {comp.id!r}: {k} position out of range")

    def _build_arcs(self) -> None:
        self.arcs: List[Arc] = []
        self.stub_to_end: Dict[Stub, Tuple[int, str]] = {}
        self.arc_index: Dict[Tuple[str, int], int] = {}
        for comp in self.components:
            n = len(comp.visits)
            marks = self.markers[comp.id]
            for i in range(n):
                cid, strand = comp.visits[i]
                nid, nstrand = comp.visits[(i + 1) % n]
                tail = (cid, _out_stub(self.crossing_by_id[cid].sign, strand))
                head = (nid, _in_stub(self.crossing_by_id[nid].sign, nstrand))
                idx = len(self.arcs)
                self.arcs.append(
                    Arc(
                        index=idx,
                        component=comp.id,
                        position=i,
                        tail=tail,
                        head=head,
                        dot=(marks["dot"] == i),
                        star=(marks["star"] == i),
                    )
                )
                self.arc_index[(comp.id, i)] = idx
        for arc in self.arcs:
            for stub, end in ((arc.tail, "tail"), (arc.head, "head")):
                if stub in self.stub_to_end:
                    raise DiagramError(f"stub {stub} used twice")
                self.stub_to_end[stub] = (arc.index, end)

    def dart_head(self, dart: Dart) -> Stub:
        arc = self.arcs[dart[0]]
        return arc.head if dart[1] == 1 else arc.tail

    def dart_tail(self, dart: Dart) -> Stub:
        arc = self.arcs[dart[0]]
        return arc.tail if dart[1] == 1 else arc.head

    def dart_from_stub(self, stub: Stub) -> Dart:
        arc_idx, end = self.stub_to_end[stub]
        return (arc_idx, 1 if end == "tail" else -1)

    def corner_successor(self, dart: Dart) -> Tuple[Dart, Tuple[str, int]]:
        """Convex corner turn; returns next dart and the corner quadrant."""
        cid, k = self.dart_head(dart)
        out = (k + 3) % 4
        return self.dart_from_stub((cid, out)), (cid, out)

    def straight_successor(self, dart: Dart) -> Dart:
        cid, k = self.dart_head(dart)
        return self.dart_from_stub((cid, (k + 2) % 4))

    def _build_faces(self) -> None:
        """Faces are orbits of darts under the always-turn rule (face on left)."""
        self.face_of_dart: Dict[Dart, int] = {}
        self.faces: List[List[Dart]] = []
        for arc in self.arcs:
            for direction in (1, -1):
                dart = (arc.index, direction)
                if dart in self.face_of_dart:
                    continue
                orbit = []
                d = dart
                while d not in self.face_of_dart:
                    self.face_of_dart[d] = len(self.faces)
                    orbit.append(d)
                    d, _ = self.corner_successor(d)
                self.faces.append(orbit)
        self.outer_face = self._resolve_outer_face()

    def _resolve_outer_face(self) -> int:
        outer = self.options.get("outer")
        if outer is None:
            if not self.arcs:
                return 0
            raise DiagramError("options.outer (outer face designation) is required")
        comp, arc_pos, side = outer["component"], outer["arc"], outer["side"]
        idx = self.arc_index[(comp, arc_pos)]
        dart = (idx, 1) if side == "left" else (idx, -1)
        return self.face_of_dart[dart]

    def _validate_planarity(self) -> None:
        if not self.arcs:
            return
        # connectivity of the 4-valent map
        adj: Dict[str, set] = {c.id: set() for c in self.crossings}
        for arc in self.arcs:
            adj[arc.tail[0]].add(arc.head[0])
            adj[arc.head[0]].add(arc.tail[0])
        start = self.crossings[0].id
        seen = {start}
        stack = [start]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != len(self.crossings):
            raise DiagramError("diagram map must be connected")
        v, e, f = len(self.crossings), len(self.arcs), len(self.faces)
        if v - e + f != 2:
            raise DiagramError(f"not planar: V-E+F = {v}-{e}+{f} != 2")

    # -- derived data ---------------------------------------------------------

    @property
    def n_pieces(self) -> int:
        return len(set(self.partition.values()))

    def chords(self) -> List[Chord]:
        out = []
        over: Dict[str, str] = {}
        under: Dict[str, str] = {}
        for comp in self.components:
            for cid, strand in comp.visits:
                (over if strand == "over" else under)[cid] = comp.id
        grading_mode = self.options.get("grading", "z")
        for c in self.crossings:
            g = c.grading
            if g is None:
                if grading_mode == "z":
                    raise DiagramError(
                        f"crossing {c.id!r}: grading required in integer-grading mode"
                    )
                g = 1 if c.sign == -1 else 0
            out.append(
                Chord(
                    id=c.id,
                    start_component=under[c.id],
                    end_component=over[c.id],
                    start_piece=self.partition[under[c.id]],
                    end_piece=self.partition[over[c.id]],
                    sign=1 if c.sign == -1 else 0,
                    grading=g,
                )
            )
        return out

    def reeb_sign(self, quadrant: Tuple[str, int]) -> int:
        """+1 for quadrants 0 and 2 (stub on the over-strand), else -1."""
        return 1 if quadrant[1] in (0, 2) else -1

    def face_adjacency(self) -> List[Tuple[int, int, int]]:
        """(arc index, left face, right face) for each arc in + direction."""
        return [
            (a.index, self.face_of_dart[(a.index, 1)], self.face_of_dart[(a.index, -1)])
            for a in self.arcs
        ]

    def t_names(self) -> Tuple[str, ...]:
        if not self.options.get("h1_coefficients", True):
            return ()
        return tuple(f"T{i+1}" for i in range(len(self.components)))

    def t_degrees(self) -> Tuple[int, ...]:
        if not self.options.get("h1_coefficients", True):
            return ()
        return tuple(2 * c.rot for c in self.components)

    def t_index(self, component: str) -> int:
        for i, c in enumerate(self.components):
            if c.id == component:
                return i
        raise KeyError(component)

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "components": [
                {
                    "id": c.id,
                    "rot": c.rot,
                    "visits": [[cid, strand] for cid, strand in c.visits],
                }
                for c in self.components
            ],
            "crossings": [
                {
                    "id": c.id,
                    "sign": c.sign,
                    **({"grading": c.grading} if c.grading is not None else {}),
                }
                for c in self.crossings
            ],
            "markers": {c: dict(m) for c, m in sorted(self.markers.items())},
            "partition": dict(sorted(self.partition.items())),
            "options": self.options,
        }

    @staticmethod
    def from_json(data: dict) -> "LagrangianDiagram":
        try:
            components = [
                Component(
                    id=c["id"],
                    rot=int(c.get("rot", 0)),
                    visits=tuple((v[0], v[1]) for v in c["visits"]),
                )
                for c in data["components"]
            ]
            crossings = [
                Crossing(
                    id=c["id"],
                    sign=int(c["sign"]),
                    grading=(int(c["grading"]) if "grading" in c else None),
                )
                for c in data["crossings"]
            ]
        except (KeyError, TypeError, IndexError) as exc:
            raise DiagramError(f"malformed diagram document: {exc}") from exc
        return LagrangianDiagram(
            components=components,
            crossings=crossings,
            markers=data.get("markers", {}),
            partition=data.get("partition", {}),
            options=data.get("options", {}),
            name=data.get("name", ""),
        )

    @staticmethod
    def load(path) -> "LagrangianDiagram":
        with open(path) as fh:
            return LagrangianDiagram.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def parse_diagram(text: str) -> LagrangianDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid JSON: {exc}") from exc
    return LagrangianDiagram.from_json(data)
