"""Graph documents: JSON (versioned), DOT with positions, CSV edge lists."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from nanocone.families import FamilyInstance
from nanocone.graph import Graph

FORMAT_VERSION = 1


@dataclass(frozen=True)
class GraphDocument:
    family: str
    params: dict[str, int]
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    coordinates: tuple[tuple[Fraction, Fraction], ...] | None = None
    version: int = FORMAT_VERSION

    def __post_init__(self):
        # Graph validates range and self-loops and normalizes each pair
        g = Graph(self.vertex_count, tuple(self.edges))
        object.__setattr__(self, "edges", tuple(sorted(set(g.edges))))
        if self.coordinates is not None and len(self.coordinates) != self.vertex_count:
            raise ValueError(
                f"{len(self.coordinates)} coordinates for {self.vertex_count} vertices"
            )

    @classmethod
    def from_instance(cls, inst: FamilyInstance) -> GraphDocument:
        return cls(inst.family, inst.param_dict(), inst.graph.vertex_count, inst.graph.edges,
                   tuple(inst.embedding))

    @property
    def graph(self) -> Graph:
        return Graph(self.vertex_count, self.edges)


def to_json(doc: GraphDocument) -> str:
    payload = {
        "format": "nanocone-graph",
        "version": doc.version,
        "family": doc.family,
        "params": doc.params,
        "vertex_count": doc.vertex_count,
        "edges": [list(e) for e in doc.edges],
    }
    if doc.coordinates is not None:
        payload["coordinates"] = [[str(x), str(y)] for x, y in doc.coordinates]
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> GraphDocument:
    data = json.loads(text)
    if data.get("format") != "nanocone-graph":
        raise ValueError("not a nanocone graph document")
    if data.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported document version {data.get('version')!r}")
    coords = data.get("coordinates")
    if coords is not None:
        coords = tuple((Fraction(x), Fraction(y)) for x, y in coords)
    return GraphDocument(
        family=data["family"],
        params={str(k): int(v) for k, v in data["params"].items()},
        vertex_count=int(data["vertex_count"]),
        edges=tuple((int(u), int(v)) for u, v in data["edges"]),
        coordinates=coords,
        version=data["version"],
    )


_SQRT3_HALF = 3 ** 0.5 / 2


def to_dot(doc: GraphDocument) -> str:
    """DOT text with pinned ``pos`` attributes when coordinates are present.

    Lattice abscissas are stored in units of sqrt(3)/2; they are scaled back
    here so a renderer draws regular hexagons.
    """
    xscale = 1.0 if doc.family == "Cone" else _SQRT3_HALF
    label = doc.family + "".join(f" {k}={v}" for k, v in doc.params.items())
    lines = ["graph nanocone {", f'  label="{label}";', "  node [shape=point];"]
    for v in range(doc.vertex_count):
        if doc.coordinates is None:
            lines.append(f"  {v};")
        else:
            x, y = doc.coordinates[v]
            lines.append(f'  {v} [pos="{float(x) * xscale:.6f},{float(y):.6f}!"];')
    lines += [f"  {u} -- {v};" for u, v in doc.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(doc: GraphDocument) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target"])
    w.writerows(doc.edges)
    return buf.getvalue()


def from_csv(text: str, vertex_count: int | None = None) -> Graph:
    """Edge list back to a graph; isolated trailing vertices need ``vertex_count``."""
    rows = list(csv.reader(io.StringIO(text)))
    if rows and rows[0] == ["source", "target"]:
        rows = rows[1:]
    edges = [(int(u), int(v)) for u, v in rows if (u, v)]
    n = max((max(e) for e in edges), default=-1) + 1
    return Graph(n if vertex_count is None else vertex_count, tuple(edges))


def serialize(doc: GraphDocument, fmt: str) -> str:
    writers = {"json": to_json, "dot": to_dot, "csv": to_csv}
    if fmt not in writers:
        raise ValueError(f"unknown format {fmt!r}; choose json, dot or csv")
    return writers[fmt](doc)
