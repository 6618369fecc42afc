"""JSON formats for instances, lists, colorings and reports.

Instance files carry a ``kind`` tag:

* ``intervals``: ``{"kind": "intervals", "n": 7}`` (edges implicit);
* ``hypergraph``: ``{"n": 3, "edges": [[0, 1], ...]}``;
* ``points-discs`` / ``points-halfplanes``: ``{"points": [[x, y], ...]}``;
* ``discs``: ``{"discs": [[cx, cy, r2], ...]}``;
* ``graph``: ``{"n": 4, "adj": [[1, 2, 3], [0], ...], "pos": [[x, y], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import InputError
from .hypergraph import ColorListFamily, Hypergraph, as_coloring

KINDS = ("intervals", "hypergraph", "points-discs", "points-halfplanes", "discs", "graph")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj))


def read_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


@dataclass(frozen=True)
class Instance:
    kind: str
    data: dict
    name: str = ""

    @property
    def n(self) -> int:
        d = self.data
        if self.kind in ("intervals", "hypergraph", "graph"):
            return d["n"]
        if self.kind == "discs":
            return len(d["discs"])
        return len(d["points"])

    def to_json(self) -> dict:
        out = dict(self.data)
        out["kind"] = self.kind
        if self.name:
            out["name"] = self.name
        return out


def instance_from_json(obj) -> Instance:
    if not isinstance(obj, dict):
        raise InputError("instance must be a JSON object")
    kind = obj.get("kind")
    if kind is None:
        kind = "hypergraph" if "edges" in obj else "graph" if "adj" in obj else None
    if kind not in KINDS:
        raise InputError(f"unknown instance kind {kind!r}")
    need = {"intervals": ["n"], "hypergraph": ["n", "edges"], "points-discs": ["points"],
            "points-halfplanes": ["points"], "discs": ["discs"], "graph": ["n", "adj"]}[kind]
    for key in need:
        if key not in obj:
            raise InputError(f"{kind} instance lacks {key!r}")
    data = {k: v for k, v in obj.items() if k not in ("kind", "name")}
    return Instance(kind, data, obj.get("name", ""))


def load_instance(path) -> Instance:
    return instance_from_json(read_json(path))


def hypergraph_to_json(H: Hypergraph) -> dict:
    return {"n": H.n, "edges": [list(e) for e in H.edges]}


def hypergraph_from_json(obj) -> Hypergraph:
    return Hypergraph(obj["n"], obj["edges"])


def lists_to_json(family: ColorListFamily) -> dict:
    return {"lists": [list(lst) for lst in family]}


def lists_from_json(obj) -> ColorListFamily:
    if not isinstance(obj, dict) or "lists" not in obj:
        raise InputError("list file must be an object with a 'lists' array")
    return ColorListFamily(obj["lists"])


def coloring_to_json(colors) -> dict:
    return {"colors": list(colors)}


def coloring_from_json(obj, n: int | None = None) -> tuple[int, ...]:
    if not isinstance(obj, dict) or "colors" not in obj:
        raise InputError("coloring file must be an object with a 'colors' array")
    colors = obj["colors"]
    return as_coloring(colors, len(colors) if n is None else n)
