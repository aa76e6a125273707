"""JSON documents describing a carrier plus a family, a space or a quasiorder.

Accepted shape::

    {"ground": ["1", "2", "3"],
     "open_sets": [[], ["1", "2"], ["1", "2", "3"]],   # or "family" or "quasiorder"
     "name": "optional"}

``quasiorder`` is a list of ``[x, y]`` label pairs meaning ``x <= y``; the
reflexive-transitive closure is taken on load.  Keys other than these are
ignored, so an ``analyze --json`` report loads back as the same document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import DocumentError, NotAGeneralizedTopology
from .ground import GroundSet, SetFamily, family_to_json
from .order import Quasiorder
from .topo import GenTopology

SOURCE_KEYS = ("family", "open_sets", "quasiorder")


@dataclass
class SpaceDocument:
    ground: GroundSet
    source: str  # one of SOURCE_KEYS
    family: Optional[SetFamily] = None
    quasiorder: Optional[Quasiorder] = None
    name: Optional[str] = None
    notes: list = field(default_factory=list)

    def space(self) -> GenTopology:
        """The space the document stands for.

        Open sets are taken as given, a quasiorder yields its specialization
        topology, and a bare family the generalized topology it is a base of.
        """
        from . import order, topo

        if self.source == "open_sets":
            return GenTopology(self.ground, self.family, validate=False)
        if self.source == "quasiorder":
            return GenTopology(self.ground, order.specialization_topology(self.quasiorder), validate=False)
        return topo.mu_of_family(self.family, self.ground)

    def to_json(self) -> dict:
        out: dict = {"ground": list(self.ground.labels)}
        if self.name is not None:
            out["name"] = self.name
        if self.source == "quasiorder":
            labels = self.ground.labels
            out["quasiorder"] = [[labels[x], labels[y]] for x, y in self.quasiorder.pairs() if x != y]
        else:
            out[self.source] = family_to_json(self.ground, self.family)
        return out


def _subset(ground: GroundSet, item, where: str) -> int:
    if not isinstance(item, list):
        raise DocumentError(f"{where}: expected a list of element labels, got {type(item).__name__}")
    mask = 0
    for k, label in enumerate(item):
        if not isinstance(label, (str, int)) or isinstance(label, bool):
            raise DocumentError(f"{where}[{k}]: labels must be strings or integers")
        try:
            mask |= 1 << ground.index(label)
        except KeyError:
            raise DocumentError(f"{where}[{k}]: element {label!r} is not in ground") from None
    return mask


def parse_document(data) -> SpaceDocument:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if "ground" not in data:
        raise DocumentError("document has no 'ground' key")
    raw_ground = data["ground"]
    if not isinstance(raw_ground, list):
        raise DocumentError("'ground' must be a list of labels")
    try:
        ground = GroundSet(raw_ground)
    except ValueError as exc:
        raise DocumentError(f"ground: {exc}") from None
    present = [k for k in SOURCE_KEYS if k in data]
    if len(present) != 1:
        raise DocumentError(
            f"document needs exactly one of {', '.join(SOURCE_KEYS)}; found {present or 'none'}"
        )
    source = present[0]
    body = data[source]
    if not isinstance(body, list):
        raise DocumentError(f"'{source}' must be a list")
    name = data.get("name")
    if source == "quasiorder":
        pairs = []
        for k, item in enumerate(body):
            if not isinstance(item, list) or len(item) != 2:
                raise DocumentError(f"quasiorder[{k}]: expected a pair [x, y]")
            x = _subset(ground, [item[0]], f"quasiorder[{k}]").bit_length() - 1
            y = _subset(ground, [item[1]], f"quasiorder[{k}]").bit_length() - 1
            pairs.append((x, y))
        q = Quasiorder.from_pairs(ground.size, pairs)
        given = {(x, y) for x, y in pairs if x != y}
        added = [(x, y) for x, y in q.pairs() if x != y and (x, y) not in given]
        notes = ["quasiorder: reflexive-transitive closure applied"]
        if added:
            labels = ground.labels
            shown = ", ".join(f"{labels[x]}<={labels[y]}" for x, y in added)
            notes.append(f"quasiorder: closure added {shown}")
        return SpaceDocument(ground, source, quasiorder=q, name=name, notes=notes)
    family = SetFamily(_subset(ground, item, f"{source}[{k}]") for k, item in enumerate(body))
    if source == "open_sets":
        try:
            GenTopology(ground, family)
        except NotAGeneralizedTopology as exc:
            raise DocumentError(f"open_sets is not a generalized topology: {exc}") from exc
    return SpaceDocument(ground, source, family=family, name=name)


def loads(text: str) -> SpaceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_document(data)


def load(path) -> SpaceDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
