"""Enumerate every endorelation on GF(p)^n and group them by Szymczak class."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import relation as rel
from .field import Prime
from .dynamics import EndoObject
from .relation import LinearRelation
from .subspace import (
    ENUMERATION_LIMIT,
    GuardError,
    enumerate_subspaces,
    pivot_patterns,
    subspaces_with_pivots,
)
from .szymczak import SzymClassLabel, szym_label

CSV_HEADER = ["label_dim", "invariant_factors", "class_size", "members"]


class ExportError(OSError):
    """An output file could not be written."""


def _check_guard(p: int, n: int) -> None:
    if p ** (2 * n) > ENUMERATION_LIMIT:
        raise GuardError(f"enumerating relations on GF({p})^{n} exceeds p^(2n) <= 2^20")


def enumerate_relations(p: int, n: int) -> Iterator[LinearRelation]:
    """All endorelations on GF(p)^n, in subspace enumeration order of GF(p)^(2n)."""
    p = Prime(p)
    _check_guard(p, n)
    for g in enumerate_subspaces(p, 2 * n):
        yield LinearRelation(p, n, n, g)


def zero_object_document(p: int) -> dict:
    return rel.to_document(rel.identity(0, p))


def relation_name(doc: dict) -> str:
    """Short display name; the familiar symbols for relations on GF(p)^1."""
    dd, dc, gens = doc["dim_dom"], doc["dim_cod"], doc["generators"]
    if dd == dc == 0:
        return "id_0"
    if dd == dc == 1:
        if len(gens) == 2:
            return "⊤"
        if not gens:
            return "⊥"
        a, b = gens[0]
        return "(·0)⁻¹" if a == 0 else f"(·{b})"
    return json.dumps(gens, separators=(",", ":"))


def _order_key(doc: dict) -> tuple:
    # matches enumerate_subspaces order; the zero object sorts last
    if doc["dim_dom"] == 0 and doc["dim_cod"] == 0:
        return (1,)
    gens = doc["generators"]
    return (0, len(gens), tuple(x for row in gens for x in row))


class LabelCache:
    """On-disk map from relation-document hash to class label (JSON file)."""

    def __init__(self, path: str | os.PathLike | None):
        self.path = path
        self.entries: dict[str, dict] = {}
        self.dirty = False
        if path is not None and os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                self.entries = json.load(fh)

    @staticmethod
    def key(doc: dict) -> str:
        return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()

    def get(self, doc: dict) -> SzymClassLabel | None:
        hit = self.entries.get(self.key(doc))
        return SzymClassLabel.from_document(hit) if hit else None

    def put(self, doc: dict, label: SzymClassLabel) -> None:
        self.entries[self.key(doc)] = label.to_document()
        self.dirty = True

    def save(self) -> None:
        if self.path is None or not self.dirty:
            return
        tmp = f"{self.path}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(self.entries, fh, sort_keys=True)
        os.replace(tmp, self.path)
        self.dirty = False


@dataclass
class ClassTable:
    p: int
    dim: int
    classes: dict[SzymClassLabel, list[dict]]
    include_zero_object: bool = False
    elapsed: float = field(default=0.0, compare=False)

    @property
    def total(self) -> int:
        return sum(len(m) for m in self.classes.values())

    @property
    def sizes(self) -> list[int]:
        return [len(self.classes[k]) for k in self.labels()]

    def labels(self) -> list[SzymClassLabel]:
        return sorted(self.classes)

    def class_of(self, doc: dict) -> SzymClassLabel:
        for label, members in self.classes.items():
            if doc in members:
                return label
        raise KeyError(relation_name(doc))

    def to_document(self) -> dict:
        # elapsed time is left out so that output is reproducible byte for byte
        return {
            "p": self.p,
            "dim": self.dim,
            "include_zero_object": self.include_zero_object,
            "total": self.total,
            "class_count": len(self.classes),
            "classes": [
                {"label": k.to_document(), "size": len(self.classes[k]), "members": self.classes[k]}
                for k in self.labels()
            ],
        }


def _label_shard(args) -> list[tuple[dict, dict]]:
    p, n, pivots = args
    out = []
    for g in subspaces_with_pivots(p, 2 * n, pivots):
        alpha = LinearRelation(Prime(p), n, n, g)
        out.append((rel.to_document(alpha), szym_label(EndoObject(alpha)).to_document()))
    return out


def classify(
    p: int,
    n: int,
    include_zero_object: bool = False,
    workers: int = 1,
    cache: str | os.PathLike | None = None,
) -> ClassTable:
    """Fold :func:`szym_label` over every endorelation on GF(p)^n.

    Members within a class follow enumeration order and classes are sorted
    by label, so the table does not depend on ``workers``.
    """
    start = time.perf_counter()
    p = Prime(p)
    _check_guard(p, n)
    store = LabelCache(cache)
    pairs: list[tuple[dict, SzymClassLabel]] = []
    if workers > 1 and cache is None:
        shards = [(int(p), n, piv) for r in range(2 * n + 1) for piv in pivot_patterns(2 * n, r)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_label_shard, shards):
                pairs.extend((d, SzymClassLabel.from_document(lab)) for d, lab in chunk)
    else:
        for alpha in enumerate_relations(p, n):
            doc = rel.to_document(alpha)
            label = store.get(doc)
            if label is None:
                label = szym_label(EndoObject(alpha))
                store.put(doc, label)
            pairs.append((doc, label))
        store.save()
    if include_zero_object:
        pairs.append((zero_object_document(p), szym_label(EndoObject.zero(p))))

    classes: dict[SzymClassLabel, list[dict]] = {}
    for doc, label in pairs:
        classes.setdefault(label, []).append(doc)
    for members in classes.values():
        members.sort(key=_order_key)
    return ClassTable(int(p), n, classes, include_zero_object, time.perf_counter() - start)


# exports -------------------------------------------------------------------


def table_json(table: ClassTable) -> str:
    return json.dumps(table.to_document(), indent=2, ensure_ascii=False) + "\n"


def table_csv(table: ClassTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for label in table.labels():
        members = table.classes[label]
        w.writerow([
            label.dim,
            json.dumps(label.invariant_factors, separators=(",", ":")),
            len(members),
            ";".join(relation_name(d) for d in members),
        ])
    return buf.getvalue()


def _dot_quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def table_dot(table: ClassTable) -> str:
    lines = [f"digraph szym_classes_p{table.p}_n{table.dim} {{", "  node [shape=box];"]
    node = 0
    for i, label in enumerate(table.labels()):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f"    label={_dot_quote(str(label))};")
        for doc in table.classes[label]:
            gens = json.dumps(doc["generators"], separators=(",", ":"))
            name = relation_name(doc)
            text = gens if name == gens else f"{name}\\n{gens}"
            lines.append(f"    r{node} [label={_dot_quote(text)}];")
            node += 1
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write(text: str, path) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise ExportError(f"cannot write {path}: {exc.strerror or exc}") from exc


def export_json(table: ClassTable, path) -> None:
    _write(table_json(table), path)


def export_csv(table: ClassTable, path) -> None:
    _write(table_csv(table), path)


def export_dot(table: ClassTable, path) -> None:
    _write(table_dot(table), path)
