import csv
import io
import json

import pytest

from linrel import relation as rel
from linrel.classification import (
    CSV_HEADER, ExportError, LabelCache, classify, enumerate_relations, export_csv,
    export_dot, export_json, relation_name, table_csv, table_dot, table_json,
)
from linrel.subspace import GuardError, subspace_count


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_census_dim_one(p):
    rels = list(enumerate_relations(p, 1))
    assert len(rels) == p + 3
    table = classify(p, 1)
    # degenerate quadruple plus one singleton per nonzero scalar
    assert sorted(table.sizes) == [1] * (p - 1) + [4]
    singles = [lab for lab in table.labels() if lab.dim == 1]
    assert len(set(singles)) == p - 1


def test_gf3_partition_with_zero_object():
    table = classify(3, 1, include_zero_object=True)
    names = {str(lab): sorted(relation_name(d) for d in m) for lab, m in table.classes.items()}
    assert names == {
        "d=0 []": sorted(["⊤", "⊥", "(·0)", "(·0)⁻¹", "id_0"]),
        "d=1 [[1, 1]]": ["(·2)"],
        "d=1 [[2, 1]]": ["(·1)"],
    }


def test_small_cases():
    assert len(classify(2, 0).classes) == 1
    assert sorted(classify(2, 1).sizes) == [1, 4]


def test_sizes_sum_to_count():
    table = classify(2, 2)
    assert table.total == subspace_count(4, 2) == 67
    assert len(table.classes) == 5


def test_guard():
    with pytest.raises(GuardError):
        classify(3, 7)


def test_worker_count_does_not_change_output():
    one = table_json(classify(2, 2))
    assert table_json(classify(2, 2, workers=3)) == one
    assert table_csv(classify(3, 1, workers=2)) == table_csv(classify(3, 1))


def test_cache_round_trip(tmp_path):
    path = tmp_path / "labels.json"
    first = table_json(classify(2, 2, cache=path))
    stored = json.loads(path.read_text())
    assert len(stored) == 67
    assert table_json(classify(2, 2, cache=path)) == first
    cache = LabelCache(path)
    doc = rel.to_document(rel.identity(2, 2))
    assert cache.get(doc) is not None


def test_csv_format():
    rows = list(csv.reader(io.StringIO(table_csv(classify(3, 1)))))
    assert rows[0] == CSV_HEADER
    assert sum(int(r[2]) for r in rows[1:]) == 6


def test_dot_format():
    text = table_dot(classify(3, 1, include_zero_object=True))
    assert text.startswith("digraph") and text.count("subgraph cluster_") == 3
    assert text.count("[label=") == 7


def test_json_format():
    doc = json.loads(table_json(classify(3, 1)))
    assert doc["total"] == 6 and doc["class_count"] == 3
    assert [c["size"] for c in doc["classes"]] == [4, 1, 1]


def test_exports(tmp_path):
    table = classify(2, 1)
    for fn, ext in [(export_json, "json"), (export_csv, "csv"), (export_dot, "dot")]:
        out = tmp_path / f"t.{ext}"
        fn(table, out)
        assert out.read_text(encoding="utf-8")


def test_export_failure_names_path(tmp_path):
    bad = tmp_path / "missing" / "t.json"
    with pytest.raises(ExportError, match="missing"):
        export_json(classify(2, 1), bad)
