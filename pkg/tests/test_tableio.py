import json

import numpy as np
import pytest

from hypforge import cayley, tableio


def test_json_roundtrip(oct_table):
    text = tableio.table_to_json(oct_table)
    back = tableio.table_from_json(text)
    assert back.dim == oct_table.dim
    assert back.identity_index == oct_table.identity_index
    assert np.array_equal(back.constants, oct_table.constants)
    # writer output is normalized, so a second pass is byte-identical
    assert tableio.table_to_json(back) == text


def test_json_constants_sorted(oct_table):
    doc = tableio.table_to_dict(oct_table)
    assert doc["constants"] == sorted(doc["constants"])
    assert doc["metric"] == "euclidean"
    assert all(c != 0 for *_ijk, c in doc["constants"])


def test_reader_rejects_bad_documents():
    with pytest.raises(ValueError):
        tableio.table_from_dict([])
    with pytest.raises(ValueError):
        tableio.table_from_dict({"dim": 2})
    base = {"dim": 2, "identity_index": 0, "metric": "euclidean",
            "constants": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1],
                          [1, 1, 0, -1]]}
    assert tableio.table_from_dict(base).dim == 2
    bad = dict(base, metric="lorentzian")
    with pytest.raises(ValueError):
        tableio.table_from_dict(bad)
    bad = dict(base, constants=base["constants"] + [[0, 0, 5, 1]])
    with pytest.raises(ValueError):
        tableio.table_from_dict(bad)
    bad = dict(base, constants=base["constants"][:1])
    with pytest.raises(ValueError):
        tableio.table_from_dict(bad)


def test_save_load(tmp_path, oct_table):
    p = tmp_path / "oct.json"
    tableio.save_table(oct_table, str(p))
    back = tableio.load_table(str(p))
    assert np.array_equal(back.constants, oct_table.constants)


def test_csv_export(oct_table):
    text = tableio.export_csv(oct_table)
    lines = text.strip().split("\n")
    assert lines[0].startswith("*,e_0,e_1")
    assert len(lines) == 9
    # first column reproduces the basis, first row too
    assert lines[1].split(",")[1] == "e_0"
    assert lines[2].split(",")[0] == "e_1"
    assert lines[2].split(",")[2] == "-e_0"


def test_latex_export(golden_table):
    text = tableio.export_latex(golden_table)
    lines = text.strip().split("\n")
    assert lines[0].startswith(r"\begin{array}")
    assert lines[-1] == r"\end{array}"
    # cell (row e_1, col e_2) of the canonical table is e_3
    row1 = lines[4].split("&")
    assert row1[0].strip() == "e_1"
    assert row1[3].strip() == "e_3"
    # multi-digit subscripts are braced
    assert "e_{10}" in text


def test_one_dimensional_table():
    t = cayley.cd_generate(0)
    text = tableio.export_latex(t)
    assert "e_0 & e_0" in text
    csv = tableio.export_csv(t)
    assert csv == "*,e_0\ne_0,e_0\n"


def test_export_rejects_non_basis_products():
    C = np.zeros((2, 2, 2), dtype=np.int64)
    C[0, 0, 0] = C[0, 1, 1] = C[1, 0, 1] = 1
    C[1, 1, 0] = -2  # not a signed basis element
    t = cayley.MultTable(C, 0, {"route": "test", "params": {}})
    with pytest.raises(ValueError):
        tableio.export_csv(t)


def test_golden_fixture_shape(golden_table):
    assert golden_table.dim == 16
    assert golden_table.identity_index == 0
    C = golden_table.constants
    assert len(np.argwhere(C != 0)) == 256
    assert set(np.unique(C)) <= {-1, 0, 1}
