import json
from fractions import Fraction as F

import pytest

from singmod.shimura import (
    DataFileError,
    bundled_path,
    check_document,
    dump_norm_file,
    load_norm_file,
    validate_data,
)


def _doc():
    return json.loads(bundled_path().read_text())


def test_bundled_file_valid():
    rep = validate_data(bundled_path())
    assert rep.ok
    ds = rep.dataset
    assert (ds.curve_discriminant, ds.cm_discriminant, ds.degree) == (6, 244, 3)
    assert [p.zeta for p in ds.points] == [0, 1, F(-2187, 125), F(8748, 15625)]
    assert ds.points[0].norm == F(2**6 * 3**21 * 19**4, 17**6 * 29**6)


def test_duplicate_zeta(tmp_path):
    doc = _doc()
    doc["points"][2]["zeta"] = "1"
    rep = check_document(doc)
    assert not rep.ok
    assert any("duplicate abscissa 1" in p for p in rep.problems)


def test_insufficient_points():
    doc = _doc()
    doc["points"] = doc["points"][:3]
    rep = check_document(doc)
    assert any("insufficient points" in p for p in rep.problems)


def test_key_paths_in_diagnostics():
    doc = _doc()
    doc["points"][1]["normNum"] = "2^x"
    del doc["degree"]
    rep = check_document(doc)
    assert any(p.startswith("points[1].normNum") for p in rep.problems)
    assert any(p.startswith("degree") for p in rep.problems)


def test_non_positive_norm():
    doc = _doc()
    doc["points"][0]["normNum"] = "-5"
    assert any("positive rational" in p for p in check_document(doc).problems)


def test_bad_json_reports_line(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "curveDiscriminant": 6,\n  oops\n}')
    rep = validate_data(p)
    assert not rep.ok and "line 3" in rep.problems[0]
    with pytest.raises(DataFileError):
        load_norm_file(p)


def test_dump_round_trip(tmp_path):
    ds = load_norm_file(bundled_path())
    p = tmp_path / "copy.json"
    p.write_text(dump_norm_file(ds))
    assert load_norm_file(p) == ds
