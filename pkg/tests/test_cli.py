import csv
import io
import json

import pytest
from click.testing import CliRunner

from powerlimits.cli import cli
from powerlimits.report import frac_from_json, render_json
from powerlimits.tori import GroupFamily, dump_custom_tori


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, [str(a) for a in args])

    return invoke


def test_limit_q(run):
    res = run("limit", "--family", "gl", "--n", 2, "--M", 2, "--q", 3)
    assert res.exit_code == 0
    assert "limit: 3/8" in res.output


def test_limit_residue_sl(run):
    res = run("limit", "--family", "sl", "--n", 2, "--M", 2, "--residue", 1)
    assert res.exit_code == 0
    assert "limit: 1/2" in res.output


def test_limit_custom(run, tmp_path):
    path = tmp_path / "gl2.json"
    path.write_text(dump_custom_tori(GroupFamily.gl(2)))
    res = run("limit", "--family", "custom", "--tori", path, "--M", 2, "--q", 3)
    assert res.exit_code == 0
    assert "limit: 3/8" in res.output


def test_limit_custom_bad_file(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "x", "rank": 1, "tori": [
        {"weyl_order": 2, "factors": [[-1, 1]]}, {"weyl_order": 3, "factors": [[1, 1]]}]}))
    res = run("limit", "--family", "custom", "--tori", path, "--M", 2, "--q", 3)
    assert res.exit_code == 2
    assert "class equation violated" in res.output


def test_limit_needs_exactly_one_of_q_residue(run):
    assert run("limit", "--family", "gl", "--n", 2, "--M", 2).exit_code == 2
    assert run("limit", "--family", "gl", "--n", 2, "--M", 2, "--q", 3, "--residue", 1).exit_code == 2
    assert run("limit", "--family", "gl", "--n", 2, "--M", 2, "--q", 6).exit_code == 2


def test_limit_decimals(run):
    res = run("limit", "--family", "gl", "--n", 3, "--M", 3, "--residue", 1, "--decimals", 5)
    assert "14/81" in res.output
    assert "rounded to 5 places): 0.17284" in res.output


@pytest.mark.parametrize("family, n, M, values", [
    ("gl", 2, 3, ["1", "2/9", "2/3"]),
    ("gl", 2, 2, ["1", "3/8"]),
    ("u", 3, 3, ["1", "2/3", "14/81"]),
])
def test_limits_all(run, family, n, M, values):
    res = run("limits-all", "--family", family, "--n", n, "--M", M, "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    got = {str(frac_from_json(v)) for v in doc["distinct_values"]}
    assert got == set(values)
    assert doc["distinct_count"] == str(len(values))


def test_limits_all_composite(run):
    res = run("limits-all", "--family", "gl", "--n", 2, "--M", 4)
    assert res.exit_code == 2


def test_census_table(run):
    res = run("census", "--family", "gl", "--n", 2, "--q", 3, "--M", 2, "--threads", 1)
    assert res.exit_code == 0
    assert "power_image  16" in res.output
    assert "group_order  48" in res.output


@pytest.mark.parametrize("n, q, M, image, order", [(2, 2, 3, "4", "6"), (1, 5, 2, "2", "4")])
def test_census_json(run, n, q, M, image, order):
    res = run("census", "--family", "gl", "--n", n, "--q", q, "--M", M, "--format", "json", "--threads", 1)
    doc = json.loads(res.output)
    assert doc["counts"]["power_image"] == image
    assert doc["counts"]["group_order"] == order
    assert doc["version"]
    assert set(doc["counts"]) == {"group_order", "power_image", "power_rs", "power_ss", "power_rg",
                                  "total_rs", "total_ss", "total_rg"}


def test_census_cap_exit_code(run):
    res = run("census", "--family", "gl", "--n", 4, "--q", 5, "--M", 2)
    assert res.exit_code == 3
    assert "predicted order" in res.output


@pytest.mark.parametrize("n, q, M, verdict", [(2, 7, 5, True), (2, 5, 5, False), (3, 4, 3, False)])
def test_surjective(run, n, q, M, verdict):
    res = run("surjective", "--n", n, "--q", q, "--M", M, "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["surjective"] is verdict


def test_surjective_composite(run):
    assert run("surjective", "--n", 2, "--q", 7, "--M", 6).exit_code == 2


def test_abelian(run):
    res = run("abelian", "--factors", "4,6", "--M", 2, "--format", "json")
    doc = json.loads(res.output)
    assert doc["formula"] == {"num": "1", "den": "4"}
    assert doc["census"] == doc["formula"] and doc["agree"] is True
    assert run("abelian", "--factors", "4,x", "--M", 2).exit_code == 2


def test_verify(run):
    ok = run("verify", "--family", "gl", "--n", 2, "--q", 5, "--M", 2, "--bound", 2, "--threads", 1)
    assert ok.exit_code == 0 and "PASS" in ok.output
    bad = run("verify", "--family", "gl", "--n", 2, "--q", 5, "--M", 2, "--bound", "1/10", "--threads", 1)
    assert bad.exit_code == 1 and "FAIL" in bad.output


JSON_COMMANDS = [
    ("limit", "--family", "gl", "--n", 3, "--M", 3, "--residue", 1),
    ("limit", "--family", "u", "--n", 3, "--M", 2, "--q", 5),
    ("limits-all", "--family", "gl", "--n", 4, "--M", 5),
    ("census", "--family", "u", "--n", 2, "--q", 2, "--M", 2, "--threads", 1),
    ("surjective", "--n", 2, "--q", 4, "--M", 3),
    ("abelian", "--factors", "6,9", "--M", 3),
]


@pytest.mark.parametrize("args", JSON_COMMANDS)
def test_json_roundtrip(run, args):
    res = run(*args, "--format", "json")
    assert res.exit_code == 0
    assert render_json(json.loads(res.output)) == res.output


def test_formats_agree_on_limit(run):
    args = ("limit", "--family", "gl", "--n", 3, "--M", 3, "--residue", 1)
    doc = json.loads(run(*args, "--format", "json").output)
    rows = list(csv.DictReader(io.StringIO(run(*args, "--format", "csv").output)))
    table = run(*args).output
    assert [r["term"] for r in rows] == [str(frac_from_json(t["term"])) for t in doc["terms"]]
    assert {r["total"] for r in rows} == {str(frac_from_json(doc["value"]))}
    for t in doc["terms"]:
        assert str(frac_from_json(t["term"])) in table


def test_formats_agree_on_census(run):
    args = ("census", "--family", "gl", "--n", 2, "--q", 3, "--M", 2, "--threads", 1)
    doc = json.loads(run(*args, "--format", "json").output)
    row = next(csv.DictReader(io.StringIO(run(*args, "--format", "csv").output)))
    table = run(*args).output
    for key, value in doc["counts"].items():
        assert row[key] == value
        assert any(line.split() == [key, value] for line in table.splitlines())


def test_csv_headers_fixed(run):
    out = run("limits-all", "--family", "gl", "--n", 2, "--M", 3, "--format", "csv").output
    assert out.splitlines()[0] == "family,M,condition,value"


def test_out_file(run, tmp_path):
    target = tmp_path / "r.json"
    res = run("limit", "--family", "gl", "--n", 2, "--M", 2, "--q", 3, "--format", "json", "--out", target)
    assert res.exit_code == 0 and res.output == ""
    assert json.loads(target.read_text())["value"] == {"num": "3", "den": "8"}
