"""End-to-end tests of the command line tool named by HEXAMOMENT_BIN."""

import json
import os
import pathlib
import subprocess

import jsonschema

BIN = os.environ["HEXAMOMENT_BIN"]
DOCS = pathlib.Path(__file__).resolve().parents[2] / "docs"


def run(*args, **kwargs):
    return subprocess.run([BIN, *args], capture_output=True, text=True, **kwargs)


def validate(doc, schema_name):
    schema = json.loads((DOCS / schema_name).read_text())
    jsonschema.validate(doc, schema)


def test_count():
    assert run("count", "1", "1", "1").stdout.strip() == "2"
    assert run("count", "2", "2", "2").stdout.strip() == "20"
    assert run("count", "6", "6", "6").returncode == 0


def test_bad_dims_are_usage_errors():
    r = run("count", "0", "1", "1")
    assert r.returncode == 1
    assert run("count", "1", "1").returncode == 1
    assert run("nonsense").returncode == 1


def test_prob_table_json():
    r = run("prob-table", "1", "1", "1", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    validate(doc, "prob_table.schema.json")
    assert doc["version"] == 1
    assert doc["sum"] == "1"
    entries = {(e["x"], e["y"]): e["p"] for e in doc["entries"]}
    assert entries == {(1, 0): "1/2", (1, 1): "1/2"}
    validate(json.loads(run("prob-table", "3", "5", "4", "--format", "json").stdout),
             "prob_table.schema.json")


def test_prob_table_csv():
    r = run("prob-table", "2", "2", "2", "--format", "csv")
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "a,b,c,x,y,p_num,p_den"
    assert lines[-1] == "# sum = 4"
    assert "2,2,2,1,0,3,10" in lines


def test_prob_table_float_flag():
    doc = json.loads(run("prob-table", "1", "1", "1", "--format", "json", "--float").stdout)
    assert doc["entries"][0]["p_float"] == 0.5


def test_moments():
    assert "horizontal = 0" in run("moments", "1", "1", "1").stdout
    doc = json.loads(run("moments", "2", "2", "2", "--format", "json").stdout)
    validate(doc, "moments.schema.json")
    assert doc["vertical"] == "18"
    assert doc["horizontal"] == "2"
    assert doc["consistent"] is True
    doc = json.loads(run("moments", "3", "5", "4", "--format", "json", "--float").stdout)
    validate(doc, "moments.schema.json")
    assert doc["horizontal"] == "40"
    assert doc["horizontal_float"] == 40.0


def test_verify_single_box():
    assert run("verify", "2", "3", "2").returncode == 0
    assert run("verify", "3", "2", "2").returncode == 0
    r = run("verify", "2", "2", "2", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    validate(doc, "verify.schema.json")
    assert doc["all_pass"] is True
    assert {c["name"] for c in doc["checks"]} >= {
        "row-sums",
        "column-sums",
        "column-first-moments",
        "moment-split",
        "table-symmetry",
    }


def test_verify_sweep():
    r = run("verify", "--max", "2")
    assert r.returncode == 0
    assert "all" in r.stdout.splitlines()[-1]


def test_injected_fault_is_detected():
    r = run("verify", "2", "2", "2", "--inject-fault")
    assert r.returncode == 2
    assert "FAIL row-sums" in r.stdout


def test_sample_determinism():
    args = ("sample", "2", "2", "2", "--seed", "9", "--count", "4", "--format", "json")
    first = run(*args)
    second = run(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    validate(doc, "sample.schema.json")
    assert doc["count"] == 4
    assert len(doc["samples"]) == 4


def test_sample_svg_render():
    r = run("sample", "3", "5", "4", "--seed", "1", "--render", "svg")
    assert r.returncode == 0
    assert r.stdout.startswith("<?xml")
    assert r.stdout.count('class="horizontal"') == 15
    assert "</svg>" in r.stdout


def test_sample_ascii_render():
    r = run("sample", "2", "2", "2", "--seed", "3", "--render", "ascii")
    assert r.returncode == 0
    assert "_" in r.stdout


def test_resource_limit_exit_code():
    r = run("--limit", "5", "count", "4", "4", "4")
    assert r.returncode == 3
    assert "limit" in r.stderr
    assert run("--limit", "5", "--force", "count", "4", "4", "4").stdout.strip() == "232848"


def test_env_limit():
    env = dict(os.environ, HEXAMOMENT_LIMIT="5")
    r = subprocess.run([BIN, "count", "4", "4", "4"], capture_output=True, text=True, env=env)
    assert r.returncode == 3
