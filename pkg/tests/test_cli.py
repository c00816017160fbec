import io
import json
import subprocess
import sys

import pytest

from kapsupp.catalog import default_catalog_path
from kapsupp.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, parse_n, UsageError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_table1_text_and_json():
    code, text, _ = run("table1", "--witnesses")
    assert code == EXIT_OK
    assert "36 relations, 27 eliminated, 9 surviving: 5, 7, 14, 17, 21, 22, 25, 26, 29" in text
    assert "row 26: x =" in text
    code, out, _ = run("table1", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["matches_reference"]
    assert doc["config"]["max_cosets"] == 100_000
    assert len(doc["rows"]) == 36


def test_table1_is_deterministic():
    assert run("table1", "--format", "json") == run("table1", "--format", "json")
    assert run("table1", "--format", "csv")[1].startswith("row,relation,verdict")


def test_bounds_exit_codes():
    code, text, _ = run("bounds")
    assert code == EXIT_OK
    assert "zero divisors need |supp| >= 10 and units |supp| >= 9" in text
    code, text, _ = run("bounds", "--no-oracle", "census-bound")
    assert code == EXIT_MISMATCH
    assert "open: zero_divisor n=8, unit n=8" in text
    code, text, _ = run("bounds", "--dykema-reading", "literal", "--format", "json")
    assert code == EXIT_MISMATCH
    assert json.loads(text)["open"] == ["zero_divisor n=9", "unit n=3", "unit n=7"]


def test_census_small_range(tmp_path):
    code, text, _ = run("census", "--n", "4-12", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    assert "all counts agree" in text
    code, out, _ = run("census", "--n", "10,12", "--format", "csv", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("# catalog ")
    assert lines[2] == "row,name,n=10,n=12"
    assert ",Total,6,22" in lines


def test_census_cold_and_cached_identical(tmp_path):
    argv = ("census", "--n", "6-14", "--format", "json", "--cache-dir", str(tmp_path))
    cold = run(*argv)
    assert (tmp_path / "census-n14.g6").exists()
    assert run(*argv) == cold
    assert cold[0] == EXIT_OK


def test_reports_embed_catalog_version(catalog):
    for argv in (["table1"], ["bounds"], ["census", "--n", "6"]):
        code, out, _ = run(*argv, "--format", "json")
        doc = json.loads(out)
        assert doc["catalog_version"] == catalog.version
        assert doc["config"]["command"] == argv[0]


def test_bounds_json_replays():
    code, out, _ = run("bounds", "--no-oracle", "census", "--format", "json")
    cfg = json.loads(out)["config"]
    argv = ["bounds", "--format", "json", "--dykema-reading", cfg["dykema_reading"]]
    for name in cfg["disabled_oracles"]:
        argv += ["--no-oracle", name]
    assert run(*argv) == (code, out, "")


def test_catalog_verify_bundled():
    code, out, _ = run("catalog-verify", "--format", "json")
    doc = json.loads(out)
    # published case totals are not reproduced, so the bundled catalog fails
    assert code == EXIT_MISMATCH
    assert "C4--C5" in doc["failed"]
    assert [e["name"] for e in doc["provisional"]] == ["C3-C3", "C4-C6(--C7--)(C7-2)"]
    firm = {e["name"]: e for e in doc["entries"]}
    assert firm["C3"]["passed"] is True and firm["K_{2,3}"]["passed"] is True


@pytest.mark.parametrize("argv", [
    ["census", "--n", "18"],
    ["census", "--n", "5"],
    ["census", "--n", "2"],
    ["census", "--n", "x"],
    ["table1", "--max-cosets", "10"],
    ["bounds", "--jobs", "0"],
    ["bounds", "--no-oracle", "oracle-of-delphi"],
    ["no-such-command"],
    [],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_parse_n():
    assert parse_n(None, False) == (4, 6, 8, 10, 12, 14, 16)
    assert parse_n("6,10", False) == (6, 10)
    assert parse_n("14-20", True) == (14, 16, 18, 20)
    with pytest.raises(UsageError):
        parse_n("20", False)


def test_perturbed_catalog_exits_one(tmp_path):
    doc = json.loads(default_catalog_path().read_text())
    doc["filters"][1]["expected"]["total"] += 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    for cmd in ("catalog-verify", "census"):
        code, _, err = run(cmd, "--catalog", str(path), "--n", "6")
        assert code == EXIT_MISMATCH
        assert "catalog rejected" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kapsupp", "--version"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("kapsupp ")
    res = subprocess.run([sys.executable, "-m", "kapsupp", "census", "--n", "99"], capture_output=True, text=True)
    assert res.returncode == EXIT_USAGE
