"""CLI behaviour: exit codes, output formats, and the chain listing."""

import csv
import io
import json
import subprocess
import sys

import pytest

from derangement_spectrum import partitions as P
from derangement_spectrum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(stdout):
    return dict(line.split(": ", 1) for line in stdout.splitlines() if ": " in line)


def test_eig_auto(capsys):
    code, out, _ = run(capsys, "eig", "4,2,1^2")
    assert code == 0
    f = fields(out)
    assert f["eta"] == "21"
    assert f["sign"] == "+1"
    assert f["n"] == "8"
    assert f["multiplicity"] == str(P.dim((4, 2, 1, 1)) ** 2) == "8100"
    assert "agree" in f["routes"]


def test_eig_empty(capsys):
    code, out, _ = run(capsys, "eig", "()")
    assert code == 0
    assert fields(out)["eta"] == "1"


@pytest.mark.parametrize("method", ["new", "renteln", "schur", "character"])
def test_eig_methods(capsys, method):
    code, out, _ = run(capsys, "eig", "3,1", "--method", method)
    assert code == 0
    assert fields(out)["eta"] == "-3"


def test_eig_parse_error(capsys):
    code, _, err = run(capsys, "eig", "3,4")
    assert code == 2
    assert "weakly decreasing" in err
    code, _, err = run(capsys, "eig", "3,x")
    assert code == 2
    assert "item" in err


def test_eig_oracle_cap(capsys):
    code, _, err = run(capsys, "eig", "13", "--method", "character")
    assert code == 3
    assert "cap" in err
    code, out, _ = run(capsys, "eig", "13", "--method", "character", "--oracle-cap", "13")
    assert code == 0
    assert fields(out)["eta"] == "2290792932"


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "partition", "eta", "sign", "multiplicity"]
    assert len(rows) == 8
    assert rows[2] == ["5", "4,1", "-11", "-1", "16"]


def test_table_restricted(capsys):
    code, out, _ = run(capsys, "table", "11", "--min-first-part", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 29
    assert {r["partition"]: r["eta"] for r in rows}["7,3,1"] == "3338"


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "n": 2,
        "coverage": "full",
        "entries": [
            {"partition": [2], "eta": "1", "sign": 1, "multiplicity": "1"},
            {"partition": [1, 1], "eta": "-1", "sign": -1, "multiplicity": "1"},
        ],
    }
    assert list(doc) == ["n", "coverage", "entries"]
    assert list(doc["entries"][0]) == ["partition", "eta", "sign", "multiplicity"]


def test_json_round_trip_is_byte_identical(capsys):
    _, out, _ = run(capsys, "table", "20", "--format", "json")
    assert json.dumps(json.loads(out), indent=2) + "\n" == out
    doc = json.loads(out)
    # values beyond 2^53 survive as strings
    assert doc["entries"][0]["eta"] == "895014631192902121"


def test_formats_agree(capsys):
    _, text_out, _ = run(capsys, "table", "9", "--min-first-part", "3")
    _, csv_out, _ = run(capsys, "table", "9", "--min-first-part", "3", "--format", "csv")
    _, json_out, _ = run(capsys, "table", "9", "--min-first-part", "3", "--format", "json")
    from_csv = {(r["partition"], r["eta"]) for r in csv.DictReader(io.StringIO(csv_out))}
    from_json = {(P.format(tuple(e["partition"]), "exponent"), e["eta"])
                 for e in json.loads(json_out)["entries"]}
    lines = text_out.splitlines()
    assert lines[0] == "# n=9 coverage=first-part-at-least 3"
    from_text = {tuple(line.split()[:2]) for line in lines[2:]}
    assert from_csv == from_json == from_text
    assert len(from_csv) == len(P.enumerate_partitions(9, 3))


def test_table_jobs_do_not_change_output(capsys):
    _, serial, _ = run(capsys, "table", "14", "--format", "json")
    _, parallel, _ = run(capsys, "table", "14", "--format", "json", "--jobs", "3")
    assert serial == parallel


def test_table_bad_flags(capsys):
    for argv in (["table", "0"], ["table", "5", "--format", "xml"], ["table", "five"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_verify_tables_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables", "--max-n", "10")
    assert code == 0
    assert out.startswith("tables: 137 cases, 0 failures")


def test_verify_tables_full_reports_misprint(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables", "--max-n", "15")
    assert code == 1
    assert "fail: n=15 (6,4,2^2,1): expected -1181, got -1186" in out


def test_verify_cross(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cross", "--max-n", "10")
    assert code == 0
    assert "0 failures" in out


def test_verify_asp_needs_n_above_one(capsys):
    code, _, err = run(capsys, "verify", "--suite", "asp", "--max-n", "1")
    assert code == 2
    assert "max_n" in err


def test_verify_lists_at_most_20_failures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dominance", "--max-n", "13")
    assert code == 1
    assert out.count("  fail: ") == 20
    assert "... 35 more" in out


def test_verify_bad_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_chain_one_move(capsys):
    code, out, _ = run(capsys, "chain", "4,1,1", "4,2")
    assert code == 0
    lines = out.splitlines()
    assert "|eta|=13" in lines[0]
    assert "|eta|=15" in lines[1] and "move=(2,3)" in lines[1]
    assert lines[-1] == "length: 1"


def test_chain_trivial_and_long(capsys):
    code, out, _ = run(capsys, "chain", "2,2", "2,2")
    assert code == 0 and out.splitlines()[-1] == "length: 0"
    code, out, _ = run(capsys, "chain", "1^4", "4")
    assert code == 0 and out.splitlines()[-1] == "length: 3"
    assert "|eta|" not in out


def test_chain_errors(capsys):
    assert run(capsys, "chain", "4,2", "3,3")[0] == 4
    assert run(capsys, "chain", "4,2", "3")[0] == 2
    assert run(capsys, "chain", "4,x", "3")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "derangement_spectrum", "eig", "2,2"],
                          capture_output=True, text=True, check=False, timeout=60)
    assert proc.returncode == 0
    assert "eta: 3" in proc.stdout
