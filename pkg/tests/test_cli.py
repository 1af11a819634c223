import csv
import io
import json

import pytest

from permorder.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(*argv):
    code, out, _ = call(*argv)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"tool", "version", "command", "result"}
    return doc["result"]


def test_rsk_forward():
    assert payload("rsk", "--perm", "2,3,1") == {"P": [[1, 3], [2]], "Q": [[1, 2], [3]], "shape": [2, 1], "lds": 2}


def test_rsk_inverse():
    assert payload("rsk", "--P", "[[1,3],[2]]", "--Q", "1,2/3") == {"perm": [2, 3, 1]}


def test_count_xi_shapes():
    assert payload("count", "xi", "--n", "4", "--k", "2", "--method", "shapes") == {"value": "14", "method": "shapes"}


@pytest.mark.parametrize("n", range(1, 9))
def test_count_methods_agree(n):
    for k in range(1, n + 1):
        methods = ["brute", "shapes", "series"] + (["closed"] if k == 3 else [])
        values = {payload("count", "xi", "--n", str(n), "--k", str(k), "--method", m)["value"] for m in methods}
        assert len(values) == 1


def test_count_other_targets():
    assert payload("count", "beth", "--n", "4", "--k", "2")["value"] == "6"
    assert payload("count", "beth", "--n", "4", "--k", "2", "--method", "brute")["value"] == "6"
    assert payload("count", "epsilon", "--n", "3")["values"] == {"1": "1", "2": "3", "3": "1"}
    assert payload("count", "epsilon", "--n", "3", "--k", "2")["value"] == "3"
    assert payload("count", "lds-dist", "--n", "4")["values"] == {"1": "1", "2": "13", "3": "9", "4": "1"}
    assert payload("count", "catalan", "--n", "4")["value"] == "14"
    assert payload("count", "catalan", "--n", "6", "--method", "brute")["value"] == "132"


def test_big_counts_are_strings():
    result = payload("count", "xi", "--n", "40", "--k", "3")
    assert isinstance(result["value"], str) and int(result["value"]) > 2**64


def test_bounds_verify_exit_zero():
    code, out, _ = call("bounds", "verify", "--max-n", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["all_pass"] is True
    row = next(r for r in doc["result"]["rows"] if (r["statistic"], r["n"], r["k"]) == ("xi", 4, 2))
    assert row["exact"] == "14" and row["bound"] == {"num": "256", "den": "1"}
    assert row["ratio"] == {"num": "7", "den": "128"}


def test_bounds_verify_csv():
    code, out, _ = call("bounds", "verify", "--max-n", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["statistic", "n", "k", "exact", "bound_num", "bound_den", "ratio", "pass"]
    r = next(r for r in rows if r["statistic"] == "xi" and r["n"] == "3" and r["k"] == "3")
    assert (r["bound_num"], r["bound_den"], r["pass"]) == ("729", "4", "true")


def test_bounds_verify_failure_exit_code():
    code, out, _ = call("bounds", "verify", "--max-n", "19", "--statistics", "xi", "--xi-method", "shapes", "--k", "19")
    assert code == 1
    doc = json.loads(out)
    assert doc["result"]["all_pass"] is False


def test_usage_errors():
    assert call()[0] == 2
    assert call("count", "xi", "--n", "4")[0] == 2
    assert call("rsk", "--perm", "1,1,2")[0] == 2
    assert call("count", "xi", "--n", "4", "--k", "2", "--method", "closed")[0] == 2
    code, out, err = call("knuth", "forward")
    assert code == 2 and out == "" and json.loads(err)["error"] == "usage"


def test_guard_violation_and_override():
    code, out, err = call("count", "xi", "--n", "10", "--k", "3", "--method", "brute")
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == "guard"
    code, out, err = call("tableaux", "enumerate", "--shape", "7,6", "--guard", "13")
    assert code == 0 and "warning" in err
    assert json.loads(out)["result"]["count"] == "429"


def test_knuth_commands():
    assert payload("knuth", "forward", "--pairs", "1,1;1,3;2,2") == {"P": [[1, 2], [3]], "Q": [[1, 1], [2]], "shape": [2, 1]}
    assert payload("knuth", "inverse", "--P", "[[1,2],[3]]", "--Q", "[[1,1],[2]]") == {"pairs": [[1, 1], [1, 3], [2, 2]]}
    assert payload("knuth", "to-matrix", "--pairs", "1,2;1,2;2,1", "--dims", "2x2")["matrix"] == [[0, 2], [1, 0]]
    assert payload("knuth", "from-matrix", "--matrix", "[[0,2],[1,0]]") == {"pairs": [[1, 2], [1, 2], [2, 1]]}
    assert call("knuth", "to-matrix", "--pairs", "3,1", "--dims", "2x2")[0] == 2


def test_knuth_roundtrip_seeded_is_deterministic():
    a = call("knuth", "roundtrip", "--trials", "300", "--seed", "5")
    b = call("knuth", "roundtrip", "--trials", "300", "--seed", "5")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["result"]["failures"] == 0


def test_series_commands():
    result = payload("series", "b", "--i", "0", "--degree", "4")
    assert result["coefficients"][4] == {"num": "1", "den": "4"}
    result = payload("series", "U", "--k", "2", "--degree", "4")
    assert result["coefficients"][4] == {"num": "1", "den": "2"}
    assert payload("series", "xi", "--k", "2", "--n", "5")["value"] == "42"


def test_tableaux_commands():
    result = payload("tableaux", "enumerate", "--shape", "2,1")
    assert result["tableaux"] == [[[1, 2], [3]], [[1, 3], [2]]]
    result = payload("tableaux", "hook-count", "--shape", "3,2")
    assert result["value"] == "5" and result["hooks"] == [4, 3, 1, 2, 1]


def test_posets_commands():
    result = payload("posets", "from-perm", "--perm", "2,3,1")
    assert result["relations"] == [[2, 3]] and result["max_antichain"] == 2
    assert payload("posets", "census", "--n", "3")["total"] == "5"
    assert payload("posets", "isomorphic", "--perm-a", "2,3,1", "--perm-b", "3,1,2") == {"isomorphic": True}
    assert payload("posets", "isomorphic", "--perm-a", "1,3,2", "--perm-b", "2,1,3") == {"isomorphic": False}


def test_text_format():
    code, out, _ = call("count", "lds-dist", "--n", "3", "--format", "text")
    assert code == 0
    assert out.splitlines()[0].split() == ["k", "value"]
    assert call("rsk", "--perm", "2,1", "--format", "csv")[0] == 2


def test_identical_invocations_are_byte_identical():
    argv = ("posets", "census", "--n", "5")
    assert call(*argv) == call(*argv)
