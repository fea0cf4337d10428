import json
import re
import subprocess
import sys

import pytest

from lfmd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lfmd_t16_report(capsys):
    code, out, _ = run(capsys, "lfmd", "--family", "toeplitz", "--n", "16", "--s", "1,4,8")
    doc = json.loads(out)
    assert code == 0
    assert doc["bounds"]["lower_nt"] == "8/7"
    assert doc["bounds"]["upper_ell"] == "2/1"
    assert doc["solution"]["value"] == "8/5"
    assert doc["approx"] == {"value": "1.60000", "lower_nt": "1.14286", "upper_ell": "2.00000"}
    assert doc["solution"]["certificate"]["equal"]


def test_lfmd_text_values_appear_in_json(capsys):
    _, text, _ = run(capsys, "lfmd", "--family", "zdstar", "--n", "12", "--with-integer-ldim", "--format", "text")
    _, js, _ = run(capsys, "lfmd", "--family", "zdstar", "--n", "12", "--with-integer-ldim")
    fractions = [tok for tok in text.split() if re.fullmatch(r"\d+/\d+", tok)]
    assert fractions
    for f in fractions:
        assert f'"{f}"' in js


def test_resolve_zstar12(capsys):
    code, out, _ = run(capsys, "resolve", "--family", "zdstar", "--n", "12")
    doc = json.loads(out)
    assert code == 0 and (doc["ell"], doc["beta"]) == (2, 5)


def test_resolve_csv(capsys):
    _, out, _ = run(capsys, "resolve", "--family", "zd", "--n", "9", "--format", "csv")
    assert out == "u,v,cardinality,neighborhood\n3,6,2,3 6\n"


def test_graph_build_zd9(capsys):
    code, out, _ = run(capsys, "graph", "build", "--family", "zd", "--n", "9", "--export", "json")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 2 and len(doc["edges"]) == 1


def test_graph_build_by_tag(capsys):
    _, out, _ = run(capsys, "graph", "build", "--family", "toeplitz_pow2", "--k", "3", "--export", "csv")
    assert out.splitlines()[0] == "u,v" and len(out.splitlines()) == 1 + 7 + 6 + 4


def test_family_validate_exit_codes(capsys):
    code, out, _ = run(capsys, "family", "validate", "--tag", "TOEPLITZ_3P", "--range", "2..13")
    recs = json.loads(out)
    assert code == 0
    assert [r["verdict"] for r in recs][:2] == ["VIOLATED", "VIOLATED"]
    assert all(r["discrepancy"] for r in recs[:2])


def test_family_validate_blocking_violation(capsys, monkeypatch):
    from lfmd import families

    monkeypatch.setattr(families, "KNOWN_DISCREPANCIES", {})
    code, _, _ = run(capsys, "family", "validate", "--tag", "ZD_PK", "--range", "125..125")
    assert code == 1


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--id", "T4", "--format", "csv")
    assert code == 0 and "4.,1.14286,1.66667,2.85714" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lfmd", "--family", "nope", "--n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["lfmd", "--family", "toeplitz", "--n", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["family", "validate", "--tag", "ZD_PK", "--range", "9..3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["tables"])
    assert exc.value.code == 2


def test_invalid_family_parameters_exit_2(capsys):
    code, _, err = run(capsys, "lfmd", "--family", "toeplitz_2p", "--p", "9")
    assert code == 2 and "prime" in err


def test_capacity_exit_3(capsys):
    code, _, err = run(capsys, "--max-order", "10", "lfmd", "--family", "zdstar", "--n", "30")
    assert code == 3 and "capacity" in err


def test_ldim_cap_note(capsys):
    _, out, _ = run(capsys, "lfmd", "--family", "toeplitz", "--n", "9", "--s", "1,3", "--with-integer-ldim", "--ldim-cap", "5")
    assert "cap" in json.loads(out)["bounds"]["notes"][0]


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "lfmd", "lfmd", "--family", "toeplitz", "--n", "20", "--s", "1,2,19"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.decode("utf-8")


def test_env_cap_is_honoured():
    import os

    env = dict(os.environ, LFMD_MAX_ORDER="5")
    proc = subprocess.run([sys.executable, "-m", "lfmd", "resolve", "--family", "zd", "--n", "49"], capture_output=True, env=env)
    assert proc.returncode == 3
