import json
import os
import subprocess
from fractions import Fraction

import pytest

CLI = os.environ.get("KCM_CLI", "kcm")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def laurent(obj):
    return {int(k): int(v) for k, v in obj.items()}


def test_character_text():
    r = run("character", "--partition", "2,1")
    assert r.returncode == 0
    assert "q^-1 + 2 + q" in r.stdout


def test_character_json_schema():
    r = run("character", "--partition", "3,2", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert list(doc) == ["lambda", "kostka", "character", "dimension"]
    assert doc["lambda"] == "3,2"
    assert laurent(doc["kostka"]) == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
    assert doc["dimension"] == "5"
    ch = laurent(doc["character"])
    assert sum(ch.values()) == 25
    assert all(ch[e] == ch[-e] for e in ch)


def test_gamma_partition_character():
    r = run("character", "--gamma-partition", "1;1", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert laurent(doc["character"]) == {-1: 1, 0: 2, 1: 1}


def test_verify_all_small():
    r = run("verify-all", "--n", "6", "--N", "2", "--seed", "7")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "all checks passed" in r.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("kostka", "--partition", "2,0"),
        ("kostka", "--partition", "1,2"),
        ("kostka", "--gamma-partition", "2;;1"),
        ("kostka",),
        ("schur-p1n", "--n", "0"),
        ("cm", "verify", "--y", "0,0", "--alpha", "1,1"),
        ("cm", "verify", "--y", "0,1", "--alpha", "1/0,1"),
        ("cm-embed", "--y", "0,1", "--alpha", "1"),
        ("no-such-command",),
    ],
)
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_parse_error_reports_position():
    r = run("kostka", "--partition", "2,0")
    assert "position 2" in r.stderr


def test_deterministic_output():
    args = ("verify-all", "--n", "5", "--N", "2", "--seed", "3", "--samples", "20", "--json")
    first, second = run(*args), run(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    threaded = run(*args, "--threads", "3")
    assert threaded.stdout == first.stdout


def test_verify_all_json_report():
    r = run("verify-all", "--n", "4", "--N", "2", "--samples", "5", "--json")
    doc = json.loads(r.stdout)
    assert doc["passed"] is True
    assert doc["total_items"] == sum(c["items"] for c in doc["checks"])
    assert {c["module"] for c in doc["checks"]} == {"partitions", "qpoly", "characters", "schur", "cm"}


def test_hook_corruption_exit_1():
    r = run("verify-all", "--n", "5", "--N", "2", "--inject-hook-corruption", "--json")
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    failed = {c["name"] for c in doc["checks"] if not c["passed"]}
    assert "tangent-weights-equal-negated-hooks" in failed
    assert all(c.get("detail") for c in doc["checks"] if not c["passed"])


def test_schur_json():
    r = run("schur-p1n", "--n", "4", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert [(t["lambda"], t["m"]) for t in doc] == [
        ("4", "1"),
        ("3,1", "3"),
        ("2,2", "2"),
        ("2,1,1", "3"),
        ("1,1,1,1", "1"),
    ]
    wreath = json.loads(run("schur-p1n", "--n", "3", "--N", "2", "--json").stdout)
    assert sum(int(t["m"]) ** 2 for t in wreath) == 2**3 * 6


def test_wreath_and_tangent():
    r = run("wreath", "--N", "3", "--n", "3", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["passed"] and doc["sum_of_squares"] == doc["group_order"] == str(27 * 6)
    t = json.loads(run("tangent", "--partition", "2,1", "--json").stdout)
    assert t["weights"] == [-3, -1, -1]
    assert t["fixed_point_exponents"] == [5, 3, 1]
    assert t["match"] is True


def test_cm_verify_json_round_trip():
    r = run("cm", "verify", "--y", "0,1,2", "--alpha", "1/2,0,3", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["rank"] == 1 and doc["rank_one"] is True
    assert doc["M"] == [["1"] * 3] * 3
    assert doc["charY"] == ["0", "2", "-3", "1"]
    assert doc["charX"][2] == "-7/2"
    col, row = doc["witness"]["column"], doc["witness"]["row"]
    for i in range(3):
        for j in range(3):
            assert Fraction(col[i]) * Fraction(row[j]) == Fraction(doc["M"][i][j])
    # The alias spelling prints the same report.
    assert run("cm-verify", "--y", "0,1,2", "--alpha", "1/2,0,3", "--json").stdout == r.stdout


def test_cm_embed():
    r = run("cm", "embed", "--y", "0,1", "--alpha", "0,0", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["ideal"] == ["0", "-1", "1"]
    assert doc["basis"] == [["1", "0", "-3", "2"], ["0", "0", "3", "-2"]]
    text = run("cm", "embed", "--y", "0", "--alpha", "5").stdout
    assert "I = z" in text
    assert "w1 = -5*z + 1" in text
