import json

import pytest

from galmod.cli import main

Z4_DOC = {
    "group": {"p": 2, "v": 2},
    "base_genus": 0,
    "orbits": [{"id": "P", "depth": 2, "jumps": [3, 1]}],
    "divisor": {"base_degree": 0, "orbit_coeffs": {"P": 6}},
    "options": {"strict_validation": False},
}

FREE_DOC = {
    "group": {"p": 2, "v": 1},
    "base_genus": 1,
    "orbits": [],
    "divisor": {"base_degree": 3, "orbit_coeffs": {}},
    "options": {},
}


@pytest.fixture
def z4_file(tmp_path):
    path = tmp_path / "z4.json"
    path.write_text(json.dumps(Z4_DOC))
    return str(path)


@pytest.fixture
def free_file(tmp_path):
    path = tmp_path / "free.json"
    path.write_text(json.dumps(FREE_DOC))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_z4_json(z4_file, capsys):
    code, out, _ = run(capsys, "decompose", z4_file, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["multiplicities"] == [0, 1, 0, 1]
    assert report["dim_h0"] == 6
    assert report["genus_per_level"] == [1, 0, 0]
    assert report["euler_simple_basis"] == [2, 4, 5, 6]
    assert report["methods"] == ["ClosedForm", "SecondDifference",
                                 "Recursive", "SimpleBasis"]


def test_decompose_free_tower(free_file, capsys):
    code, out, _ = run(capsys, "decompose", free_file, "--format", "json")
    assert code == 0
    assert json.loads(out)["multiplicities"] == [0, 3]


def test_decompose_table_matches_json(z4_file, capsys):
    code, table, _ = run(capsys, "decompose", z4_file)
    assert code == 0
    code, out, _ = run(capsys, "decompose", z4_file, "--format", "json")
    report = json.loads(out)
    for j, (deg, m) in enumerate(zip(report["degrees"],
                                     report["multiplicities"]), start=1):
        assert f"{j:>3}  {deg:>5}  {m:>3}" in table


def test_output_round_trip(z4_file, tmp_path, capsys):
    code, out, _ = run(capsys, "decompose", z4_file, "--format", "json")
    echoed = json.loads(out)["input"]
    refed = tmp_path / "refed.json"
    refed.write_text(json.dumps(echoed))
    code2, out2, _ = run(capsys, "decompose", str(refed), "--format", "json")
    assert code2 == 0
    assert json.loads(out2) == json.loads(out)


def test_malformed_json_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out, err = run(capsys, "decompose", str(path))
    assert code == 2
    assert out == ""


def test_missing_key_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"group": {"p": 2}}))
    code, _, err = run(capsys, "decompose", str(path))
    assert code == 2
    assert "missing key" in err


def test_unknown_orbit_reference_exit_3(tmp_path, capsys):
    doc = dict(Z4_DOC, divisor={"base_degree": 0, "orbit_coeffs": {"Q": 6}})
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "decompose", str(path))
    assert code == 3
    assert "unknown orbit" in err


def test_strict_validation_exit_3(tmp_path, capsys):
    doc = dict(Z4_DOC, orbits=[{"id": "P", "depth": 1, "jumps": [3]}],
               options={"strict_validation": True})
    doc["group"] = {"p": 2, "v": 1}
    doc["orbits"][0]["jumps"] = [2]  # p | N
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "decompose", str(path))
    assert code == 3


def test_degree_too_small_exit_4(tmp_path, capsys):
    doc = dict(Z4_DOC, divisor={"base_degree": 0, "orbit_coeffs": {"P": 0}})
    path = tmp_path / "small.json"
    path.write_text(json.dumps(doc))
    code, _, _ = run(capsys, "decompose", str(path))
    assert code == 4


def test_genus_command(z4_file, capsys):
    code, out, _ = run(capsys, "genus", z4_file)
    assert code == 0
    assert json.loads(out)["genus_per_level"] == [1, 0, 0]


def test_euler_command(z4_file, capsys):
    code, out, _ = run(capsys, "euler", z4_file)
    assert code == 0
    assert json.loads(out)["euler_simple_basis"] == [2, 4, 5, 6]


def test_noether_command(z4_file, capsys):
    code, out, _ = run(capsys, "noether", z4_file, "--w", "1")
    report = json.loads(out)
    assert not report["containment"]
    assert report["witness"]["j"] == 1
    assert report["witness"]["m_j"] == 1
    code2, out2, _ = run(capsys, "noether", z4_file, "--w", "2")
    assert code2 == 0
    assert json.loads(out2)["containment"]


def test_oracle_single_case(capsys):
    code, out, _ = run(capsys, "oracle", "--p", "2", "--m-max", "3",
                       "--n-max", "6")
    assert code == 0
    report = json.loads(out)
    assert report["all_pass"]
    case = next(r for r in report["results"]
                if r["m"] == 3 and r["n"] == 4)
    assert case["oracle"] == [2, 1]


def test_oracle_rejects_nonprime(capsys):
    code, _, err = run(capsys, "oracle", "--p", "4")
    assert code == 2


def test_check_small_and_deterministic(capsys):
    code, out1, _ = run(capsys, "check", "--seed", "7", "--cases", "25")
    assert code == 0
    code, out2, _ = run(capsys, "check", "--seed", "7", "--cases", "25")
    assert out1 == out2
    assert "cases=25" in out1


def test_check_zero_cases_vacuous(capsys):
    code, out, _ = run(capsys, "check", "--seed", "1", "--cases", "0")
    assert code == 0
    assert "failures=0" in out


def test_trivial_group_document(tmp_path, capsys):
    doc = {"group": {"p": 3, "v": 0}, "base_genus": 1, "orbits": [],
           "divisor": {"base_degree": 4, "orbit_coeffs": {}}, "options": {}}
    path = tmp_path / "trivial.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "decompose", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["multiplicities"] == [4]
    assert report["dim_h0"] == 4
