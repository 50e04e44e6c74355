"""cli-io: the command-line surface, exit codes, cache behavior."""

import json

import pytest

from rrclosure.cli import main

EX110 = "ring: QQ[x,y]\nideal: x^10, y^5, x*y^4, x^8*y\nreduction: y^5+x^10+x^8*y, x*y^4\n"
EX33 = "ideal: x^8, x^3*y^2, x^2*y^4, y^8\n"


@pytest.fixture()
def ex110_file(tmp_path):
    path = tmp_path / "ex110.ideal"
    path.write_text(EX110)
    return str(path)


@pytest.fixture()
def ex33_file(tmp_path):
    path = tmp_path / "ex33.ideal"
    path.write_text(EX33)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_closure_json_report(capsys, ex110_file):
    code, out, err = run(capsys, "closure", ex110_file, "--reduction-from-file", "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    assert doc["operation"] == "closure"
    result = doc["result"]
    assert result["series"]["numerator"] == [35, 4, 4, 4, -2]
    assert result["series"]["postulation"] == 2
    assert result["k_used"] == 3
    assert len(result["closure"]["minimal_generators"]) == 6
    assert result["is_closed"] is False
    quotients = {tuple(q["numerator"]) for q in result["quotient_series"]}
    assert quotients == {(35, 6, 2, 2), (35, 6, 4)}


def test_check_closed_text(capsys, ex33_file):
    code, out, err = run(capsys, "check-closed", ex33_file)
    assert code == 0, err
    assert "closed: true" in out


def test_poincare_text(capsys, ex110_file):
    code, out, _ = run(capsys, "poincare", ex110_file)
    assert code == 0
    assert "numerator: [35, 4, 4, 4, -2]" in out
    assert "e0: 45" in out
    assert "pn: 2" in out


def test_hilbert_value(capsys, ex110_file):
    code, out, _ = run(capsys, "hilbert", ex110_file, "--n", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"]["value"] == 109


def test_reduction_command(capsys, ex110_file):
    code, out, _ = run(capsys, "reduction", ex110_file, "--reduction-from-file", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["reduction"]["colength"] == 45


def test_closure_power_command(capsys, tmp_path):
    path = tmp_path / "m.ideal"
    path.write_text("ring: QQ[x,y]\nideal: x, y\n")
    code, out, _ = run(capsys, "closure-power", str(path), "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["operation"] == "closure-power"
    assert doc["result"]["is_closed"] is True
    assert set(doc["result"]["closure"]["minimal_generators"]) == {"y^3", "x*y^2", "x^2*y", "x^3"}


def test_colon_powers_uncertified_override(capsys, ex110_file):
    code, out, _ = run(capsys, "colon-powers", ex110_file, "--k", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["certified"] is False
    assert doc["result"]["bounds"]["colon_powers_k"] == 5946
    assert len(doc["result"]["closure"]["minimal_generators"]) == 6


def test_colon_powers_bound_too_large_exit_code(capsys, ex110_file):
    code, out, err = run(capsys, "colon-powers", ex110_file)
    assert code == 1
    assert "BOUND_TOO_LARGE" in err


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ideal: x + \n")
    code, out, err = run(capsys, "poincare", str(bad))
    assert code == 2
    assert "PARSE_ERROR" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "poincare", "/nonexistent/nope.ideal")
    assert code == 2


def test_non_m_primary_witness(capsys, tmp_path):
    path = tmp_path / "bad.ideal"
    path.write_text("ideal: x^2, x*y\n")
    code, _, err = run(capsys, "closure", str(path))
    assert code == 1
    assert "NOT_M_PRIMARY" in err
    assert "pure power" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["closure"])  # missing problem file
    assert exc.value.code == 2


def test_cache_serves_identical_bytes(capsys, ex33_file, tmp_path):
    cache_dir = str(tmp_path / "cache")
    code1, out1, _ = run(capsys, "check-closed", ex33_file, "--format", "json",
                         "--cache", cache_dir)
    code2, out2, _ = run(capsys, "check-closed", ex33_file, "--format", "json",
                         "--cache", cache_dir)
    assert code1 == code2 == 0
    assert out1 == out2

    # permuted generators hit the same entry (keyed on the reduced basis)
    permuted = tmp_path / "ex33b.ideal"
    permuted.write_text("ideal: y^8, x^2*y^4, x^3*y^2, x^8\n")
    code3, out3, _ = run(capsys, "check-closed", str(permuted), "--format", "json",
                         "--cache", cache_dir)
    assert code3 == 0
    doc1, doc3 = json.loads(out1), json.loads(out3)
    assert doc1["result"] == doc3["result"]

    # a different seed is a different entry
    code4, out4, _ = run(capsys, "check-closed", ex33_file, "--format", "json",
                         "--cache", cache_dir, "--seed", "5")
    assert code4 == 0
    assert json.loads(out4)["options"]["seed"] == 5


def test_text_and_json_numeric_agreement(capsys, ex110_file):
    code, text_out, _ = run(capsys, "closure", ex110_file, "--reduction-from-file")
    code2, json_out, _ = run(capsys, "closure", ex110_file, "--reduction-from-file",
                             "--format", "json")
    assert code == code2 == 0
    doc = json.loads(json_out)
    assert f"e0: {doc['result']['series']['multiplicity']}" in text_out
    assert f"k used: {doc['result']['k_used']}" in text_out
