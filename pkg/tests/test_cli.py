import json
import subprocess
import sys
from pathlib import Path

import pytest

from tambara.cli import parse_element, parse_spec, run

GOLDEN = Path(__file__).parent / "golden"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_element_shorthand_and_json():
    assert parse_element("t3@6").coeffs == {2: 1}
    assert parse_element('{"level": 6, "coeffs": {"2": 1}}').coeffs == {2: 1}
    with pytest.raises(ValueError):
        parse_element("t4@6")
    with pytest.raises(ValueError):
        parse_element("nonsense")


def test_parse_spec():
    s = parse_spec("c=6,p=0", 12)
    assert (s.n, s.c, s.p) == (12, 6, 0)
    with pytest.raises(ValueError):
        parse_spec("c=6", 12)
    with pytest.raises(ValueError):
        parse_spec("c=5,p=0", 12)


def test_spectrum_matches_golden_file(capsys):
    code, out, _ = invoke(capsys, "spectrum", "-n", "12")
    assert code == 0
    assert out == (GOLDEN / "spectrum_n12.dot").read_text()


def test_spectrum_byte_identical_across_runs(capsys):
    combos = [
        ("12", "0,2,3,5"),
        ("8", "0,2,3"),
        ("30", "0,2,3,5,7"),
    ]
    for n, primes in combos:
        for fmt in ("dot", "json", "table"):
            first = invoke(capsys, "spectrum", "-n", n, "--primes", primes, "--format", fmt)
            second = invoke(capsys, "spectrum", "-n", n, "--primes", primes, "--format", fmt)
            assert first == second
            assert first[0] == 0


def test_spectrum_json_format(capsys):
    code, out, _ = invoke(capsys, "spectrum", "-n", "12", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 12 and len(doc["points"]) == 17


def test_contains_command(capsys):
    code, out, _ = invoke(capsys, "contains", "-n", "12", "c=6,p=0", "c=2,p=0")
    assert code == 0 and out.strip() == "true"
    code, out, _ = invoke(capsys, "contains", "-n", "12", "c=2,p=2", "c=3,p=0")
    assert code == 0 and out.strip() == "false"


def test_member_command(capsys):
    code, out, _ = invoke(
        capsys,
        "member", "-n", "12", "--spec", "c=2,p=2",
        "--element", '{"level":12,"coeffs":{"12":2}}',
    )
    assert code == 0 and out.strip() == "true"
    code, out, _ = invoke(
        capsys, "member", "-n", "12", "--spec", "c=2,p=0", "--element", "t4@12"
    )
    assert code == 0 and out.strip() == "false"


def test_map_commands(capsys):
    code, out, _ = invoke(
        capsys, "map", "--op", "res", "--from", "6", "--to", "2", "--element", "t3@6"
    )
    assert code == 0
    assert json.loads(out) == {"level": 2, "coeffs": {"2": 3}}
    code, out, _ = invoke(
        capsys, "map", "--op", "tr", "--from", "1", "--to", "2", "--element", "t1@1"
    )
    assert json.loads(out) == {"level": 2, "coeffs": {"1": 1}}
    code, out, _ = invoke(
        capsys, "map", "--op", "norm", "--from", "1", "--to", "2", "--element",
        '{"level":1,"coeffs":{"1":2}}',
    )
    assert json.loads(out) == {"level": 2, "coeffs": {"1": 1, "2": 2}}


def test_map_level_mismatch_is_domain_error(capsys):
    code, out, err = invoke(
        capsys, "map", "--op", "res", "--from", "4", "--to", "2", "--element", "t3@6"
    )
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "ValueError"


def test_ghost_unghost_roundtrip(capsys):
    code, out, _ = invoke(capsys, "ghost", "--element", "t3@6")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"level": 6, "marks": {"1": 3, "2": 3, "3": 0, "6": 0}}
    code, out, _ = invoke(capsys, "unghost", "--vector", json.dumps(doc))
    assert code == 0
    assert json.loads(out) == {"level": 6, "coeffs": {"2": 1}}


def test_unghost_rejects_non_image(capsys):
    code, _, err = invoke(
        capsys, "unghost", "--vector", '{"level":2,"marks":{"1":1,"2":0}}'
    )
    assert code == 1
    assert json.loads(err)["error"] == "NotInGhostImage"


def test_gens_command(capsys):
    code, out, _ = invoke(capsys, "gens", "-n", "12", "--spec", "c=2,p=0")
    assert code == 0
    gens = json.loads(out)
    assert {"level": 12, "coeffs": {"1": 1, "3": -3}} in gens
    assert len(gens) == 4


def test_probe_command_small(capsys):
    code, out, _ = invoke(capsys, "--quiet", "probe", "-n", "4", "--bound", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"].startswith("no counterexample found at this scale")
    assert all(not entry["counterexamples"] for entry in doc["specs"])


def test_oracle_commands(capsys):
    for check in ("marks", "transfers", "norms"):
        code, out, _ = invoke(capsys, "oracle", "--check", check, "-n", "6")
        assert code == 0
        assert out.startswith(f"{check}: OK (")


def test_dress_command(capsys):
    code, out, _ = invoke(capsys, "dress", "-n", "12", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["points"]) == 17 and doc["krull_dimension"] == 1


def test_usage_errors_exit_2(capsys):
    assert invoke(capsys, "spectrum")[0] == 2  # missing -n
    assert invoke(capsys, "no-such-command")[0] == 2
    assert invoke(capsys)[0] == 2


def test_domain_errors_exit_1_with_json(capsys):
    code, _, err = invoke(capsys, "spectrum", "-n", "0")
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "ValueError" and "positive" in payload["message"]


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "tambara", "contains", "-n", "12", "c=6,p=0", "c=2,p=0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "true"
