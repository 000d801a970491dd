import json
import subprocess
import sys

from hullforge.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_json_and_verify_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "construct", "--family", "T1a", "--p", "2", "--e", "6",
        "--l", "2", "--n", "63", "--k", "10", "--h", "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["hull"]["dim"] == 1
    assert payload["eaqecc"]["n"] == 63 and payload["eaqecc"]["k"] == 9
    assert payload["eaqecc"]["c"] == 52 and payload["eaqecc"]["mds"] is True
    path = tmp_path / "descriptor.json"
    path.write_text(out)
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert out.strip().endswith("ok")


def test_construct_extended_family_round_trip(capsys, tmp_path):
    # T4n2 exercises the appended zero point (null sentinel) and the
    # extended flag through serialize -> parse -> reverify
    code, out, _ = run_cli(
        capsys, "construct", "--family", "T4n2", "--p", "3", "--e", "4",
        "--l", "1", "--m", "10", "--r", "2", "--k", "3", "--h", "2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["descriptor"]["extended"] is True
    assert payload["descriptor"]["a"].count(None) == 1
    assert payload["eaqecc"]["n"] == 22
    path = tmp_path / "extended.json"
    path.write_text(out)
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0


def test_construct_inadmissible_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "construct", "--family", "T1a", "--p", "2", "--e", "6",
        "--l", "2", "--n", "63", "--k", "99", "--h", "1",
    )
    assert code == 2
    assert "bound" in err or "exceeds" in err


def test_construct_t4n_example(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "--family", "T4n", "--p", "3", "--e", "4",
        "--l", "1", "--m", "40", "--r", "1", "--k", "9", "--h", "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["descriptor"]["a"]) == 40
    assert payload["eaqecc"]["n"] == 40 and payload["eaqecc"]["k"] == 8


def test_verify_detects_tampered_hull_claim(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "construct", "--family", "T1a", "--p", "3", "--e", "2",
        "--l", "1", "--n", "8", "--k", "2", "--h", "1",
    )
    assert code == 0
    payload = json.loads(out)
    payload["hull"]["dim"] += 1
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 4


def test_verify_detects_duplicate_point_exit_5(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "construct", "--family", "T1a", "--p", "3", "--e", "2",
        "--l", "1", "--n", "8", "--k", "2", "--h", "1",
    )
    payload = json.loads(out)
    payload["descriptor"]["a"][1] = payload["descriptor"]["a"][0]
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(payload))
    code, _, err = run_cli(capsys, "verify", str(path))
    assert code == 5
    assert "distinct" in err


def test_verify_rejects_invalid_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "verify", str(path))
    assert code == 5


def test_verify_runs_small_mds_checks(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "construct", "--family", "T2", "--p", "5", "--e", "2",
        "--l", "1", "--n", "5", "--k", "2", "--h", "1",
    )
    payload = json.loads(out)
    path = tmp_path / "small.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run_cli(capsys, "verify", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["checks"]["mds_minors"] is True
    assert report["checks"]["min_distance"] == 4


def test_table_4_all_rows_match(capsys):
    code, out, _ = run_cli(capsys, "table", "4")
    assert code == 0
    assert "42/42 rows match" in out


def test_table_output_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "table", "4")
    code2, out2, _ = run_cli(capsys, "table", "4")
    assert code1 == code2 == 0
    assert out1 == out2


def test_table_mismatch_exits_4(capsys, monkeypatch):
    import dataclasses

    from hullforge import tables

    scenario = tables.TABLES[4]
    rows = list(scenario.rows)
    bad = dataclasses.replace(rows[0], expected=(40, 9, 32, 30))  # wrong k'
    monkeypatch.setitem(
        tables.TABLES, 4, dataclasses.replace(scenario, rows=tuple([bad] + rows[1:]))
    )
    code, out, _ = run_cli(capsys, "table", "4")
    assert code == 4
    assert "MISMATCH" in out
    assert "41/42 rows match" in out


def test_table_json_format(capsys):
    code, out, _ = run_cli(capsys, "table", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_match"] is True
    assert len(payload["rows"]) == 42
    assert all(row["slack"] == 0 for row in payload["rows"])


def test_table_respects_thread_env(capsys, monkeypatch):
    code, baseline, _ = run_cli(capsys, "table", "4")
    monkeypatch.setenv("HULLFORGE_THREADS", "4")
    code2, threaded, _ = run_cli(capsys, "table", "4")
    assert code == code2 == 0
    assert baseline == threaded


def test_sweep_l0_rows_symmetric(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--p", "3", "--e", "2", "--family", "T1a",
        "--l", "0", "--n", "8", "--k-range", "1:2", "--h-range", "0:2",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,e,l,n,k,hullPrimal,hullDual"
    assert len(lines) > 1
    for line in lines[1:]:
        p, e, l, n, k, hp, hd = line.split(",")
        assert hp == hd  # Euclidean level: primal and dual hulls coincide


def test_sweep_empty_range_header_only(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--p", "3", "--e", "2", "--family", "T1a",
        "--n", "8", "--k-range", "2:1", "--h-range", "0:0",
    )
    assert code == 0
    assert out.strip() == "p,e,l,n,k,hullPrimal,hullDual"


def test_field_info(capsys):
    code, out, _ = run_cli(capsys, "field-info", "--p", "3", "--e", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["q"] == 81
    assert payload["modulus"][-1] == 1
    assert payload["log_tables"] is True


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "hullforge.cli", "field-info", "--p", "2", "--e", "3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["q"] == 8
