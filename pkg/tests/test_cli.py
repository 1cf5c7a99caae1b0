"""Command-line front end: outputs, exit codes, budgets, determinism."""

import json
import subprocess
import sys

from detfsing.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_matrix(capsys):
    code, out, _ = run_cli(capsys, "gen", "matrix", "--m", "2", "--n", "2")
    assert code == 0
    assert out.splitlines() == ["x[1,1] x[1,2]", "x[2,1] x[2,2]"]


def test_gen_delta_canonical(capsys):
    code, out, _ = run_cli(capsys, "gen", "delta", "--m", "2", "--n", "3")
    assert code == 0
    from detfsing import poly_parse
    from detfsing.determinantal import generic_matrix, splitting_delta_of

    M = generic_matrix(2, 3, 2)
    assert poly_parse(out.strip(), M.ring) == splitting_delta_of(M)


def test_gen_minors_json(capsys):
    code, out, _ = run_cli(capsys, "gen", "minors", "--m", "2", "--n", "2",
                           "--t", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["polys"]) == 1


def test_gen_divisor_and_gamma(capsys):
    code, out, _ = run_cli(capsys, "gen", "divisor", "--m", "2", "--n", "2", "--t", "2")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run_cli(capsys, "gen", "gamma", "--m", "2", "--n", "3")
    assert code == 0 and len(out.splitlines()) == 2


def test_check_split_json_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "check", "split", "--m", "2", "--n", "2",
                           "--t", "2", "-p", "2", "--json")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    obj = json.loads(lines[0])
    assert obj["verdict"] == "pass"
    assert obj["check"] == "split"
    assert set(obj["stats"]) == {"spairs", "reductions", "max_degree", "elapsed_ms"}


def test_check_rejects_zero_m(capsys):
    code, _, err = run_cli(capsys, "check", "split", "--m", "0", "--n", "2",
                           "--t", "2", "-p", "2")
    assert code == 2
    assert "error" in err and "usage" in err


def test_check_rejects_composite_p(capsys):
    code, _, err = run_cli(capsys, "check", "dim", "--m", "2", "--n", "2",
                           "--t", "2", "-p", "6")
    assert code == 2


def test_unknown_subcommand_exits_two(capsys):
    assert main(["frobnicate"]) == 2


def test_verify_single_checks(capsys):
    code, out, _ = run_cli(capsys, "verify", "rowdec", "--m", "3", "--n", "3",
                           "--t", "2", "--json")
    assert code == 0 and json.loads(out)["witness"]["level"] == "exact"
    code, out, _ = run_cli(capsys, "verify", "sylvester", "--m", "2", "--n", "3",
                           "--t", "2", "--k", "1", "--json")
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", "reduction", "--m", "2", "--t", "2",
                           "--s", "1", "--block", "w", "--json")
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", "gammadec", "--r", "2", "--n", "3",
                           "--json")
    assert code == 0


def test_verify_suite_subset_and_workers(capsys):
    code, out, _ = run_cli(capsys, "verify", "suite", "--checks", "sylvester,reduction",
                           "--workers", "2", "--json")
    assert code == 0
    rows = [json.loads(l) for l in out.strip().splitlines()]
    assert {r["check"] for r in rows} == {"sylvester", "reduction"}
    assert all(r["verdict"] == "pass" for r in rows)


def test_budget_flag_gives_inconclusive_exit(capsys):
    code, out, _ = run_cli(capsys, "check", "fedder", "--m", "3", "--n", "3",
                           "--t", "2", "-p", "3", "--json", "--max-gb-steps", "40")
    assert code == 3
    obj = json.loads(out)
    assert obj["verdict"] == "inconclusive"
    assert obj["witness"]["counters"]["reductions"] >= 40


def test_budget_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("DETF_MAX_GB_STEPS", "40")
    code, out, _ = run_cli(capsys, "check", "fedder", "--m", "3", "--n", "3",
                           "--t", "2", "-p", "3", "--json")
    assert code == 3
    # explicit flag wins over the environment
    code, out, _ = run_cli(capsys, "check", "fedder", "--m", "3", "--n", "3",
                           "--t", "2", "-p", "3", "--json", "--max-gb-steps", "5000000")
    assert code == 0


def test_lattice_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "lattice", "--m", "2", "--n", "2", "--t", "2",
                           "-p", "2")
    assert code == 0
    assert out.startswith("digraph")
    code, out, _ = run_cli(capsys, "lattice", "--m", "2", "--n", "2", "--t", "2",
                           "-p", "2", "--json")
    table = json.loads(out)
    assert {n["id"] for n in table["nodes"]} >= {"n0", "n1"}


def test_figures_written(tmp_path, capsys):
    code, _, err = run_cli(capsys, "verify", "suite", "--checks", "reduction",
                           "--figures", str(tmp_path), "--json")
    assert code == 0
    assert (tmp_path / "suite.png").exists()
    code, _, err = run_cli(capsys, "lattice", "--m", "2", "--n", "2", "--t", "2",
                           "-p", "2", "--figures", str(tmp_path))
    assert code == 0
    assert (tmp_path / "lattice.png").exists()


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "detfsing.cli", "gen", "matrix", "--m", "1", "--n", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "x[1,1] x[1,2]"


def strip_elapsed(lines):
    out = []
    for line in lines:
        obj = json.loads(line)
        obj["stats"]["elapsed_ms"] = 0
        out.append(json.dumps(obj, sort_keys=True))
    return out


def test_json_determinism_small(capsys):
    args = ["verify", "suite", "--checks", "dim,sylvester", "--json"]
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert strip_elapsed(out1.strip().splitlines()) == \
        strip_elapsed(out2.strip().splitlines())
