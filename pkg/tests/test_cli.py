import subprocess
import sys

import pytest

from fatsep.cli import EXIT_NODE_CAP, EXIT_OK, EXIT_SPEC_ERROR, main
from fatsep.instances import read_instance


def run_cli(args):
    """Run the CLI in-process, capturing nothing; returns the exit code."""
    return main(args)


def cli_bytes(args):
    """Run the CLI in a subprocess; returns (returncode, stdout bytes)."""
    proc = subprocess.run(
        [sys.executable, "-m", "fatsep.cli", *args],
        capture_output=True,
    )
    return proc.returncode, proc.stdout


@pytest.fixture
def inst_file(tmp_path):
    p = tmp_path / "inst.txt"
    rc = run_cli(["gen", "--family", "random", "--dim", "2", "--n", "10",
                  "--seed", "7", "--out", str(p)])
    assert rc == EXIT_OK
    return str(p)


def test_gen_writes_parseable_file(inst_file):
    inst = read_instance(inst_file)
    assert inst.n == 10 and inst.dim == 2 and inst.seed == 7


def test_pack_output_record(inst_file, tmp_path, capsys):
    out = tmp_path / "sol.txt"
    rc = run_cli(["pack", "--in", inst_file, "--out", str(out)])
    assert rc == EXIT_OK
    text = out.read_text()
    assert text.startswith("fatsep-solution v1\nproblem=pack\n")
    assert "optimal=true" in text
    # timing goes to stderr only, never the record
    assert "wall_time" not in text
    assert "wall_time" in capsys.readouterr().err


def test_pierce_and_oracle_agree(inst_file, tmp_path):
    sol = tmp_path / "p.txt"
    orc = tmp_path / "o.txt"
    assert run_cli(["pierce", "--in", inst_file, "--out", str(sol)]) == EXIT_OK
    assert run_cli(["oracle", "--problem", "pierce", "--in", inst_file,
                    "--out", str(orc)]) == EXIT_OK
    v_sol = next(l for l in sol.read_text().splitlines() if l.startswith("value="))
    v_orc = next(l for l in orc.read_text().splitlines() if l.startswith("value="))
    assert v_sol == v_orc


def test_separator_record(inst_file, tmp_path):
    out = tmp_path / "sep.txt"
    assert run_cli(["separator", "--in", inst_file, "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "fatsep-separator v1"
    assert any(l.startswith("mu_total=") for l in lines)


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("fatsep v1 d=2 n=1\nball 0 0\n")
    rc = run_cli(["pack", "--in", str(bad)])
    assert rc == EXIT_SPEC_ERROR
    assert "error:" in capsys.readouterr().err


def test_node_cap_exit_code(tmp_path, capsys):
    p = tmp_path / "dense.txt"
    assert run_cli(["gen", "--family", "cluster", "--dim", "2", "--clusters", "4",
                    "--cluster-size", "5", "--seed", "1", "--out", str(p)]) == EXIT_OK
    out = tmp_path / "sol.txt"
    rc = run_cli(["pack", "--in", str(p), "--out", str(out),
                  "--base-threshold", "1", "--node-cap", "3"])
    assert rc == EXIT_NODE_CAP
    assert "optimal=false" in out.read_text()  # best-so-far still emitted
    capsys.readouterr()


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    rc = run_cli(["bench", "--family", "grid", "--ks", "2,3", "--out", str(out)])
    assert rc == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0].startswith("label,n,d,family,solver")
    assert len(lines) == 3


def test_render_svg(inst_file, tmp_path):
    svg = tmp_path / "fig.svg"
    rc = run_cli(["render", "--in", inst_file, "--svg", str(svg),
                  "--overlay", "separator"])
    assert rc == EXIT_OK
    assert svg.read_text().startswith("<svg")


def test_byte_determinism_across_processes():
    args = ["gen", "--family", "random", "--dim", "2", "--n", "15", "--seed", "3"]
    rc1, out1 = cli_bytes(args)
    rc2, out2 = cli_bytes(args)
    assert rc1 == rc2 == 0 and out1 == out2 and out1


def test_solver_byte_determinism_parallel(tmp_path):
    p = tmp_path / "i.txt"
    assert run_cli(["gen", "--family", "cluster", "--dim", "2", "--clusters", "3",
                    "--cluster-size", "4", "--seed", "5", "--out", str(p)]) == EXIT_OK
    base = ["pack", "--in", str(p), "--base-threshold", "3"]
    rc1, out1 = cli_bytes(base)
    rc2, out2 = cli_bytes(base + ["--parallel"])
    assert rc1 == rc2 == 0
    assert out1 == out2 and out1


def test_ptas_subcommands(inst_file, tmp_path, capsys):
    for cmd in ("ptas-pack", "ptas-pierce"):
        out = tmp_path / f"{cmd}.txt"
        rc = run_cli([cmd, "--in", inst_file, "--epsilon", "0.5", "--out", str(out)])
        assert rc == EXIT_OK
        assert f"problem={cmd}" in out.read_text()
    capsys.readouterr()
