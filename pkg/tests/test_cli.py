"""CLI subcommands, exit codes and report files."""

import csv
import os

from boolgb import cli
from boolgb.monomials import BoolPoly
from boolgb.systems import parse_system

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")
EXAMPLE1 = os.path.join(GOLDEN, "example1.txt")


def test_gb_computes_basis(capsys):
    rc = cli.main(["gb", EXAMPLE1])
    out = capsys.readouterr().out
    assert rc == 0
    sysf = parse_system(out)
    assert sysf.n_vars == 9
    assert len(sysf.polys) == 34


def test_gb_reduce_matches_golden(capsys):
    rc = cli.main(["gb", "--reduce", EXAMPLE1])
    out = capsys.readouterr().out
    assert rc == 0
    with open(os.path.join(GOLDEN, "example1_reduced.txt"),
              encoding="utf-8") as fh:
        assert out == fh.read()


def test_gb_mgvw_matches_golden(capsys):
    rc = cli.main(["gb", "--algo", "mgvw", "--deg-limit", "5", "--reduce",
                   EXAMPLE1])
    out = capsys.readouterr().out
    assert rc == 0
    with open(os.path.join(GOLDEN, "example1_mgvw5_reduced.txt"),
              encoding="utf-8") as fh:
        assert out == fh.read()


def test_gb_writes_stats_and_trace(tmp_path, capsys):
    stats = tmp_path / "stats.txt"
    trace = tmp_path / "trace.tsv"
    rc = cli.main(["gb", "--stats", str(stats), "--trace", str(trace),
                   EXAMPLE1])
    capsys.readouterr()
    assert rc == 0
    stats_text = stats.read_text(encoding="utf-8")
    assert "algo: gvw" in stats_text
    assert "max_matrix: rows=17 cols=21 degree=7" in stats_text
    rows = [line.split("\t")
            for line in trace.read_text(encoding="utf-8").splitlines()]
    assert all(len(r) == 5 for r in rows)
    actions = {r[3] for r in rows}
    assert {"basis", "round", "zero"} <= actions
    basis_rows = [r for r in rows if r[3] == "basis"]
    assert basis_rows[0][0] == "e1"
    assert basis_rows[2][:2] == ["x8*e2", "x3*x4*x7*x8"]
    assert basis_rows[2][4] == "x3*x4*x7*x8 + x3*x4*x7"


def test_gb_missing_file(capsys):
    rc = cli.main(["gb", "/nonexistent/system.txt"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "error" in err


def test_gb_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("vars: 2\nx9\n", encoding="utf-8")
    rc = cli.main(["gb", str(bad)])
    err = capsys.readouterr().err
    assert rc == 2
    assert "line 2" in err


def test_gb_degree_cap_aborts(capsys):
    rc = cli.main(["gb", "--max-degree", "3", EXAMPLE1])
    err = capsys.readouterr().err
    assert rc == 3
    assert "aborted" in err


def test_verify_agreement(capsys):
    rc = cli.main(["verify", EXAMPLE1])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.strip() == ("ok: gvw, mgvw and buchberger agree"
                           " (reduced basis size 17)")


def test_verify_reports_mismatch(monkeypatch, capsys):
    # force a disagreement through the gvw entry point to check the
    # mismatch exit path
    def fake_run(polys, cfg):
        return [BoolPoly([1])], None

    monkeypatch.setattr(cli, "gvw_run", fake_run)
    rc = cli.main(["verify", EXAMPLE1])
    err = capsys.readouterr().err
    assert rc == 1
    assert "mismatch" in err


def test_verify_degree_cap(capsys):
    rc = cli.main(["verify", "--max-degree", "3", EXAMPLE1])
    assert rc == 3
    assert "aborted" in capsys.readouterr().err


def test_gen_round_trips(tmp_path, capsys):
    out_file = tmp_path / "sys.txt"
    rc = cli.main(["gen", "--vars", "5", "--polys", "3", "--degree", "2",
                   "--seed", "7", "-o", str(out_file)])
    capsys.readouterr()
    assert rc == 0
    sysf = parse_system(out_file.read_text(encoding="utf-8"))
    assert sysf.n_vars == 5
    assert len(sysf.polys) == 3
    rc = cli.main(["gen", "--vars", "5", "--polys", "3", "--degree", "2",
                   "--seed", "7"])
    out = capsys.readouterr().out
    assert rc == 0
    assert parse_system(out) == sysf


def test_gen_rejects_bad_spec(capsys):
    rc = cli.main(["gen", "--vars", "0", "--polys", "1"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_bench_writes_csv_and_figures(tmp_path, capsys):
    rc = cli.main(["bench", "--sizes", "3,4", "--seed", "1",
                   "--out-dir", str(tmp_path)])
    out = capsys.readouterr().out
    assert rc == 0
    csv_path = tmp_path / "bench.csv"
    assert csv_path.exists()
    with open(csv_path, newline="", encoding="utf-8") as fh:
        records = list(csv.DictReader(fh))
    assert [r["algo"] for r in records] == ["gvw", "mgvw", "gvw", "mgvw"]
    assert set(records[0]) == {
        "n", "algo", "wall_ms", "rounds", "max_rows", "max_cols",
        "max_degree", "mutants", "basis_size", "reduced_basis_size"}
    for name in ("bench_time.png", "bench_size.png"):
        path = tmp_path / name
        assert path.exists() and path.stat().st_size > 0
        assert str(path) in out


def test_bench_rejects_bad_sizes(capsys):
    rc = cli.main(["bench", "--sizes", "a,b"])
    assert rc == 2
    assert "sizes" in capsys.readouterr().err
