import csv
import io
import json
import math

import pytest


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_hydrogen_table_reproduces_reference(run_cli):
    proc = run_cli("hydrogen-table", "--alphaw", "0.15", "--n-max", "5", expect=0)
    header, rows = parse_csv(proc.stdout)
    assert header == [
        "n", "E_complex_eV", "E_relativistic_eV", "E_quaternionic_eV", "alphaW_eV",
    ]
    reference = {
        1: (-13.60000, -13.60090, -13.60080),
        2: (-3.40000, -3.40015, -3.40331),
        3: (-1.51111, -1.51116, -1.51854),
        4: (-0.85000, -0.85002, -0.86313),
        5: (-0.54400, -0.54401, -0.56430),
    }
    assert len(rows) == 5
    for row in rows:
        n = int(row[0])
        for got, want in zip(map(float, row[1:4]), reference[n]):
            assert abs(got - want) <= 1e-3


def test_hydrogen_table_zero_coupling(run_cli):
    proc = run_cli("hydrogen-table", "--alphaw", "0", "--n-max", "4", expect=0)
    _, rows = parse_csv(proc.stdout)
    for row in rows:
        assert row[1] == row[3]


def test_hydrogen_table_radius_exclusion(run_cli):
    proc = run_cli("hydrogen-table", "--alphaw", "0.15", "--n-max", "10", expect=0)
    _, rows = parse_csv(proc.stdout)
    assert [int(r[0]) for r in rows] == list(range(1, 10))
    assert "n=10" in proc.stderr
    proc = run_cli("hydrogen-table", "--alphaw", "0.15", "--n-max", "9", expect=0)
    _, rows = parse_csv(proc.stdout)
    assert [int(r[0]) for r in rows] == list(range(1, 10))
    assert proc.stderr == ""


def test_sigma_zero_strength_is_unity(run_cli):
    proc = run_cli(
        "sigma", "--model", "hydrogen", "--n", "1", "--alpha", "0", expect=0
    )
    _, rows = parse_csv(proc.stdout)
    assert len(rows) == 30  # default max order
    assert all(float(r[2]) == 1.0 for r in rows)


def test_sigma_well_panel_alternates_about_limit(run_cli):
    proc = run_cli(
        "sigma", "--model", "well", "--n", "1", "--alpha", "1.0",
        "--max-order", "30", "--precision", "12", expect=0,
    )
    _, rows = parse_csv(proc.stdout)
    assert len(rows) == 30
    limit = 0.7453559924999299
    residuals = [float(r[2]) - limit for r in rows]
    assert all(a * b < 0 for a, b in zip(residuals, residuals[1:]))
    assert "without converging" in proc.stderr


def test_sigma_boundary_strength_warns(run_cli):
    proc = run_cli(
        "sigma", "--model", "oscillator", "--n", "2", "--alpha", "2.5",
        "--max-order", "20", expect=0,
    )
    _, rows = parse_csv(proc.stdout)
    assert len(rows) == 20
    assert "pair radius" in proc.stderr


def test_sigma_skips_out_of_radius_strengths(run_cli):
    proc = run_cli(
        "sigma", "--model", "oscillator", "--n", "2", "--alpha", "2.6",
        "--alpha", "1.0", "--max-order", "5", expect=0,
    )
    _, rows = parse_csv(proc.stdout)
    assert {float(r[0]) for r in rows} == {1.0}
    assert "skipped alpha=2.6" in proc.stderr


def test_levels_endpoints(run_cli):
    proc = run_cli(
        "levels", "--n", "1", "--n", "2", "--samples", "5",
        "--precision", "6", expect=0,
    )
    header, rows = parse_csv(proc.stdout)
    assert header == ["n", "alphaW_eV", "energy_eV"]
    assert len(rows) == 10
    first = [r for r in rows if r[0] == "1"]
    assert float(first[0][1]) == 0.0 and float(first[0][2]) == -13.6
    assert float(first[-1][1]) == pytest.approx(13.6)
    assert float(first[-1][2]) == pytest.approx(-19.2333, abs=1e-3)
    second = [r for r in rows if r[0] == "2"]
    assert float(second[-1][2]) == pytest.approx(-4.80833, abs=1e-3)


def test_series_columns_and_convergence(run_cli):
    proc = run_cli(
        "series", "--e0", "0.5", "--w", "1", "--alpha", "0.25",
        "--max-order", "200", "--precision", "15", expect=0,
    )
    header, rows = parse_csv(proc.stdout)
    assert header == [
        "order", "coefficient", "term", "partial_sum", "closed_form", "in_radius",
    ]
    # odd orders contribute nothing
    assert all(float(r[2]) == 0.0 for r in rows if int(r[0]) % 2 == 1)
    # normalized coefficient column: with E = 1/2, |W| = 1 the first five
    # even coefficients times s reproduce 1, -2, 6, -20, 70
    normalized = [int(r[0]) // 2 * float(r[1]) for r in rows[1:10:2]]
    assert normalized == [1.0, -2.0, 6.0, -20.0, 70.0]
    # alpha*|W| = 0.5 |E0|: the deep partial sum meets the closed form
    final = rows[-1]
    assert final[5] == "true"
    assert abs(float(final[3]) - float(final[4])) < 1e-10


def test_series_rejects_zero_level(run_cli):
    proc = run_cli("series", "--e0", "0", "--w", "1", "--alpha", "0.5", expect=1)
    assert "e0" in proc.stderr


def test_series_divergent_flagged_not_refused(run_cli):
    proc = run_cli(
        "series", "--e0", "1", "--w", "1.2", "--alpha", "1.0",
        "--max-order", "10", expect=0,
    )
    _, rows = parse_csv(proc.stdout)
    assert all(r[5] == "false" for r in rows)
    assert all(r[4] == "" for r in rows)  # no closed form outside the radius
    assert "diverges" in proc.stderr


def test_oracle_pass_and_columns(run_cli):
    proc = run_cli(
        "oracle", "--model", "well", "--n", "1", "--alpha", "0.5",
        "--grid", "500", "--order", "400", "--precision", "8", expect=0,
    )
    header, rows = parse_csv(proc.stdout)
    assert header[-1] == "status" and rows[0][-1] == "PASS"
    report = dict(zip(header, rows[0]))
    assert float(report["closed_form"]) == pytest.approx(math.sqrt(2.0), abs=1e-6)
    assert float(report["rel_oracle_vs_closed"]) <= float(report["tolerance"])


def test_oracle_zero_strength_columns_collapse(run_cli):
    proc = run_cli(
        "oracle", "--model", "oscillator", "--n", "0", "--alpha", "0",
        "--grid", "400", "--precision", "10", expect=0,
    )
    header, rows = parse_csv(proc.stdout)
    report = dict(zip(header, rows[0]))
    tol = float(report["tolerance"])
    for column in ("E0_discrete", "series_partial_sum", "closed_form", "oracle_eigenvalue"):
        assert float(report[column]) == pytest.approx(float(report["E0_analytic"]), rel=tol)


def test_oracle_tolerance_failure_exits_two(run_cli):
    # order 1 truncation error is far above the grid tolerance
    proc = run_cli(
        "oracle", "--model", "well", "--n", "1", "--alpha", "0.45",
        "--grid", "500", "--order", "1", expect=2,
    )
    assert "exceeds tolerance" in proc.stderr
    header, rows = parse_csv(proc.stdout)  # report still emitted, marked FAIL
    assert rows[0][-1] == "FAIL"


def test_oracle_rejects_hydrogen(run_cli):
    proc = run_cli("oracle", "--model", "hydrogen", "--n", "1", "--alpha", "0.1",
                   expect=1)
    assert "Invalid value" in proc.stderr or "invalid" in proc.stderr.lower()


def test_usage_errors_exit_one(run_cli):
    run_cli("sigma", "--model", "unknown", "--n", "1", "--alpha", "0.1", expect=1)
    run_cli("sigma", "--model", "well", "--n", "0", "--alpha", "0.1", expect=1)
    run_cli("hydrogen-table", expect=1)
    run_cli("levels", "--n", "1", "--samples", "1", expect=1)
    run_cli("series", "--e0", "1", "--w", "1", "--alpha", "0.1",
            "--precision", "16", expect=1)


def test_io_error_exits_three(run_cli, tmp_path):
    missing_dir = tmp_path / "no" / "such" / "dir" / "out.csv"
    proc = run_cli(
        "hydrogen-table", "--alphaw", "0.15", "--out", str(missing_dir), expect=3
    )
    assert "I/O error" in proc.stderr


def test_no_output_file_on_usage_failure(run_cli, tmp_path):
    target = tmp_path / "out.csv"
    run_cli("sigma", "--model", "well", "--n", "0", "--alpha", "0.1",
            "--out", str(target), expect=1)
    assert not target.exists()


def test_byte_identical_reruns(run_cli, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ("sigma", "--model", "hydrogen", "--n", "1", "--alpha", "0.1",
            "--alpha", "0.125", "--max-order", "40", "--precision", "12")
    run_cli(*args, "--out", str(first), expect=0)
    run_cli(*args, "--out", str(second), expect=0)
    assert first.read_bytes() == second.read_bytes()
    assert b"\r" not in first.read_bytes()  # LF endings only


def test_json_format(run_cli):
    proc = run_cli(
        "hydrogen-table", "--alphaw", "0.15", "--n-max", "2",
        "--format", "json", expect=0,
    )
    payload = json.loads(proc.stdout)
    assert payload["columns"][0] == "n"
    assert len(payload["rows"]) == 2
    assert payload["rows"][0][1] == -13.6
    proc2 = run_cli(
        "series", "--e0", "1", "--w", "1.2", "--alpha", "1.0",
        "--max-order", "4", "--format", "json", expect=0,
    )
    data = json.loads(proc2.stdout)
    assert data["rows"][0][4] is None  # closed form absent outside the radius
    assert data["rows"][0][5] is False
