"""End-to-end tests of the command-line interface."""

import json
import math
from pathlib import Path

import numpy as np
import pytest

from spiralbox.cli import main

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def read_csv(path):
    import csv

    lines = [
        line
        for line in Path(path).read_text().splitlines()
        if line and not line.startswith("#")
    ]
    rows = list(csv.reader(lines))
    return rows[0], rows[1:]


# --- curve -------------------------------------------------------------------


def test_curve_csv_hydrogen_radius_law(tmp_path):
    out = tmp_path / "curve.csv"
    sigma = 1.0
    code = main(
        [
            "curve",
            "--sigma",
            "1.0",
            "--p",
            "0.5",
            "--s-min",
            "0.5",
            "--s-max",
            "40",
            "--samples",
            "100",
            "--output",
            str(out),
        ]
    )
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["s", "x", "y"]
    assert len(rows) == 100
    for s_str, x_str, y_str in rows[::9]:
        s, x, y = float(s_str), float(x_str), float(y_str)
        assert math.hypot(x, y) == pytest.approx(
            sigma * math.sqrt(s + sigma * sigma / 4.0), rel=1e-8
        )


def test_curve_constant_curvature_closes_circle(tmp_path):
    out = tmp_path / "circle.csv"
    code = main(
        [
            "curve",
            "--sigma",
            "1.0",
            "--p",
            "0",
            "--s-min",
            "1e-9",
            "--s-max",
            str(2.0 * math.pi),
            "--samples",
            "20000",
            "--spacing",
            "linear",
            "--output",
            str(out),
        ]
    )
    assert code == 0
    _, rows = read_csv(out)
    first = np.array([float(v) for v in rows[0][1:]])
    last = np.array([float(v) for v in rows[-1][1:]])
    assert np.linalg.norm(last - first) < 1e-6


def test_curve_svg_output_is_deterministic(tmp_path):
    args = [
        "curve",
        "--sigma",
        "0.0632455532",
        "--format",
        "svg",
    ]
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(args + ["--output", str(a)]) == 0
    assert main(args + ["--output", str(b)]) == 0
    content = a.read_text()
    assert content == b.read_text()
    assert content.startswith("<svg")
    assert "polyline" in content
    # downsampling cap on path length
    assert content.count(",") <= 5001


def test_curve_invalid_range(tmp_path):
    code = main(
        ["curve", "--sigma", "1", "--s-min", "2", "--s-max", "1", "--output", str(tmp_path / "x")]
    )
    assert code == 2


def test_unknown_flag_exits_2(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["curve", "--sigma", "1", "--bogus", "3", "--output", str(tmp_path / "x")])
    assert err.value.code == 2


def test_missing_command_exits_2():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


# --- spectrum -----------------------------------------------------------------


def test_spectrum_csv_matches_library(tmp_path):
    from spiralbox.quantum import spiral_box_spectrum

    out = tmp_path / "spec.csv"
    sigma = math.sqrt(0.004)
    assert main(["spectrum", "--sigma", repr(sigma), "--levels", "4", "--output", str(out)]) == 0
    omega_line = next(
        line for line in out.read_text().splitlines() if line.startswith("# omega")
    )
    assert float(omega_line.split("=")[1]) == pytest.approx(7.88987, rel=1e-5)
    header, rows = read_csv(out)
    assert header == ["n", "bessel_zero", "energy_hartree", "energy_ev"]
    spec = spiral_box_spectrum(sigma, 1.0, 1.0, 4)
    for row, n in zip(rows, range(1, 5)):
        assert float(row[1]) == pytest.approx(spec.zero(n), rel=1e-9)
        assert float(row[2]) == pytest.approx(spec.energy(n), rel=1e-9)


def test_spectrum_header_only_when_no_levels(tmp_path):
    out = tmp_path / "empty.csv"
    assert main(["spectrum", "--sigma", "1.0", "--levels", "0", "--output", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["n", "bessel_zero", "energy_hartree", "energy_ev"]
    assert rows == []


def test_spectrum_json(tmp_path):
    out = tmp_path / "spec.json"
    assert main(
        ["spectrum", "--sigma", "1e6", "--levels", "2", "--format", "json", "--output", str(out)]
    ) == 0
    payload = json.loads(out.read_text())
    assert payload["omega"] == pytest.approx(0.5, rel=1e-12)
    assert [lvl["n"] for lvl in payload["levels"]] == [1, 2]
    assert payload["levels"][0]["energy_hartree"] == pytest.approx(math.pi**2 / 2.0, rel=1e-6)


# --- wavefunction ----------------------------------------------------------------


def test_wavefunction_dump(tmp_path):
    out = tmp_path / "psi.csv"
    assert main(
        [
            "wavefunction",
            "--sigma",
            "1e6",
            "--length",
            "1.0",
            "--level",
            "2",
            "--samples",
            "101",
            "--output",
            str(out),
        ]
    ) == 0
    _, rows = read_csv(out)
    assert len(rows) == 101
    for s_str, psi_str in rows[::10]:
        s, psi = float(s_str), float(psi_str)
        expected = math.sqrt(2.0) * math.sin(2.0 * math.pi * s)
        assert psi == pytest.approx(expected, abs=1e-7)


# --- oracle ------------------------------------------------------------------------


def test_oracle_effective_mode_half_order(tmp_path):
    out = tmp_path / "oracle.csv"
    assert main(
        ["oracle", "--omega", "0.5", "--levels", "2", "--grid", "400", "--output", str(out)]
    ) == 0
    _, rows = read_csv(out)
    for row, n in zip(rows, (1, 2)):
        analytic = float(row[1])
        assert analytic == pytest.approx((n * math.pi) ** 2, rel=1e-9)
        assert float(row[3]) < 1e-3


def test_oracle_effective_mode_high_order(tmp_path):
    out = tmp_path / "oracle.csv"
    assert main(
        ["oracle", "--omega", "7.88987", "--levels", "3", "--grid", "2000", "--output", str(out)]
    ) == 0
    _, rows = read_csv(out)
    assert all(float(row[3]) < 1e-3 for row in rows)


def test_oracle_literal_mode_diverges(tmp_path):
    out = tmp_path / "literal.csv"
    assert main(
        [
            "oracle",
            "--omega",
            "7.88987",
            "--mode",
            "literal",
            "--grid",
            "200",
            "--output",
            str(out),
        ]
    ) == 0
    _, rows = read_csv(out)
    grounds = [float(r[1]) for r in rows]
    assert grounds[0] > grounds[1] > grounds[2]
    assert grounds[-1] < 0.0


# --- fit and report -----------------------------------------------------------------


def test_fit_round_trip_file(tmp_path):
    out = tmp_path / "fits.csv"
    svg = tmp_path / "fits.svg"
    code = main(
        [
            "fit",
            "--molecules",
            str(DATA_DIR / "polyenes_roundtrip.json"),
            "--tol",
            "1e-5",
            "--effective-mass",
            "--svg",
            str(svg),
            "--output",
            str(out),
        ]
    )
    assert code == 0
    header, rows = read_csv(out)
    assert header == [
        "name",
        "sigma",
        "omega",
        "lambda_calc_nm",
        "lambda_exp_nm",
        "percent_error",
        "effective_mass_me",
    ]
    expected_sigma = [math.sqrt(v) for v in (0.004, 0.0014, 0.0009, 0.00045)]
    for row, sig in zip(rows, expected_sigma):
        assert float(row[1]) == pytest.approx(sig, rel=1e-6)
        assert float(row[5]) <= 1e-5
        assert 0.0 < float(row[6]) < 1.0
    assert svg.read_text().startswith("<svg")


def test_fit_skips_rows_without_lambda(tmp_path, capsys):
    out = tmp_path / "fits.csv"
    code = main(
        ["fit", "--molecules", str(DATA_DIR / "polyenes.json"), "--output", str(out)]
    )
    assert code == 0
    _, rows = read_csv(out)
    assert rows == []
    assert "skipped" in capsys.readouterr().err


def test_fit_no_bracket_exits_4(tmp_path):
    mol_file = tmp_path / "weird.json"
    mol_file.write_text(
        json.dumps(
            [
                {
                    "name": "unreachable",
                    "n_pi": 8,
                    "box_length_nm": 1.39,
                    "lambda_exp_nm": 1e9,
                    "source": "synthetic",
                }
            ]
        )
    )
    out = tmp_path / "fits.csv"
    assert main(["fit", "--molecules", str(mol_file), "--output", str(out)]) == 4


def test_report_with_fixed_sigmas(tmp_path):
    out = tmp_path / "report.csv"
    sigmas = ",".join(repr(math.sqrt(v)) for v in (0.004, 0.0014, 0.0009, 0.00045))
    code = main(
        [
            "report",
            "--molecules",
            str(DATA_DIR / "polyenes_roundtrip.json"),
            "--sigmas",
            sigmas,
            "--output",
            str(out),
        ]
    )
    assert code == 0
    _, rows = read_csv(out)
    assert len(rows) == 4
    for row in rows:
        assert float(row[5]) <= 1e-6  # lambda_exp was generated at these sigmas


def test_report_sigma_count_mismatch(tmp_path):
    code = main(
        [
            "report",
            "--molecules",
            str(DATA_DIR / "polyenes.json"),
            "--sigmas",
            "0.1,0.2",
            "--output",
            str(tmp_path / "r.csv"),
        ]
    )
    assert code == 2


def test_write_failure_exits_3(tmp_path):
    target = tmp_path / "no_such_dir" / "out.csv"
    assert main(["spectrum", "--sigma", "1.0", "--output", str(target)]) == 3


# --- hydrogen ------------------------------------------------------------------------


def test_hydrogen_densities_and_nodes(tmp_path):
    out = tmp_path / "hyd.csv"
    assert main(["hydrogen", "--n-level", "3", "--samples", "3000", "--output", str(out)]) == 0
    _, rows = read_csv(out)
    psi = np.array([float(r[1]) for r in rows])
    p1 = np.array([float(r[2]) for r in rows])
    p3 = np.array([float(r[3]) for r in rows])
    signs = np.sign(psi)
    assert int(np.sum(signs[:-1] * signs[1:] < 0)) == 2
    assert np.allclose(p1, p3, rtol=1e-8, atol=1e-12 * float(p1.max()))


def test_hydrogen_ground_state_nodeless(tmp_path):
    out = tmp_path / "hyd1.csv"
    assert main(["hydrogen", "--n-level", "1", "--samples", "500", "--output", str(out)]) == 0
    _, rows = read_csv(out)
    assert all(float(r[1]) > 0.0 for r in rows)


# --- determinism ----------------------------------------------------------------------


def test_identical_invocations_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["spectrum", "--sigma", "0.0374165739", "--levels", "6"]
    assert main(args + ["--output", str(a)]) == 0
    assert main(args + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
