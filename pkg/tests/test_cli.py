import json
import math
import subprocess
import sys

import pytest

from .goldens import ASPECT, LN2

# frozen schema snapshots; changing either is a breaking format change
SCAN_HEADER = ("mu1,mu2,nu1,nu2,bell_value,total_flow,"
               "total_signed_flow,degree_sum,in_u,in_v,in_vs")
REPORT_HEADER = ("mu1,mu2,nu1,nu2,"
                 "theta_11,theta_12,theta_21,theta_22,"
                 "degree_11,degree_12,degree_21,degree_22,"
                 "bell_value,degree_sum,abs_degree_sum,"
                 "total_flow,total_signed_flow,violates_bell")


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "bellflow", *args],
        capture_output=True, text=True,
    )


def payload_lines(text):
    """Artifact lines with the manifest timestamp dropped."""
    return [line for line in text.splitlines()
            if "timestamp" not in line]


class TestReport:
    def test_json_golden_values(self):
        p = run_cli("report", "pi/8", "3pi/8", "pi/4", "0")
        assert p.returncode == 0
        doc = json.loads(p.stdout)
        report = doc["report"]
        assert report["bell_value"] == pytest.approx(ASPECT["b"], abs=1e-12)
        assert report["thetas"][0][0] == pytest.approx(ASPECT["theta11"], abs=1e-12)
        assert report["degrees"][0][0] == pytest.approx(ASPECT["e11"], abs=1e-12)
        assert report["total_flow"] == pytest.approx(ASPECT["total_flow"], abs=1e-12)
        assert report["violates_bell"] is True
        assert set(report) >= {"thetas", "degrees", "bell_value", "total_flow",
                               "total_signed_flow", "degree_sum", "violates_bell"}

    def test_json_round_trip_and_invariants(self):
        p = run_cli("report", "0.3", "1.1", "2.2", "3.1")
        doc = json.loads(p.stdout)
        config = doc["report"]["config"]
        assert (config["mu1"], config["mu2"], config["nu1"], config["nu2"]) == \
            (0.3, 1.1, 2.2, 3.1)
        r = doc["report"]
        assert r["total_flow"] == pytest.approx(LN2 * r["abs_degree_sum"], abs=1e-15)
        assert r["total_signed_flow"] == pytest.approx(LN2 * r["degree_sum"], abs=1e-15)
        assert r["violates_bell"] == (abs(r["bell_value"]) > 2.0)
        assert abs(r["bell_value"]) <= 2 * math.sqrt(2) + 1e-12

    def test_all_pi_config(self):
        doc = json.loads(run_cli("report", "pi", "pi", "pi", "pi").stdout)
        assert doc["report"]["total_flow"] == pytest.approx(4 * LN2, abs=1e-12)
        assert doc["report"]["degree_sum"] == pytest.approx(-4.0, abs=1e-12)

    @pytest.mark.parametrize("token, expected", [
        ("pi", math.pi),
        ("pi/8", math.pi / 8),
        ("3pi/8", 3 * math.pi / 8),
        ("2pi/3", 2 * math.pi / 3),
        ("0.75", 0.75),
    ])
    def test_angle_syntax(self, token, expected):
        doc = json.loads(run_cli("report", token, "0", "0", "0").stdout)
        assert doc["report"]["config"]["mu1"] == pytest.approx(expected, abs=0)

    def test_angle_out_of_domain_exits_2(self):
        p = run_cli("report", "0", "0", "0", "4")
        assert p.returncode == 2
        assert "nu2" in p.stderr

    def test_unparseable_angle_exits_2(self):
        p = run_cli("report", "bogus", "0", "0", "0")
        assert p.returncode == 2
        assert "mu1" in p.stderr

    def test_csv_format(self):
        p = run_cli("report", "pi/8", "3pi/8", "pi/4", "0", "--format", "csv")
        lines = [l for l in p.stdout.splitlines() if not l.startswith("#")]
        assert lines[0] == REPORT_HEADER
        cells = lines[1].split(",")
        assert len(cells) == len(REPORT_HEADER.split(","))
        assert float(cells[12]) == pytest.approx(ASPECT["b"], abs=1e-12)
        assert cells[17] == "1"  # violates_bell

    def test_floats_serialized_round_trip_exact(self):
        p = run_cli("report", "pi/8", "3pi/8", "pi/4", "0")
        # 17 significant digits round-trip the double exactly, so parsing
        # and re-formatting must reproduce the emitted token
        b = json.loads(p.stdout)["report"]["bell_value"]
        assert f'"bell_value": {format(b, ".17g")}' in p.stdout

    def test_out_file(self, tmp_path):
        path = tmp_path / "report.json"
        p = run_cli("report", "pi/8", "3pi/8", "pi/4", "0", "--out", str(path))
        assert p.returncode == 0
        assert p.stdout == ""
        doc = json.loads(path.read_text())
        assert doc["manifest"]["command"] == "report"


class TestScan:
    def test_two_dim_slice_row_count(self):
        p = run_cli("scan", "--grid", "101", "--pin", "mu2=0", "--pin", "nu2=0")
        rows = [l for l in p.stdout.splitlines() if not l.startswith("#")]
        assert rows[0] == SCAN_HEADER
        assert len(rows) - 1 == 101 * 101

    def test_column_count_constant(self):
        p = run_cli("scan", "--grid", "4", "--pin", "mu2=pi/2", "--pin", "nu2=pi")
        rows = [l for l in p.stdout.splitlines() if not l.startswith("#")]
        widths = {len(r.split(",")) for r in rows}
        assert widths == {11}

    def test_contains_tsirelson_row(self):
        p = run_cli("scan", "--grid", "3", "--pin", "nu1=pi/4", "--pin", "nu2=3pi/4")
        rows = [l.split(",") for l in p.stdout.splitlines() if not l.startswith("#")][1:]
        match = [r for r in rows
                 if float(r[0]) == pytest.approx(math.pi / 2, abs=1e-15)
                 and float(r[1]) == 0.0]
        assert len(match) == 1
        assert float(match[0][4]) == pytest.approx(2 * math.sqrt(2), abs=1e-12)

    def test_row_order_lexicographic(self):
        p = run_cli("scan", "--grid", "2", "--pin", "mu1=0", "--pin", "mu2=0")
        rows = [l.split(",") for l in p.stdout.splitlines() if not l.startswith("#")][1:]
        coords = [(float(r[2]), float(r[3])) for r in rows]
        assert coords == sorted(coords)

    def test_deterministic_output(self):
        a = run_cli("scan", "--grid", "5", "--pin", "mu2=1", "--pin", "nu2=2")
        b = run_cli("scan", "--grid", "5", "--pin", "mu2=1", "--pin", "nu2=2")
        assert payload_lines(a.stdout) == payload_lines(b.stdout)

    def test_conflicting_pins_exit_2(self):
        p = run_cli("scan", "--grid", "3", "--pin", "mu2=0", "--pin", "mu2=1")
        assert p.returncode == 2
        assert "conflicting" in p.stderr

    def test_repeated_identical_pin_allowed(self):
        p = run_cli("scan", "--grid", "2", "--pin", "mu2=0", "--pin", "mu2=0",
                    "--pin", "nu2=0", "--pin", "mu1=0", "--pin", "nu1=0")
        assert p.returncode == 0

    def test_grid_too_small_exits_2(self):
        assert run_cli("scan", "--grid", "1").returncode == 2

    def test_bad_pin_name_exits_2(self):
        assert run_cli("scan", "--grid", "3", "--pin", "rho=1").returncode == 2


class TestMc:
    def test_payload_fields_and_containment(self):
        p = run_cli("mc", "--n", "2000", "--seed", "42")
        doc = json.loads(p.stdout)
        r = doc["report"]
        assert r["n"] == 2000 and r["seed"] == 42
        assert 0.0 <= r["alpha_hat"] <= 1.0
        assert r["frechet_v"][0] <= r["tau_hat"] <= r["frechet_v"][1]
        assert r["frechet_vs"][0] <= r["tau_s_hat"] <= r["frechet_vs"][1]
        assert r["undefined_conditionals"] == []
        assert len(r["flow_range_in_u"]) == 2
        assert doc["manifest"]["rng"] == r["rng"]

    def test_reruns_identical(self):
        a = run_cli("mc", "--n", "1000", "--seed", "42")
        b = run_cli("mc", "--n", "1000", "--seed", "42")
        assert payload_lines(a.stdout) == payload_lines(b.stdout)

    def test_worker_count_invariant(self):
        a = run_cli("mc", "--n", "5000", "--seed", "9", "--workers", "1")
        b = run_cli("mc", "--n", "5000", "--seed", "9", "--workers", "3")
        assert payload_lines(a.stdout) == payload_lines(b.stdout)

    def test_default_seed_is_printed(self):
        doc = json.loads(run_cli("mc", "--n", "10").stdout)
        assert doc["manifest"]["params"]["seed"] == 0
        assert doc["report"]["seed"] == 0

    def test_single_sample_outside_u_flags_conditionals(self):
        doc = json.loads(run_cli("mc", "--n", "1", "--seed", "10").stdout)
        r = doc["report"]
        assert r["alpha_hat"] == 0.0
        assert r["cond_vc_given_u"] is None
        assert "cond_vc_given_u" in r["undefined_conditionals"]
        assert r["flow_range_in_u"] is None

    def test_n_zero_exits_2(self):
        assert run_cli("mc", "--n", "0").returncode == 2

    def test_out_file(self, tmp_path):
        path = tmp_path / "mc.json"
        a = run_cli("mc", "--n", "300", "--seed", "5", "--out", str(path))
        assert a.returncode == 0
        b = run_cli("mc", "--n", "300", "--seed", "5")
        assert payload_lines(path.read_text()) == payload_lines(b.stdout)


class TestInvert:
    def test_zero_flow(self):
        doc = json.loads(run_cli("invert", "0").stdout)
        assert doc["report"]["theta"] == pytest.approx(0.25, abs=1e-12)
        assert doc["report"]["distribution"] == \
            pytest.approx([0.25, 0.25, 0.25, 0.25], abs=1e-12)

    def test_rounded_negative_ln2_is_clamped(self):
        doc = json.loads(run_cli("invert", "-0.6931472").stdout)
        assert doc["report"]["theta"] == pytest.approx(0.0, abs=1e-9)
        assert doc["report"]["distribution"] == \
            pytest.approx([0.0, 0.5, 0.5, 0.0], abs=1e-9)

    def test_published_signed_flow_value(self):
        doc = json.loads(run_cli("invert", "0.1308122").stdout)
        assert doc["report"]["theta"] == pytest.approx(0.375, abs=1e-6)

    def test_out_of_range_exits_2(self):
        p = run_cli("invert", "0.8")
        assert p.returncode == 2
        assert "signed_flow" in p.stderr

    def test_unparseable_exits_2(self):
        assert run_cli("invert", "zzz").returncode == 2
