"""Every subcommand end to end, including exit codes and frozen outputs."""

import json
import math
import shutil
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

import pastedlogic as pl
from pastedlogic import cli

DATA = Path(__file__).parent / "data"


def pentagon_values(a, x):
    vals = {f"a{i}": a for i in range(1, 6)}
    vals.update({f"x{i}": x for i in range(1, 6)})
    return vals


@pytest.fixture()
def pent_file(tmp_path):
    path = tmp_path / "pentagon.json"
    assert cli.main(["gen-cycle", "--n", "5", "--out", str(path)]) == 0
    return str(path)


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def weight_file(tmp_path, name, values):
    return write_json(tmp_path, name, {"mode": "rational", "values": values})


class TestGenCycle:
    def test_emits_parseable_structure(self, capsys):
        assert cli.main(["gen-cycle", "--n", "4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        S = pl.structure_from_json_dict(doc)
        assert len(S.atoms) == 8 and len(S.contexts) == 4

    def test_rejects_short_cycles(self, capsys):
        assert cli.main(["gen-cycle", "--n", "1"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_out_files_are_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        cli.main(["gen-cycle", "--n", "5", "--out", str(a)])
        cli.main(["gen-cycle", "--n", "5", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()


class TestTable1:
    def test_thirty_frozen_entries(self, capsys):
        assert cli.main(["table1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["columns"]) == 10
        assert len(doc["rows"]) == 3
        assert sum(len(r["values"]) for r in doc["rows"]) == 30
        by_regime = {r["regime"]: r for r in doc["rows"]}
        assert set(by_regime) == {"midpoint", "uniform", "half-weight"}
        for i in range(1, 6):
            assert by_regime["midpoint"]["values"][f"a{i}"] == "0"
            assert by_regime["midpoint"]["values"][f"x{i}"] == "1"
            assert by_regime["uniform"]["values"][f"a{i}"] == "1/3"
            assert by_regime["uniform"]["values"][f"x{i}"] == "1/3"
            assert by_regime["half-weight"]["values"][f"a{i}"] == "1/2"
            assert by_regime["half-weight"]["values"][f"x{i}"] == "0"

    def test_midpoint_row_is_an_explicit_limit(self, capsys):
        cli.main(["table1"])
        row = json.loads(capsys.readouterr().out)["rows"][0]
        assert row["r"] == "limit"
        assert "not attained" in row["annotation"]
        # the x atoms sit 2/(2 + 10^12) from their limit, the a atoms half that
        assert float(row["proxy_max_gap"]) <= 2e-12


class TestCheck:
    def test_admissible_weight(self, pent_file, tmp_path, capsys):
        w = weight_file(tmp_path, "w.json", pentagon_values("1/2", "0"))
        assert cli.main(["check", "--structure", pent_file, "--weight", w]) == 0
        assert json.loads(capsys.readouterr().out)["admissible"] is True

    def test_inadmissible_weight_exits_5(self, pent_file, tmp_path, capsys):
        w = weight_file(tmp_path, "w.json", pentagon_values("1/2", "1/2"))
        assert cli.main(["check", "--structure", pent_file, "--weight", w]) == 5
        assert json.loads(capsys.readouterr().out)["admissible"] is False

    def test_missing_file_exits_2(self, pent_file, capsys):
        assert cli.main(["check", "--structure", pent_file, "--weight", "nope.json"]) == 2
        assert "no such file" in capsys.readouterr().err


class TestEnumerate:
    def test_pentagon_eleven_states(self, pent_file, capsys):
        assert cli.main(["enumerate", "--structure", pent_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["count"] == 11
        assert len(doc["states"]) == 11

    def test_limit_exceeded_exits_2(self, pent_file, capsys):
        assert cli.main(["enumerate", "--structure", pent_file, "--limit", "5"]) == 2


class TestClassify:
    @pytest.mark.parametrize(
        "a,x,code,label",
        [
            ("1/2", "0", 4, "beyond-theta"),
            ("10/23", "3/23", 3, "admissible-nonclassical"),
            ("0", "1", 0, "classical"),
            ("1/2", "1/2", 5, "not-admissible"),
        ],
    )
    def test_exit_code_tracks_region(self, pent_file, tmp_path, capsys, a, x, code, label):
        w = weight_file(tmp_path, "w.json", pentagon_values(a, x))
        assert cli.main(["classify", "--structure", pent_file, "--weight", w]) == code
        assert json.loads(capsys.readouterr().out)["label"] == label

    def test_numeric_modes_agree_on_dyadic_weights(self, pent_file, tmp_path):
        w = weight_file(tmp_path, "w.json", pentagon_values("1/4", "1/2"))
        out_r = tmp_path / "r.json"
        out_f = tmp_path / "f.json"
        code_r = cli.main(["classify", "--structure", pent_file, "--weight", w,
                           "--mode", "rational", "--out", str(out_r)])
        code_f = cli.main(["classify", "--structure", pent_file, "--weight", w,
                           "--mode", "float", "--out", str(out_f)])
        assert code_r == code_f == 0
        assert (json.loads(out_r.read_text())["label"]
                == json.loads(out_f.read_text())["label"] == "classical")


ASYMMETRIC = {
    "a1": "2/5", "a2": "1/5", "a3": "3/10", "a4": "1/4", "a5": "1/4",
    "x1": "2/5", "x2": "1/2", "x3": "9/20", "x4": "1/2", "x5": "7/20",
}


class TestRepresentAndGlue:
    def test_identity_link_scores_are_exact(self, pent_file, tmp_path, capsys):
        w = weight_file(tmp_path, "w.json", pentagon_values("3/7", "1/7"))
        assert cli.main(["represent", "--structure", pent_file, "--weight", w,
                         "--link", "identity"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["scope"] == "global"
        assert doc["link"] == {"kind": "identity"}
        assert all(doc["values"][f"a{i}"] == "3/14" for i in range(1, 6))
        assert all(doc["values"][f"x{i}"] == "1/14" for i in range(1, 6))

    def test_scores_file_chains_into_glue_check(self, pent_file, tmp_path):
        w = weight_file(tmp_path, "w.json", ASYMMETRIC)
        scores = tmp_path / "scores.json"
        assert cli.main(["represent", "--structure", pent_file, "--weight", w,
                         "--link", "power", "--k", "3", "--out", str(scores)]) == 0
        out = tmp_path / "glue.json"
        # no --link: the link embedded by represent is picked up
        assert cli.main(["glue-check", "--structure", pent_file,
                         "--scores", str(scores), "--out", str(out)]) == 0
        assert json.loads(out.read_text())["glued"] is True
        # forcing a different link breaks the gluing for this weight
        assert cli.main(["glue-check", "--structure", pent_file, "--scores", str(scores),
                         "--link", "identity", "--out", str(out)]) == 3
        assert json.loads(out.read_text())["glued"] is False

    def test_bad_alpha_exits_2(self, pent_file, tmp_path, capsys):
        w = weight_file(tmp_path, "w.json", pentagon_values("3/7", "1/7"))
        assert cli.main(["represent", "--structure", pent_file, "--weight", w,
                         "--alpha", "-1"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_patterned_family_fails_glue_check(self, pent_file, tmp_path, capsys):
        values = {
            "C1": {"a1": 0, "a2": 0, "x1": 0},
            "C2": {"a2": 1, "a3": 0, "x2": 0},
            "C3": {"a3": 0, "a4": 0, "x3": 1},
            "C4": {"a4": 0, "a5": 0, "x4": 1},
            "C5": {"a5": 0, "a1": 0, "x5": 1},
        }
        scores = write_json(tmp_path, "scores.json",
                            {"scope": "per-context", "values": values})
        assert cli.main(["glue-check", "--structure", pent_file,
                         "--scores", scores, "--link", "exponential"]) == 3
        doc = json.loads(capsys.readouterr().out)
        assert doc["glued"] is False
        gap = max(float(v) for v in doc["atom_discrepancies"].values())
        assert abs(gap - (math.e / (math.e + 2) - 1 / 3)) <= 1e-12


class TestSweep:
    def run_sweep(self, tmp_path, *argv):
        out = tmp_path / "sweep.csv"
        assert cli.main(["sweep", *argv, "--out", str(out)]) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "r,cyclic_sum,exceeds_classical,exceeds_theta"
        return lines

    def test_pentagon_flags_flip_at_both_thresholds(self, tmp_path):
        lines = self.run_sweep(tmp_path, "--n", "5")
        assert len(lines) == 1001
        # row i holds r = i/1001
        assert lines[500].split(",")[0] == "500/1001"
        assert [lines[i].split(",")[2] for i in (500, 501)] == ["1", "0"]
        assert [lines[i].split(",")[3] for i in (236, 237)] == ["1", "0"]
        flags_c = [line.split(",")[2] for line in lines[1:]]
        flags_t = [line.split(",")[3] for line in lines[1:]]
        assert flags_c == ["1"] * 500 + ["0"] * 500
        assert flags_t == ["1"] * 236 + ["0"] * 764

    def test_even_cycle_never_flags(self, tmp_path):
        lines = self.run_sweep(tmp_path, "--n", "4")
        for line in lines[1:]:
            r, s, above_c, above_t = line.split(",")
            assert above_c == "0"
            assert above_t == ""

    def test_heptagon_flip_matches_thresholds(self, tmp_path):
        lines = self.run_sweep(tmp_path, "--n", "7")
        r_classical, r_theta = pl.path_thresholds(7)
        i_c = math.floor(r_classical * 1001)
        i_t = math.floor(r_theta * 1001)
        assert [lines[i].split(",")[2] for i in (i_c, i_c + 1)] == ["1", "0"]
        assert [lines[i].split(",")[3] for i in (i_t, i_t + 1)] == ["1", "0"]

    def test_bad_range_exits_2(self, tmp_path, capsys):
        assert cli.main(["sweep", "--n", "5", "--r-min", "2", "--r-max", "1"]) == 2
        assert "r-min" in capsys.readouterr().err


class TestMaxent:
    def test_two_point_scores_give_log_two(self, tmp_path, capsys):
        scores = write_json(tmp_path, "scores.json", {"w": 0, "l": 1})
        assert cli.main(["maxent", "--scores", scores, "--target", str(2 / 3)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert abs(float(doc["beta"]) - math.log(2.0)) <= 1e-9
        assert abs(sum(float(v) for v in doc["distribution"].values()) - 1) <= 1e-12

    def test_unreachable_target_exits_2(self, tmp_path, capsys):
        scores = write_json(tmp_path, "scores.json", {"w": 0, "l": 1})
        assert cli.main(["maxent", "--scores", scores, "--target", "1.5"]) == 2


class TestAnalyze:
    def test_bundled_dataset_matches_expected_report(self, tmp_path):
        out = tmp_path / "report.json"
        code = cli.main(["analyze", "--data", str(DATA / "counts_beyond.json"),
                         "--out", str(out)])
        assert code == 4
        assert out.read_bytes() == (DATA / "expected_beyond_report.json").read_bytes()

    def test_csv_ingestion_gives_identical_report(self, tmp_path):
        out = tmp_path / "report.json"
        code = cli.main(["analyze", "--data", str(DATA / "counts_beyond.csv"),
                         "--structure", str(DATA / "pentagon.json"),
                         "--out", str(out)])
        assert code == 4
        assert out.read_bytes() == (DATA / "expected_beyond_report.json").read_bytes()

    def test_runs_are_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        cli.main(["analyze", "--data", str(DATA / "counts_beyond.json"), "--out", str(a)])
        cli.main(["analyze", "--data", str(DATA / "counts_beyond.json"), "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_gate_failure_withholds_with_exit_6(self, capsys):
        code = cli.main(["analyze", "--data", str(DATA / "counts_gate_fail.json")])
        assert code == 6
        doc = json.loads(capsys.readouterr().out)
        assert doc["classification"] is None
        assert doc["withheld_reason"] == (
            "single-valuedness gate failed: max |z| = 2.82843 exceeds 1.96"
        )

    def test_loosened_gate_lets_classification_through(self, capsys):
        code = cli.main(["analyze", "--data", str(DATA / "counts_gate_fail.json"),
                         "--z-threshold", "5.0"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["classification"]["label"] == "classical"
        assert doc["withheld_reason"] is None

    def test_missing_data_file_exits_2(self, capsys):
        assert cli.main(["analyze", "--data", "absent.json"]) == 2


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "pastedlogic.cli", "--version"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == pl.__version__

    def test_console_script(self, tmp_path):
        exe = shutil.which("pastedlogic")
        assert exe, "console script should be installed with the package"
        out = tmp_path / "t.json"
        proc = subprocess.run([exe, "table1", "--out", str(out)], capture_output=True)
        assert proc.returncode == 0
        assert len(json.loads(out.read_text())["rows"]) == 3
