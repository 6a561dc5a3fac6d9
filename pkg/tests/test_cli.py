import csv
import json
import math

import numpy as np
import pytest

from rebits.cli import main

BELL_PLUS = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2)


def write_state(path, **payload):
    path.write_text(json.dumps(payload))
    return str(path)


def alpha_file(tmp_path, alpha, name="state.json"):
    return write_state(tmp_path / name, pauli={"II": 1.0, "YY": alpha})


class TestMeasure:
    def test_alpha_one(self, tmp_path, capsys):
        assert main(["measure", "--input", alpha_file(tmp_path, 1.0)]) == 0
        out = capsys.readouterr().out
        assert "concurrence_real: 1" in out
        assert "wootters_concurrence: 0" in out
        assert "eof_real: 1" in out
        assert "classification: REAL_BOUND_ENTANGLED" in out

    def test_product_state(self, tmp_path, capsys):
        m = np.zeros((4, 4))
        m[0, 0] = 1.0
        path = write_state(tmp_path / "p.json", matrix=m.tolist())
        assert main(["measure", "--input", path]) == 0
        out = capsys.readouterr().out
        assert "concurrence_real: 0" in out
        assert "classification: REAL_SEPARABLE" in out

    def test_bad_trace_exits_3(self, tmp_path, capsys):
        path = write_state(tmp_path / "t.json", matrix=(np.eye(4) * 0.225).tolist())
        assert main(["measure", "--input", path]) == 3
        assert "trace" in capsys.readouterr().err

    def test_parse_error_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["measure", "--input", str(path)]) == 2

    def test_single_y_label_rejected(self, tmp_path, capsys):
        path = write_state(tmp_path / "y.json", pauli={"II": 1.0, "XY": 0.1})
        assert main(["measure", "--input", str(path)]) == 2
        assert "label" in capsys.readouterr().err

    def test_both_keys_rejected(self, tmp_path):
        path = write_state(
            tmp_path / "b.json", matrix=(np.eye(4) / 4).tolist(), pauli={"II": 1.0}
        )
        assert main(["measure", "--input", path]) == 2

    def test_json_round_trip(self, tmp_path, capsys):
        path = alpha_file(tmp_path, 0.5)
        assert main(["measure", "--input", path, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        reparsed = write_state(tmp_path / "again.json", matrix=payload["matrix"])
        assert main(["measure", "--input", reparsed, "--format", "json"]) == 0
        payload2 = json.loads(capsys.readouterr().out)
        m1 = np.array(payload["matrix"])
        m2 = np.array(payload2["matrix"])
        assert np.max(np.abs(m1 - m2)) <= 1e-12
        assert abs(payload["concurrence_real"] - 0.5) <= 1e-12

    def test_csv_format(self, tmp_path, capsys):
        assert main(["measure", "--input", alpha_file(tmp_path, 0.5), "--format", "csv"]) == 0
        rows = list(csv.reader(capsys.readouterr().out.splitlines()))
        assert rows[0][0] == "concurrence_real"
        assert abs(float(rows[1][0]) - 0.5) <= 1e-12


class TestAlphaSweep:
    def test_two_steps(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["alpha-sweep", "--steps", "2", "--output", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 2
        assert float(rows[0]["alpha"]) == 0.0 and rows[0]["classification"] == "REAL_SEPARABLE"
        assert float(rows[1]["C"]) == 1.0 and rows[1]["classification"] == "REAL_BOUND_ENTANGLED"

    def test_eleven_steps(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["alpha-sweep", "--steps", "11", "--output", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 11
        mid = rows[5]
        assert abs(float(mid["alpha"]) - 0.5) <= 1e-12
        assert abs(float(mid["C"]) - 0.5) <= 1e-12
        assert float(mid["C_W"]) == 0.0
        for row in rows:
            assert abs(float(row["C"]) - float(row["alpha"])) <= 1e-12
            assert float(row["C_W"]) == 0.0

    def test_one_step_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["alpha-sweep", "--steps", "1", "--output", str(tmp_path / "x.csv")])
        assert exc.value.code == 2

    def test_unwritable_output_exits_4(self, tmp_path):
        out = tmp_path / "no" / "such" / "dir" / "sweep.csv"
        assert main(["alpha-sweep", "--steps", "2", "--output", str(out)]) == 4
        assert not out.exists()


class TestDecompose:
    def test_pure_state(self, tmp_path, capsys):
        path = write_state(tmp_path / "bell.json", matrix=np.outer(BELL_PLUS, BELL_PLUS).tolist())
        assert main(["decompose", "--input", path]) == 0
        out = capsys.readouterr().out
        assert "target_preconcurrence: -1" in out
        assert out.count("member ") == 1

    def test_bell_mixture(self, tmp_path, capsys):
        minus = np.array([1.0, 0.0, 0.0, -1.0]) / math.sqrt(2)
        m = 0.5 * np.outer(BELL_PLUS, BELL_PLUS) + 0.5 * np.outer(minus, minus)
        path = write_state(tmp_path / "mix.json", matrix=m.tolist())
        assert main(["decompose", "--input", path]) == 0
        out = capsys.readouterr().out
        assert "target_preconcurrence: 0" in out
        assert out.count("preconcurrence=0 ") + out.count("preconcurrence=-0 ") == 2

    def test_alpha_half(self, tmp_path, capsys):
        assert main(["decompose", "--input", alpha_file(tmp_path, 0.5)]) == 0
        out = capsys.readouterr().out
        assert out.count("preconcurrence=0.5") == 4


class TestOracle:
    def test_alpha_half(self, tmp_path, capsys):
        code = main(
            ["oracle", "--input", alpha_file(tmp_path, 0.5), "--m", "6", "--restarts", "32", "--seed", "7"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "closed_form=" in out and "oracle=" in out and "gap=" in out

    def test_pure_maximally_entangled(self, tmp_path, capsys):
        path = write_state(tmp_path / "bell.json", matrix=np.outer(BELL_PLUS, BELL_PLUS).tolist())
        assert main(["oracle", "--input", path, "--m", "3", "--restarts", "4", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        closed = float(out.split("closed_form=")[1].split()[0])
        oracle = float(out.split("oracle=")[1].split()[0])
        assert abs(closed - 1.0) <= 1e-12
        assert abs(oracle - 1.0) <= 1e-6

    def test_separable_product(self, tmp_path, capsys):
        m = np.zeros((4, 4))
        m[0, 0] = 1.0
        path = write_state(tmp_path / "prod.json", matrix=m.tolist())
        assert main(["oracle", "--input", path, "--m", "3", "--restarts", "4", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert float(out.split("oracle=")[1].split()[0]) <= 1e-9


class TestScan:
    def test_witness_row(self, capsys):
        assert main(["scan", "--epsilons", "0.001", "--samples", "2", "--seed", "3"]) == 0
        rows = list(csv.DictReader(capsys.readouterr().out.splitlines()))
        assert len(rows) == 1
        row = rows[0]
        assert abs(float(row["witness_alpha"]) - 0.002) <= 1e-15
        assert abs(float(row["witness_C"]) - 0.002) <= 1e-12
        assert float(row["witness_C_W"]) == 0.0
        assert float(row["witness_pt_min_eig"]) >= 0.0

    def test_small_epsilon_complex_fraction_zero(self, capsys):
        assert main(["scan", "--epsilons", "0.05", "--samples", "50", "--seed", "11"]) == 0
        rows = list(csv.DictReader(capsys.readouterr().out.splitlines()))
        assert float(rows[0]["fraction_complex_entangled"]) == 0.0
        # real entanglement is generic at any radius
        assert float(rows[0]["fraction_real_entangled"]) > 0.0

    def test_zero_samples_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["scan", "--epsilons", "0.1", "--samples", "0", "--seed", "1"])
        assert exc.value.code == 2

    def test_epsilon_out_of_range(self):
        with pytest.raises(SystemExit) as exc:
            main(["scan", "--epsilons", "1.5", "--samples", "1", "--seed", "1"])
        assert exc.value.code == 2

    def test_output_file(self, tmp_path):
        out = tmp_path / "scan.csv"
        assert main(["scan", "--epsilons", "0.1,0.2", "--samples", "3", "--seed", "5", "--output", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert [float(r["epsilon"]) for r in rows] == [0.1, 0.2]
