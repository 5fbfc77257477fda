# =============================================================
# Pytest: `tensorlab` Management Command
# =============================================================

import json
import logging

import pytest

# =============================================================
# Local
# =============================================================
from tensors.management.commands.tensorlab import cli_dispatch
from tensors.models import Tensor
from tensors.services.algebra import TensorService

# =============================================================
# Core
# =============================================================
from core.constants import NOT_P_STATUSES


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


# =============================================================
# Test Case 1: Generate, Evaluate, Measure
# =============================================================
def test_gen_then_alpha(tmp_path, capsys):
    # Step 1 — Write the unit tensor
    path = tmp_path / "I.json"
    assert cli_dispatch(["gen", "--kind", "identity", "--m", "4", "--n", "2", "-o", str(path)]) == 0
    capsys.readouterr()

    # Step 2 — alpha(T_I) = 1/2
    assert cli_dispatch(["alpha", "--op", "T", str(path)]) == 0
    payload = _stdout_json(capsys)
    assert payload["success"] is True
    assert payload["data"]["value"] == pytest.approx(0.5, abs=1e-8)
    assert payload["data"]["certification"] == "grid-certified"


def test_gen_is_deterministic(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["gen", "--kind", "symmetric-gaussian", "--m", "3", "--n", "3", "--seed", "4"]

    assert cli_dispatch([*argv, "-o", str(first)]) == 0
    assert cli_dispatch([*argv, "-o", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_apply(diag_23, tensor_file, capsys):
    assert cli_dispatch(["apply", str(tensor_file(diag_23)), "--x", "1,-1"]) == 0
    assert _stdout_json(capsys)["data"]["y"] == [2.0, -3.0]


def test_eig(diag_23, tensor_file, capsys):
    assert cli_dispatch(["eig", str(tensor_file(diag_23)), "--kind", "H"]) == 0
    data = _stdout_json(capsys)["data"]

    assert [pair["lambda"] for pair in data["eigenpairs"]] == pytest.approx([2.0, 3.0], abs=1e-8)
    assert data["certified"] is True


def test_delta_writes_output(diag_23, tensor_file, tmp_path):
    out = tmp_path / "delta.json"
    assert cli_dispatch(["delta", str(tensor_file(diag_23)), "-o", str(out)]) == 0

    report = json.loads(out.read_text())
    assert report["delta_h"] == pytest.approx(2.0, abs=1e-8)
    assert report["delta_z"] == pytest.approx(1.2, abs=1e-8)


# =============================================================
# Test Case 2: Classification and Bounds
# =============================================================
def test_check_p_with_zero_diagonal(tensor_file, capsys):
    A = Tensor.from_entries(2, 2, [1.0, 0.5, 0.5, 0.0])
    assert cli_dispatch(["check-p", str(tensor_file(A))]) == 0

    data = _stdout_json(capsys)["data"]
    assert data["status"] in NOT_P_STATUSES
    assert data["diag_violations"] == [2]


def test_verify_bounds_on_unit_tensor(tensor_file, tmp_path, capsys):
    out = tmp_path / "bounds.json"
    argv = ["verify-bounds", str(tensor_file(TensorService.unit_tensor(4, 2))), "--h", "0.05", "-o", str(out)]

    assert cli_dispatch(argv) == 0
    assert _stdout_json(capsys)["message"] == "All bounds hold"
    assert json.loads(out.read_text())["certified"] is True


def test_verify_bounds_report_is_byte_identical_across_runs(p_fixture, tensor_file, tmp_path):
    path = str(tensor_file(p_fixture(2)))
    first, second = tmp_path / "a.json", tmp_path / "b.json"

    codes = [
        cli_dispatch(["verify-bounds", path, "--h", "0.05", "--seed", "3", "-o", str(out)])
        for out in (first, second)
    ]

    assert codes[0] == codes[1]
    assert first.read_bytes() == second.read_bytes()


# =============================================================
# Test Case 3: Tensor Complementarity
# =============================================================
def test_tcp_solve(write_file, capsys):
    instance = write_file("inst.json", {"tensor": {"m": 3, "n": 2, "entries": [1, 0, 0, 0, 0, 0, 0, 1]}, "q": [-1, -4]})

    assert cli_dispatch(["tcp-solve", str(instance)]) == 0
    data = _stdout_json(capsys)["data"]
    assert data["converged"] is True
    assert data["x"] == pytest.approx([1.0, 2.0], abs=1e-10)


def test_tcp_solve_without_solution_exits_1(write_file, capsys):
    instance = write_file("inst.json", {"tensor": {"m": 2, "n": 1, "entries": [-1]}, "q": [-1]})

    assert cli_dispatch(["tcp-solve", str(instance), "--seed", "1"]) == 1
    assert "not_converged" in capsys.readouterr().err


# =============================================================
# Test Case 4: Batch
# =============================================================
def test_batch_writes_report_and_summary(tmp_path, capsys, caplog):
    out, summary = tmp_path / "batch.json", tmp_path / "summary.txt"
    argv = [
        "batch", "--kind", "identity-plus-perturbation", "--m", "4", "--n", "2",
        "--param", "eps=0.1", "--count", "2", "--h", "0.05",
        "-o", str(out), "--summary", str(summary),
    ]

    with caplog.at_level(logging.INFO, logger="tensorlab"):
        assert cli_dispatch(argv) == 0
    assert json.loads(out.read_text())["count"] == 2
    assert summary.read_text().startswith("generator: identity-plus-perturbation m=4 n=2 count=2")

    # stdout is the JSON envelope alone; the table goes to the log
    assert _stdout_json(capsys)["data"]["count"] == 2
    assert "alpha_T / delta_Z" in caplog.text


def test_batch_report_is_byte_identical_across_runs(tmp_path):
    argv = [
        "batch", "--kind", "diagonally-dominant", "--m", "4", "--n", "2",
        "--count", "2", "--seed", "5", "--h", "0.05",
    ]
    first, second = tmp_path / "first", tmp_path / "second"
    for folder in (first, second):
        folder.mkdir()
        assert cli_dispatch([*argv, "-o", str(folder / "batch.json"), "--summary", str(folder / "summary.txt")]) == 0

    assert (first / "batch.json").read_bytes() == (second / "batch.json").read_bytes()
    assert (first / "summary.txt").read_bytes() == (second / "summary.txt").read_bytes()


# =============================================================
# Test Case 5: Exit Codes for Bad Input
# =============================================================
def test_malformed_json_exits_2(write_file, capsys):
    assert cli_dispatch(["alpha", str(write_file("bad.json", "{not json"))]) == 2
    assert "invalid_format" in capsys.readouterr().err


def test_missing_file_exits_2(tmp_path):
    assert cli_dispatch(["delta", str(tmp_path / "absent.json")]) == 2


def test_argument_errors_exit_2(tensor_file, diag_23):
    path = str(tensor_file(diag_23))

    assert cli_dispatch(["apply", path]) == 2
    assert cli_dispatch(["apply", path, "--x", "1,a"]) == 2
    assert cli_dispatch(["no-such-command"]) == 2


def test_invalid_config_value_exits_2(tensor_file, diag_23, capsys):
    assert cli_dispatch(["alpha", str(tensor_file(diag_23)), "--h", "5"]) == 2
    assert "grid_resolution" in capsys.readouterr().err


def test_odd_order_alpha_f_exits_2(tensor_file, capsys):
    path = tensor_file(TensorService.unit_tensor(3, 2))
    assert cli_dispatch(["alpha", "--op", "F", str(path)]) == 2
    assert "unsupported_order" in capsys.readouterr().err
