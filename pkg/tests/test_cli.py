import csv
import math
import subprocess
import sys

import pytest

from noisy_teleport import cli
from noisy_teleport.cli import CSV_HEADER, SweepSpec, UsageError, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qcrit(capsys):
    code, out, _ = run(["qcrit", "--alpha", "0.1"], capsys)
    assert code == 0
    value = float(out.split("=")[1].split()[0])
    assert abs(value - 0.0209421) < 1e-4


def test_qcrit_no_sign_change_exits_1(capsys):
    code, _, err = run(["qcrit", "--alpha", "0.3"], capsys)
    assert code == 1
    assert "no sign change" in err


def test_gsf_output(capsys):
    code, out, _ = run(["gsf", "--alpha", "0", "--q", "0.25"], capsys)
    assert code == 0
    assert out.startswith("G[Xi] = 0.765625")


def test_negativity_and_discord(capsys):
    for name in ("negativity", "discord"):
        code, out, _ = run([name, "--alpha", "0.1", "--q", "0.01", "--epsilon", "0.1"], capsys)
        assert code == 0
        assert "gap" in out


def test_fidelity_requires_seed_for_monte_carlo(capsys):
    code, _, err = run(["fidelity", "--samples", "1000"], capsys)
    assert code == 2
    assert "--seed" in err
    code, out, _ = run(["fidelity", "--samples", "1000", "--seed", "4", "--q", "0.5"], capsys)
    assert code == 0
    assert "Monte Carlo" in out


def test_sweep_csv_and_byte_identical_rerun(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        code, _, _ = run(["sweep", "--param", "epsilon", "--start", "0", "--stop", "0.25",
                          "--steps", "3", "--alpha", "0.1", "--out", str(p)], capsys)
        assert code == 0
    data = paths[0].read_bytes()
    assert data == paths[1].read_bytes()
    assert b"\r" not in data
    rows = list(csv.reader(data.decode("utf-8").splitlines()))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 4
    assert [float(r[0]) for r in rows[1:]] == [0.0, 0.125, 0.25]
    # Negativity of the output vanishes for a product input.
    assert abs(float(rows[1][3])) < 1e-12


@pytest.mark.parametrize("argv", [
    ["sweep", "--param", "q", "--start", "0", "--stop", "0.1", "--steps", "1", "--out", "x.csv"],
    ["sweep", "--param", "q", "--start", "0.1", "--stop", "0.1", "--steps", "3", "--out", "x.csv"],
    ["sweep", "--param", "q", "--start", "0", "--stop", "0.1", "--steps", "3"],
    ["gsf", "--q", "1.5"],
])
def test_usage_errors_exit_2(argv, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_bad_subcommand_is_argparse_error():
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2


def test_sweep_spec_validation():
    with pytest.raises(UsageError):
        SweepSpec("beta", 0, 1, 3)
    assert list(SweepSpec("q", 0.0, 1.0, 5).values()) == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "noisy_teleport.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    for name in cli.COMMANDS:
        assert name in proc.stdout
