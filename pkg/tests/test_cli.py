"""Tests for the command-line interface."""

import json

import numpy as np
import pytest

from mcsense import MultibandSpec, generate
from mcsense.cli import main, parse_config

REFERENCE = {
    "L": 32,
    "p": 10,
    "omega_max": 0.25,
    "active_set": [8, 16, 17, 18, 29, 30],
    "snr_grid_db": [-2, 0, 1, 3],
    "m_grid": [11, 21, 31, 41, 51, 61],
    "trials": 1000,
    "base_seed": 20240811,
    "pattern_mode": "fixed",
    "noise_variance": 1.0,
}


@pytest.fixture
def config_file(tmp_path):
    def write(overrides=None, **replace):
        body = dict(REFERENCE)
        body.update(replace)
        if overrides:
            body.update(overrides)
        path = tmp_path / "config.json"
        path.write_text(json.dumps(body))
        return str(path)

    return write


class TestParseConfig:
    def test_accepts_reference_config(self, config_file):
        cfg = parse_config(config_file())
        assert cfg.L == 32
        assert cfg.p == 10
        assert cfg.active_set == (8, 16, 17, 18, 29, 30)
        assert cfg.m_grid == (11, 21, 31, 41, 51, 61)

    def test_rejects_p_not_above_n_max(self, config_file):
        with pytest.raises(ValueError, match="p > N_max"):
            parse_config(config_file(p=8))

    def test_rejects_duplicate_active_indices(self, config_file):
        with pytest.raises(ValueError, match="repeated"):
            parse_config(config_file(active_set=[8, 8, 16]))

    def test_rejects_unknown_keys(self, config_file):
        with pytest.raises(ValueError, match="unknown config keys.*bogus"):
            parse_config(config_file(overrides={"bogus": 1}))

    def test_rejects_missing_keys(self, tmp_path):
        path = tmp_path / "partial.json"
        path.write_text(json.dumps({"L": 32}))
        with pytest.raises(ValueError, match="missing required"):
            parse_config(str(path))

    def test_reports_json_syntax_position(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "L": 32,\n}\n')
        with pytest.raises(ValueError, match="line 3"):
            parse_config(str(path))


class TestGridCommand:
    def test_writes_grid_csv(self, config_file, tmp_path):
        cfg = config_file(trials=3, m_grid=[11], snr_grid_db=[1])
        out = tmp_path / "grid.csv"
        assert main(["grid", "--config", cfg, "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "M,snr_db,trials,pr_order,pd,pf,pattern,seed"
        assert len(lines) == 2

    def test_thread_count_gives_identical_bytes(self, config_file, tmp_path):
        cfg = config_file(trials=6, m_grid=[11, 21], snr_grid_db=[1])
        one, four = tmp_path / "one.csv", tmp_path / "four.csv"
        assert main(["grid", "--config", cfg, "--out", str(one), "--threads", "1"]) == 0
        assert main(["grid", "--config", cfg, "--out", str(four), "--threads", "4"]) == 0
        assert one.read_bytes() == four.read_bytes()

    def test_seed_override_changes_output(self, config_file, tmp_path):
        cfg = config_file(trials=2, m_grid=[11], snr_grid_db=[1])
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["grid", "--config", cfg, "--out", str(a)]) == 0
        assert main(["grid", "--config", cfg, "--out", str(b), "--seed", "99"]) == 0
        assert a.read_bytes() != b.read_bytes()

    def test_writes_trial_log(self, config_file, tmp_path):
        cfg = config_file(trials=2, m_grid=[11], snr_grid_db=[1])
        out, log = tmp_path / "grid.csv", tmp_path / "trials.csv"
        assert main(["grid", "--config", cfg, "--out", str(out), "--trial-log", str(log)]) == 0
        lines = log.read_text().splitlines()
        assert lines[0] == "trial,M,snr_db,n_hat,b_hat,hits,false_alarms"
        assert len(lines) == 3


class TestScenarioCommands:
    def test_eigens_has_one_row_per_branch(self, config_file, tmp_path):
        cfg = config_file()
        out = tmp_path / "eigens.csv"
        assert main(["eigens", "--config", cfg, "--out", str(out), "--m", "61", "--snr", "1"]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "index,eigenvalue_db"
        assert len(lines) == 11
        assert [int(row.split(",")[0]) for row in lines[1:]] == list(range(1, 11))
        values = [float(row.split(",")[1]) for row in lines[1:]]
        assert values == sorted(values, reverse=True)

    def test_pseudospectrum_golden_peaks(self, config_file, tmp_path):
        # Reference scenario: the six largest pseudospectrum values must sit
        # exactly on the occupied channels.
        cfg = config_file()
        out = tmp_path / "pmu.csv"
        assert main(["pseudospectrum", "--config", cfg, "--out", str(out), "--m", "61", "--snr", "1"]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "channel,p_mu"
        assert len(lines) == 33
        rows = [line.split(",") for line in lines[1:]]
        values = np.array([float(v) for _, v in rows])
        top6 = sorted(np.argsort(-values)[:6].tolist())
        assert top6 == [8, 16, 17, 18, 29, 30]

    def test_sense_summary(self, config_file, tmp_path):
        cfg = config_file()
        out = tmp_path / "sense.csv"
        assert main(["sense", "--config", cfg, "--out", str(out), "--m", "61", "--snr", "1"]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "m,snr_db,n_hat,b_hat,pattern"
        fields = lines[1].split(",")
        assert fields[0] == "61"
        assert fields[2] == "6"
        assert fields[3] == "8;16;17;18;29;30"

    def test_sense_spectrum_dump_shows_occupancy(self, config_file, tmp_path):
        cfg = config_file()
        out = tmp_path / "sense.csv"
        psd = tmp_path / "spectrum.csv"
        code = main([
            "sense", "--config", cfg, "--out", str(out),
            "--m", "512", "--snr", "3", "--spectrum-out", str(psd),
        ])
        assert code == 0
        lines = psd.read_text().splitlines()
        assert lines[0] == "frequency,psd_db"
        rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
        freqs, level = rows[:, 0], rows[:, 1]
        occupied = (freqs >= 16) & (freqs < 17)
        vacant = (freqs >= 2) & (freqs < 3)
        assert level[occupied].mean() > level[vacant].mean() + 6.0

    def test_sense_loads_record_file(self, config_file, tmp_path):
        spec = MultibandSpec(
            L=32, active_set=(8, 16, 17, 18, 29, 30), omega_max=0.25,
            snr_db=10.0, record_snapshots=128,
        )
        record = generate(spec, 77)
        npy = tmp_path / "record.npy"
        np.save(npy, record.samples)
        cfg = config_file()
        out = tmp_path / "sense.csv"
        assert main(["sense", "--config", cfg, "--out", str(out), "--record", str(npy)]) == 0
        fields = out.read_text().splitlines()[1].split(",")
        assert fields[0] == "128"
        assert fields[3] == "8;16;17;18;29;30"


class TestErrorHandling:
    def test_missing_config_exits_nonzero(self, tmp_path, capsys):
        code = main(["grid", "--config", str(tmp_path / "nope.json"), "--out", str(tmp_path / "o.csv")])
        assert code == 1
        assert "mcsense:" in capsys.readouterr().err

    def test_invalid_config_exits_nonzero(self, config_file, tmp_path, capsys):
        code = main(["grid", "--config", config_file(p=8), "--out", str(tmp_path / "o.csv")])
        assert code == 1
        assert "p > N_max" in capsys.readouterr().err

    def test_unknown_flag_exits_two(self, config_file, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["grid", "--config", config_file(), "--out", str(tmp_path / "o.csv"), "--wat"])
        assert exc.value.code == 2
