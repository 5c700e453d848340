import math

import pytest

from unruh_lab import cli
from unruh_lab.verify import CheckResult


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPoint:
    def test_inertial_bell_point(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "point", "--family", "quantum-single", "--region", "bob-i",
            "--gamma", "0", "--qr", "1", "--alpha", "0.7853981634",
        )
        assert code == 0
        assert "mutual_info=2.000000000000" in out
        assert "cond_entropy=-1.000000000000" in out

    def test_far_wedge_uncorrelated(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "point", "--family", "quantum-single", "--region", "bob-ii",
            "--gamma", "0", "--qr", "1", "--alpha", "0.7853981634",
        )
        assert code == 0
        assert "mutual_info=0.000000000000" in out

    def test_werner_fidelity_domain_error(self, capsys):
        code, _, err = run_cli(
            capsys,
            "point", "--family", "werner", "--region", "bob-i",
            "--gamma", "0", "--qr", "1", "--f", "1.5",
        )
        assert code == 3
        assert "f" in err

    def test_gamma_degrees(self, capsys):
        _, radians_out, _ = run_cli(
            capsys,
            "point", "--family", "quantum-single", "--region", "bob-i",
            "--gamma", str(math.pi / 4), "--qr", "1",
        )
        _, degrees_out, _ = run_cli(
            capsys,
            "point", "--family", "quantum-single", "--region", "bob-i",
            "--gamma-degrees", "45", "--qr", "1",
        )
        assert degrees_out == radians_out

    def test_acceleration_triple(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "point", "--family", "quantum-single", "--region", "bob-i",
            "--acceleration", "1", "1e12", "1", "--qr", "1",
        )
        assert code == 0
        assert "gamma=0.785398163" in out

    def test_unknown_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(
                ["point", "--family", "bosonic", "--region", "bob-i",
                 "--gamma", "0", "--qr", "1"]
            )
        assert exc.value.code == 2

    def test_gamma_required(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(
                ["point", "--family", "quantum-single", "--region", "bob-i", "--qr", "1"]
            )
        assert exc.value.code == 2

    def test_out_of_range_gamma_names_parameter(self, capsys):
        code, _, err = run_cli(
            capsys,
            "point", "--family", "quantum-single", "--region", "bob-i",
            "--gamma", "2.0", "--qr", "1",
        )
        assert code == 3
        assert "gamma" in err


class TestFigure:
    def test_fig4_file_layout(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "figure", "fig4", "--out-dir", str(tmp_path), "--threads", "2"
        )
        assert code == 0
        files = sorted(p.name for p in tmp_path.iterdir())
        assert len(files) == 16
        assert "fig4_werner_bob-i_qr0.25_f0.33.csv" in files
        sample = (tmp_path / files[0]).read_text().splitlines()
        assert sample[0].startswith("family,region,gamma")
        assert len(sample) == 102  # header plus one row per gamma point

    def test_rerun_is_byte_identical(self, capsys, tmp_path):
        run_cli(capsys, "figure", "fig4", "--out-dir", str(tmp_path / "a"), "--threads", "1")
        run_cli(capsys, "figure", "fig4", "--out-dir", str(tmp_path / "b"), "--threads", "2")
        for path in sorted((tmp_path / "a").iterdir()):
            twin = tmp_path / "b" / path.name
            assert path.read_bytes() == twin.read_bytes()

    def test_plot_format(self, capsys, tmp_path):
        code, _, _ = run_cli(
            capsys, "figure", "fig4", "--out-dir", str(tmp_path),
            "--format", "plot", "--precision", "8", "--threads", "2",
        )
        assert code == 0
        files = list(tmp_path.glob("*.dat"))
        assert len(files) == 16
        first_line = files[0].read_text().splitlines()[0]
        gamma, value = first_line.split(" ")
        assert len(gamma.split(".")[1]) == 8

    def test_unwritable_out_dir_is_io_error(self, capsys, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        code, _, err = run_cli(
            capsys, "figure", "fig4", "--out-dir", str(blocker), "--threads", "2"
        )
        assert code == 4
        assert "i/o error" in err


class TestVerify:
    def test_exit_zero_when_all_pass(self, capsys, monkeypatch):
        results = [
            CheckResult("1-something", True, "fine"),
            CheckResult("note", True, "informational", informational=True),
        ]
        monkeypatch.setattr(cli, "run_checks", lambda **kwargs: results)
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        assert "PASS 1-something: fine" in out
        assert "NOTE note: informational" in out
        assert "1 of 1 checks passed" in out

    def test_exit_one_on_failure(self, capsys, monkeypatch):
        results = [CheckResult("1-something", False, "broken")]
        monkeypatch.setattr(cli, "run_checks", lambda **kwargs: results)
        code, out, _ = run_cli(capsys, "verify")
        assert code == 1
        assert "FAIL 1-something: broken" in out

    def test_quick_flag_forwarded(self, capsys, monkeypatch):
        seen = {}

        def fake_run_checks(**kwargs):
            seen.update(kwargs)
            return [CheckResult("x", True, "ok")]

        monkeypatch.setattr(cli, "run_checks", fake_run_checks)
        run_cli(capsys, "verify", "--quick")
        assert seen["include_determinism"] is False
