# ============================================================================
# Command-Line Tests
# ============================================================================
import json

import pytest
from click.testing import CliRunner

from app.main import cli
from app.schemas import SystemFile
from app.services.perturbation import random_rationals


@pytest.fixture
def runner():
    return CliRunner()


def _write(path, document: dict) -> str:
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def _system_file(d1, tmp_path, **overrides) -> str:
    document = json.loads(SystemFile.from_system(d1).model_dump_json())
    document.update(overrides)
    return _write(tmp_path / "system.json", document)


class TestBuild:
    """Tests for the build command"""

    def test_seed_to_stdout(self, runner):
        """Test the d=1 seed prints its bidiagonal system"""
        result = runner.invoke(cli, ["build", "--seed", "d1"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["A"]["entries"] == [["1/2", "0"], ["1", "2"]]
        assert document["A_star"]["entries"] == [["2", "1"], ["0", "1/2"]]

    def test_parameter_array_file(self, runner, tmp_path):
        """Test building from a parameter-array file"""
        pa = _write(tmp_path / "pa.json", {
            "q": "2", "d": 1, "theta": ["1/2", "2"], "theta_star": ["2", "1/2"], "zeta": ["1", "5"],
        })
        out = tmp_path / "sys.json"
        result = runner.invoke(cli, ["build", "--pa", pa, "-o", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["A_star"]["entries"][0] == ["2", "5"]

    def test_rejected_candidate(self, runner, tmp_path):
        """Test a thin candidate at a bad ladder value exits 2"""
        pa = _write(tmp_path / "pa.json", {
            "q": "2", "d": 2, "theta": ["1/4", "1", "4"], "theta_star": ["4", "1", "1/4"],
            "zeta": ["1", "45/4", "2025/16"],
        })
        result = runner.invoke(cli, ["build", "--pa", pa])
        assert result.exit_code == 2
        assert "not a tridiagonal system" in result.stderr

    def test_zero_ladder_value(self, runner, tmp_path):
        """Test ζ₁ = 0 cannot be built and exits 1"""
        pa = _write(tmp_path / "pa.json", {
            "q": "2", "d": 1, "theta": ["1/2", "2"], "theta_star": ["2", "1/2"], "zeta": ["1", "0"],
        })
        result = runner.invoke(cli, ["build", "--pa", pa, "--json"])
        assert result.exit_code == 1
        assert json.loads(result.stdout)["error_code"] == "THIN_CONSTRUCTION"
        assert "requires ζᵢ ≠ 0" in result.stderr

    def test_needs_one_source(self, runner):
        """Test usage errors exit 1"""
        result = runner.invoke(cli, ["build"])
        assert result.exit_code == 1


class TestVerify:
    """Tests for the verify command"""

    def test_summary(self, runner, d1, tmp_path):
        """Test the first summary line for the d=1 system file"""
        result = runner.invoke(cli, ["verify", "--system", _system_file(d1, tmp_path)])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "TD system: yes; sharp: yes; q-Serre: yes; ζ = (1, 1)"

    def test_json(self, runner):
        """Test the d=2 report with ladder bookkeeping"""
        result = runner.invoke(cli, ["verify", "--seed", "d2", "--json"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["report"]["is_td_system"] is True
        assert document["zeta"] == ["1", "1", "1"]
        assert document["ladder_zeta"] == document["zeta"]
        assert document["split_ok"] is True

    def test_reducible(self, runner, d1, tmp_path):
        """Test A* = A fails irreducibility and exits 2"""
        path = _system_file(
            d1, tmp_path, A_star={"rows": 2, "cols": 2, "entries": [["1/2", "0"], ["1", "2"]]},
            theta_star=["1/2", "2"],
        )
        result = runner.invoke(cli, ["verify", "--system", path])
        assert result.exit_code == 2
        assert result.stdout.startswith("TD system: NO (irreducibility)")

    def test_float_entry(self, runner, d1, tmp_path):
        """Test float entries are a schema error"""
        path = _system_file(d1, tmp_path, theta=[0.5, "2"])
        result = runner.invoke(cli, ["verify", "--system", path])
        assert result.exit_code == 1
        assert "error:" in result.stderr

    def test_degenerate(self, runner, tmp_path):
        """Test a d = 0 file passes every vacuous check"""
        path = _write(tmp_path / "point.json", {
            "q": "2", "d": 0, "A": {"rows": 1, "cols": 1, "entries": [["1"]]},
            "A_star": {"rows": 1, "cols": 1, "entries": [["1"]]}, "theta": ["1"], "theta_star": ["1"],
        })
        result = runner.invoke(cli, ["verify", "--system", path])
        assert result.exit_code == 0
        assert result.stdout.startswith("TD system: yes; sharp: yes")

    def test_both_sources(self, runner, d1, tmp_path):
        result = runner.invoke(cli, ["verify", "--seed", "d1", "--system", _system_file(d1, tmp_path)])
        assert result.exit_code == 1


class TestPerturb:
    """Tests for the perturb command"""

    def test_bad_t(self, runner):
        """Test the lemmas hold and B* at t = 9/4"""
        result = runner.invoke(cli, ["perturb", "--seed", "d1", "--t", "9/4", "--json"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert all(document["lemmas"].values())
        assert document["K"]["entries"] == [["2", "0"], ["0", "1/2"]]
        assert document["system"]["A_star"]["entries"] == [["2", "9/4"], ["0", "1/2"]]
        assert document["zeta_prime"] == ["1", "9/4"]

    def test_unnormalized(self, runner, d1, tmp_path):
        """Test rescaled input exits 2 unless --normalize is given"""
        path = _system_file(d1.rescaled(3, "1/5"), tmp_path)
        result = runner.invoke(cli, ["perturb", "--system", path, "--t", "2", "--json"])
        assert result.exit_code == 2
        assert json.loads(result.stdout)["error_code"] == "NON_GEOMETRIC_SPECTRUM"

        result = runner.invoke(cli, ["perturb", "--system", path, "--t", "2", "--normalize"])
        assert result.exit_code == 0
        assert "lemmas all hold" in result.stdout


class TestScan:
    """Tests for the scan command"""

    def test_d1_auto_bad(self, runner):
        """Test rows are ordered by t and the bad row carries its witness"""
        result = runner.invoke(cli, ["scan", "--seed", "d1", "--t", "1,2", "--auto-bad", "--json"])
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert [row["t"] for row in rows] == ["0", "1", "2", "9/4"]
        bad = rows[-1]
        assert bad["predicted"] is False and bad["actual"] is False
        assert bad["failing_axiom"] == "irreducibility"
        assert bad["witness"]["entries"] == [["1"], ["-2/3"]]

    def test_d2_range_and_random(self, runner):
        """Test every row of a mixed d=2 scan agrees"""
        result = runner.invoke(
            cli, ["scan", "--seed", "d2", "--t-range", "-1:1:1/2", "--random", "--random-count", "5", "--auto-bad", "--json"]
        )
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert all(row["predicted"] == row["actual"] for row in rows)
        assert {"45/16", "45/4"} <= {row["t"] for row in rows}

    def test_random_uses_settings(self, runner, monkeypatch):
        """Test a bare --random appends RANDOM_T_COUNT seeded values"""
        monkeypatch.setenv("RANDOM_T_COUNT", "3")
        result = runner.invoke(cli, ["scan", "--seed", "d1", "--random", "--json"])
        assert result.exit_code == 0
        expected = sorted(set(random_rationals(3, 1729)))
        assert [row["t"] for row in json.loads(result.stdout)] == [str(t) for t in expected]

    @pytest.mark.parametrize("seed, ts", [
        ("d1", ["0", "1", "9/4", "3"]),
        ("d1-phi5", ["0", "9/20", "1", "3"]),
        ("d2", ["0", "1", "45/16", "3", "45/4"]),
    ])
    def test_reproducible_pipeline(self, runner, tmp_path, seed, ts):
        """Test build, verify and scan through files give identical output on a second run"""
        outputs = []
        for run in range(2):
            path = str(tmp_path / f"{seed}-{run}.json")
            built = runner.invoke(cli, ["build", "--seed", seed, "-o", path])
            assert built.exit_code == 0
            verified = runner.invoke(cli, ["verify", "--system", path, "--json"])
            assert verified.exit_code == 0
            scanned = runner.invoke(cli, ["scan", "--system", path, "--t", "1,3", "--auto-bad", "--json"])
            assert scanned.exit_code == 0
            outputs.append(((tmp_path / f"{seed}-{run}.json").read_bytes(), verified.stdout, scanned.stdout))
        assert outputs[0] == outputs[1]
        assert [row["t"] for row in json.loads(outputs[0][2])] == ts

    def test_table(self, runner):
        result = runner.invoke(cli, ["scan", "--seed", "d1", "--t", "9/4"])
        assert result.exit_code == 0
        assert "irreducibility" in result.stdout

    def test_bad_t_value(self, runner):
        """Test an unparsable t exits 1"""
        result = runner.invoke(cli, ["scan", "--seed", "d1", "--t", "x"])
        assert result.exit_code == 1

    def test_no_points(self, runner):
        result = runner.invoke(cli, ["scan", "--seed", "d1"])
        assert result.exit_code == 1


class TestIso:
    """Tests for the iso command"""

    def test_same_seed(self, runner):
        result = runner.invoke(cli, ["iso", "d1", "d1"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "isomorphic"

    def test_different_zeta(self, runner):
        """Test the first differing ζ is reported"""
        result = runner.invoke(cli, ["iso", "d1", "d1-phi5"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "not isomorphic: ζ differs at i = 1"

    def test_unknown_source(self, runner):
        result = runner.invoke(cli, ["iso", "d1", "nowhere.json"])
        assert result.exit_code == 1


class TestDrinfeld:
    """Tests for the drinfeld command"""

    def test_d2(self, runner):
        """Test the d=2 polynomial and its two rational bad t"""
        result = runner.invoke(cli, ["drinfeld", "--seed", "d2", "--json"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["polynomial"]["coeffs"] == ["1", "-1", "4/25"]
        assert document["bad_t"] == ["45/16", "45/4"]
        assert document["ycond_ok"] is True
        assert document["ccond_left"] == document["ccond_right"]

    def test_d1_text(self, runner):
        result = runner.invoke(cli, ["drinfeld", "--seed", "d1"])
        assert result.exit_code == 0
        assert "rational bad t: (9/4)" in result.stdout
