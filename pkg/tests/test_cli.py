import subprocess
import sys

import pytest

from apfree import ThetaTable, save_table
from apfree.table import PROVENANCE_INGESTED
from conftest import FIXTURE_BFILE, REPO_ROOT, run_cli

CHECKER = REPO_ROOT / "scripts" / "check_certificate.py"


def run_checker(cert_path):
    proc = subprocess.run([sys.executable, str(CHECKER), str(cert_path)],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout


class TestCount:
    def test_prints_the_count(self):
        code, out, _ = run_cli(["count", "6"])
        assert (code, out) == (0, "48\n")

    def test_oracle_flag_agrees(self):
        for n in ("4", "7", "9"):
            assert run_cli(["count", n, "--oracle"]) == run_cli(["count", n])

    def test_oracle_ceiling_is_enforced(self):
        code, _, err = run_cli(["count", "11", "--oracle"])
        assert code == 2
        assert "oracle ceiling" in err

    def test_split_depth_variants(self):
        for depth in ("0", "1", "4"):
            code, out, _ = run_cli(["count", "8", "--split-depth", depth])
            assert (code, out) == (0, "282\n")

    def test_jobs_variants(self):
        baseline = run_cli(["count", "9"])
        for jobs in ("2", "4"):
            assert run_cli(["count", "9", "--jobs", jobs]) == baseline

    def test_cache_write_and_reuse(self, tmp_path):
        cache = str(tmp_path / "cache.txt")
        code, out, _ = run_cli(["count", "12", "--cache", cache])
        assert (code, out) == (0, "6128\n")
        # Second run recomputes and passes the consistency guard.
        code, out, _ = run_cli(["count", "12", "--cache", cache])
        assert (code, out) == (0, "6128\n")

    def test_mismatch_against_cache_fails(self, tmp_path):
        cache = tmp_path / "cache.txt"
        tbl = ThetaTable(include_builtins=False)
        tbl.insert(8, 283, PROVENANCE_INGESTED)  # wrong on purpose
        save_table(tbl, cache)
        code, _, err = run_cli(["count", "8", "--cache", str(cache)])
        assert code == 1
        assert "282" in err and "283" in err

    def test_node_budget(self):
        code, _, err = run_cli(["count", "10", "--node-budget", "10"])
        assert code == 2
        assert "budget" in err


class TestCheck:
    def test_progression_found(self):
        code, out, _ = run_cli(["check", "1,2,3"])
        assert code == 1
        assert out == "3AP at (1,2,3): 1 2 3\n"

    def test_free(self):
        code, out, _ = run_cli(["check", "1,3,2"])
        assert (code, out) == (0, "FREE\n")

    def test_longer_witness(self):
        code, out, _ = run_cli(["check", "2,4,1,3,5"])
        assert code == 1
        assert out.startswith("3AP at (")

    def test_invalid_permutation(self):
        code, _, err = run_cli(["check", "1,1,2"])
        assert code == 2 and "error" in err

    def test_spaces_rejected(self):
        code, _, _ = run_cli(["check", "1, 2"])
        assert code == 2


class TestDouble:
    def test_even_first(self):
        assert run_cli(["double", "2,1", "1,2"])[:2] == (0, "4,2,1,3\n")

    def test_odd_first(self):
        code, out, _ = run_cli(["double", "2,1", "1,2", "--order", "odd-first"])
        assert (code, out) == (0, "1,3,4,2\n")

    def test_odd_variant(self):
        code, out, _ = run_cli(["double", "1", "2,1", "--odd"])
        assert (code, out) == (0, "2,3,1\n")

    def test_input_with_3ap_rejected(self):
        code, _, err = run_cli(["double", "1,2,3", "1,3,2"])
        assert code == 2 and "3AP" in err

    def test_length_mismatch(self):
        code, _, _ = run_cli(["double", "1", "1,2"])
        assert code == 2


class TestVerify:
    def test_builtin_sweep_passes(self):
        code, out, _ = run_cli(["verify", "--max", "11"])
        assert code == 0
        assert "summary: 28 passed, 0 failed, 3 skipped" in out
        assert "sandwich k=5: PASS  800 <= 1066 <= 8400" in out

    def test_skips_are_reported_not_failed(self):
        code, out, _ = run_cli(["verify"])  # default max includes 64 and 75
        assert code == 0
        assert "sandwich k=32: SKIP" in out
        assert "failed" in out.splitlines()[-1]

    def test_violation_fails(self, tmp_path):
        cache = tmp_path / "cache.txt"
        tbl = ThetaTable()
        # Inside the universal bounds for n=12 but above the doubling
        # sandwich, so exactly one check trips.
        tbl.insert(12, 1000000, PROVENANCE_INGESTED)
        save_table(tbl, cache)
        code, out, _ = run_cli(["verify", "--cache", str(cache), "--max", "12"])
        assert code == 1
        assert "sandwich k=6: FAIL" in out

    def test_informational_monotonicity_note(self):
        _, out, _ = run_cli(["verify", "--max", "11"])
        assert "nondecreasing" in out and "informational" in out


class TestSeparate:
    def test_default_certificate(self):
        code, out, _ = run_cli(["separate"])
        assert code == 0
        assert "separated: true" in out
        assert "lower_decimal: 2.27953231299" in out
        assert "upper_decimal: 2.27703523933" in out

    def test_out_file(self, tmp_path):
        out_path = tmp_path / "cert.txt"
        code, out, _ = run_cli(["separate", "--out", str(out_path)])
        assert code == 0
        assert out_path.read_text() == out

    def test_non_separating_instance_exits_one(self):
        code, out, _ = run_cli(["separate", "--low", "1,0", "--high", "1,0"])
        assert code == 1
        assert "separated: false" in out

    def test_missing_data_is_usage_error(self):
        code, _, err = run_cli(["separate", "--low", "1,7", "--high", "81,1"])
        assert code == 2 and "n=128" in err

    def test_malformed_mt(self):
        code, _, _ = run_cli(["separate", "--low", "1;6"])
        assert code == 2

    def test_standalone_checker_accepts_default_certificate(self, tmp_path):
        cert = tmp_path / "cert.txt"
        assert run_cli(["separate", "--out", str(cert)])[0] == 0
        code, out = run_checker(cert)
        assert code == 0
        assert out.startswith("SOUND") and "separated" in out

    def test_standalone_checker_rejects_tampering(self, tmp_path):
        cert = tmp_path / "cert.txt"
        run_cli(["separate", "--out", str(cert)])
        text = cert.read_text().replace("theta_high: 3023", "theta_high: 3024")
        cert.write_text(text)
        code, out = run_checker(cert)
        assert code == 2
        assert out.startswith("UNSOUND")

    def test_standalone_checker_flags_non_separation(self, tmp_path):
        cert = tmp_path / "cert.txt"
        run_cli(["separate", "--low", "1,0", "--high", "1,0",
                 "--out", str(cert)])
        code, out = run_checker(cert)
        assert code == 1
        assert "does not separate" in out


class TestAnalyze:
    def test_default_m(self):
        code, out, _ = run_cli(["analyze"])
        assert code == 0
        assert "point m=1 t=6 n=64" in out
        assert "2.27953231299" in out
        assert "reference (2*theta(10))^(1/10) = 2.152181" in out

    def test_with_ingested_fixture(self):
        code, out, _ = run_cli(["analyze", "--m", "1", "--bfile", str(FIXTURE_BFILE)])
        assert code == 0
        assert "point m=1 t=4 n=16" in out
        assert "reference (2*theta(16))^(1/16) = 2.248037" in out

    def test_no_points_is_an_error(self):
        code, _, _ = run_cli(["analyze", "--m", "13"])  # 13*2^t never present
        assert code == 2


class TestEmitFigure:
    def test_stdout_rows(self):
        code, out, _ = run_cli(["emit-figure", "--max", "3"])
        assert code == 0
        assert out == "1 1.000000\n2 1.414214\n3 1.587401\n"

    def test_out_file(self, tmp_path):
        path = tmp_path / "roots.dat"
        code, _, _ = run_cli(["emit-figure", "--max", "11", "--out", str(path)])
        assert code == 0
        assert len(path.read_text().splitlines()) == 11

    def test_gap_is_usage_error(self):
        code, _, err = run_cli(["emit-figure", "--max", "12"])
        assert code == 2 and "n=12" in err

    def test_fixture_extends_range(self):
        code, out, _ = run_cli(["emit-figure", "--max", "16",
                                "--bfile", str(FIXTURE_BFILE)])
        assert code == 0
        assert len(out.splitlines()) == 16


class TestIngest:
    def test_ingest_fixture(self, tmp_path):
        cache = str(tmp_path / "cache.txt")
        code, out, _ = run_cli(["ingest", str(FIXTURE_BFILE), "--cache", cache])
        assert code == 0
        assert "ingested 5 new entries, 13 matched existing, 1 skipped" in out
        code, out, _ = run_cli(["verify", "--cache", cache, "--max", "16"])
        assert code == 0
        assert "sandwich k=8: PASS" in out

    def test_conflict_exits_one(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("4 11\n")
        code, _, err = run_cli(["ingest", str(bad)])
        assert code == 1 and "disagrees" in err

    def test_missing_file_is_usage_error(self):
        code, _, _ = run_cli(["ingest", "no-such-file.txt"])
        assert code == 2

    def test_malformed_file_is_usage_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 2 3\n")
        code, _, err = run_cli(["ingest", str(bad)])
        assert code == 2 and "line 1" in err


class TestHarness:
    def test_unknown_flag_is_usage_error(self):
        code, _, _ = run_cli(["count", "6", "--sideways"])
        assert code == 2

    def test_missing_subcommand_is_usage_error(self):
        code, _, _ = run_cli([])
        assert code == 2

    @pytest.mark.parametrize("argv", [
        ["verify", "--max", "11"],
        ["separate"],
        ["analyze", "--m", "3"],
        ["emit-figure", "--max", "5"],
    ])
    def test_output_is_deterministic(self, argv):
        assert run_cli(argv) == run_cli(argv)

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "apfree", "count", "6"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "48\n"
