import json

import pytest

from netsig.cli import main
from netsig.fixtures import fixture_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def load_artifact(stdout):
    return json.loads(stdout)


def strip_duration(artifact):
    artifact = json.loads(json.dumps(artifact))
    artifact["manifest"]["duration_seconds"] = 0.0
    return artifact


class TestNstar:
    def test_table_rows(self, capsys):
        code, out, _ = run_cli(capsys, "nstar", "12")
        assert code == 0
        assert "2 | 3" in out
        assert "120 | 541" in out
        assert "479,001,600 | 28,091,567,595" in out

    def test_usage_error_below_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["nstar", "1"])
        assert err.value.code == 2


class TestExact:
    def test_series_artifact(self, capsys):
        code, out, _ = run_cli(capsys, "exact", str(fixture_path("series2")))
        assert code == 0
        artifact = load_artifact(out)
        assert artifact["n"] == 2
        assert artifact["values"] == [1.0, 0.0]
        assert artifact["counts"] == ["3", "0"]
        assert artifact["total"] == "3"
        assert artifact["manifest"]["command"] == "exact"

    def test_counts_round_trip_exactly(self, capsys):
        _, out, _ = run_cli(capsys, "exact", str(fixture_path("bridge")))
        artifact = load_artifact(out)
        assert sum(int(c) for c in artifact["counts"]) == int(artifact["total"])

    def test_cap_refusal_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, "exact", str(fixture_path("bridge")), "--max-n", "3"
        )
        assert code == 4
        assert "sampling" in err

    def test_bad_graph_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.graph"
        bad.write_text("terminals s t\nedge s s\n")
        code, _, err = run_cli(capsys, "exact", str(bad))
        assert code == 3
        assert "self-loop" in err

    def test_missing_file_exit_code(self, capsys):
        code, _, _ = run_cli(capsys, "exact", "/nonexistent.graph")
        assert code == 3

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "exact", str(fixture_path("series2")), "--output", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "i,count,value"
        assert lines[1] == "1,3,1.0"


class TestApprox:
    def test_single_sample_unit_vector(self, capsys):
        code, out, _ = run_cli(
            capsys, "approx", str(fixture_path("bridge")), "--samples", "1"
        )
        assert code == 0
        artifact = load_artifact(out)
        assert sorted(artifact["values"], reverse=True)[0] == 1.0
        assert artifact["std_error"] == [0.0] * 5

    def test_scientific_notation_samples(self, capsys):
        code, out, _ = run_cli(
            capsys, "approx", str(fixture_path("series2")), "--samples", "1e2"
        )
        assert code == 0
        assert load_artifact(out)["total"] == "100"

    def test_deterministic_across_workers(self, capsys):
        # the payload is worker-count independent; only the manifest records
        # the differing --workers flag
        args = ["approx", str(fixture_path("bridge")), "--samples", "2000", "--seed", "7"]
        _, out1, _ = run_cli(capsys, *args, "--workers", "1")
        _, out2, _ = run_cli(capsys, *args, "--workers", "4")
        a, b = load_artifact(out1), load_artifact(out2)
        a.pop("manifest")
        b.pop("manifest")
        assert a == b

    def test_rerun_byte_identical_modulo_duration(self, capsys):
        args = ["approx", str(fixture_path("bridge")), "--samples", "500", "--seed", "3"]
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        a, b = strip_duration(load_artifact(out1)), strip_duration(load_artifact(out2))
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


class TestSignature:
    def test_bridge(self, capsys):
        code, out, _ = run_cli(capsys, "signature", str(fixture_path("bridge")))
        assert code == 0
        artifact = load_artifact(out)
        assert artifact["values"] == [0.0, 0.2, 0.6, 0.2, 0.0]
        assert artifact["total"] == "120"

    def test_single_edge(self, capsys):
        _, out, _ = run_cli(capsys, "signature", str(fixture_path("single_edge")))
        assert load_artifact(out)["values"] == [1.0]

    def test_series3(self, capsys):
        _, out, _ = run_cli(capsys, "signature", str(fixture_path("series3")))
        assert load_artifact(out)["values"] == [1.0, 0.0, 0.0]


class TestReliability:
    def test_series_poisson_final_point(self, capsys):
        import math

        code, out, _ = run_cli(
            capsys, "reliability", str(fixture_path("series2")),
            "--process", "poisson", "--rate", "1", "--tmax", "1", "--steps", "4",
        )
        assert code == 0
        artifact = load_artifact(out)
        assert artifact["times"][0] == 0.0
        assert artifact["survival"][0] == 1.0
        assert abs(artifact["survival"][-1] - math.exp(-1)) < 1e-12

    def test_parallel_poisson_point(self, capsys):
        import math

        _, out, _ = run_cli(
            capsys, "reliability", str(fixture_path("parallel2")),
            "--rate", "1", "--tmax", "1", "--steps", "10",
        )
        artifact = load_artifact(out)
        assert abs(artifact["survival"][-1] - 2 * math.exp(-1)) < 1e-12

    def test_accepts_signature_artifact(self, tmp_path, capsys):
        _, out, _ = run_cli(capsys, "exact", str(fixture_path("parallel2")))
        artifact_file = tmp_path / "sig.json"
        artifact_file.write_text(out)
        code, out2, _ = run_cli(
            capsys, "reliability", str(artifact_file), "--tmax", "1", "--steps", "2"
        )
        assert code == 0
        assert load_artifact(out2)["survival"][0] == 1.0


class TestArtifactFiles:
    def test_out_flag_writes_file(self, tmp_path, capsys):
        target = tmp_path / "out.json"
        code, out, _ = run_cli(
            capsys, "exact", str(fixture_path("series2")), "--out", str(target)
        )
        assert code == 0
        assert out == ""
        artifact = json.loads(target.read_text())
        assert artifact["values"] == [1.0, 0.0]

    def test_round_trip_recovers_numbers(self, capsys):
        _, out, _ = run_cli(
            capsys, "approx", str(fixture_path("bridge")), "--samples", "1000"
        )
        artifact = load_artifact(out)
        again = json.loads(json.dumps(artifact))
        assert again == artifact
