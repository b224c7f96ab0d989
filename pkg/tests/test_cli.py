"""CLI behavior: commands, exit codes, determinism, serialization."""

import json

import pytest

from noiselogic import read_trace, generate_reference_system, synthesize, universe
from noiselogic.cli import main


@pytest.fixture(autouse=True)
def _no_seed_env(monkeypatch):
    monkeypatch.delenv("NOISELOGIC_SEED", raising=False)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRefs:
    def test_writes_highs_and_low(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "refs", "--m", 4, "--t", 128, "--seed", 7, "--out", tmp_path
        )
        assert code == 0
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == [
            "ref_high_01.csv",
            "ref_high_02.csv",
            "ref_high_03.csv",
            "ref_high_04.csv",
            "ref_low.csv",
        ]
        for name in names:
            trace = read_trace(tmp_path / name)
            assert trace.t == 128
        assert set(read_trace(tmp_path / "ref_low.csv").samples) == {1}

    def test_files_match_library(self, tmp_path, capsys):
        run(capsys, "refs", "--m", 2, "--t", 64, "--seed", 9, "--out", tmp_path)
        sys = generate_reference_system(2, 64, seed=9)
        assert read_trace(tmp_path / "ref_high_01.csv") == sys.high(1)
        assert read_trace(tmp_path / "ref_high_02.csv") == sys.high(2)

    def test_rejects_m_zero(self, tmp_path, capsys):
        code, _, err = run(capsys, "refs", "--m", 0, "--out", tmp_path)
        assert code == 2
        assert "error" in err

    def test_rejects_m_over_limit(self, tmp_path, capsys):
        code, _, _ = run(capsys, "refs", "--m", 63, "--out", tmp_path)
        assert code == 2


class TestSynth:
    def test_single_vector(self, tmp_path, capsys):
        code, _, _ = run(capsys, "synth", "1100", "--seed", 7, "--out", tmp_path)
        assert code == 0
        sys = generate_reference_system(4, 128, seed=7)
        assert read_trace(tmp_path / "synth_1100.csv") == synthesize(sys, "1100")

    def test_superpose_flag(self, tmp_path, capsys):
        code, _, _ = run(
            capsys,
            "synth", "1100", "1010", "1000", "--superpose", "--seed", 7,
            "--out", tmp_path,
        )
        assert code == 0
        total = read_trace(tmp_path / "superposition.csv")
        parts = [
            read_trace(tmp_path / f"synth_{s}.csv") for s in ("1100", "1010", "1000")
        ]
        assert total == parts[0] + parts[1] + parts[2]

    def test_vacuum_string(self, tmp_path, capsys):
        code, _, _ = run(capsys, "synth", "0000", "--out", tmp_path)
        assert code == 0
        assert set(read_trace(tmp_path / "synth_0000.csv").samples) == {1}

    def test_width_conflict(self, tmp_path, capsys):
        code, _, _ = run(capsys, "synth", "1100", "101", "--out", tmp_path)
        assert code == 2

    def test_decimal_needs_width(self, tmp_path, capsys):
        code, _, _ = run(capsys, "synth", "12", "--out", tmp_path)
        assert code == 2
        code, _, _ = run(capsys, "synth", "12", "--m", 4, "--out", tmp_path)
        assert code == 0
        assert (tmp_path / "synth_1100.csv").exists()


class TestUniverse:
    def test_trace_and_stats(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "universe", "--m", 4, "--seed", 7, "--out", tmp_path
        )
        assert code == 0
        sys = generate_reference_system(4, 128, seed=7)
        assert read_trace(tmp_path / "universe.csv") == universe(sys)
        stats = json.loads((tmp_path / "universe_stats.json").read_text())
        assert set(stats["amplitudes"]) <= {0, 16}
        assert stats["expected_fraction"] == 0.0625
        assert json.loads(out.splitlines()[-1]) == stats

    def test_m1_amplitudes(self, tmp_path, capsys):
        code, out, _ = run(capsys, "universe", "--m", 1, "--out", tmp_path)
        assert code == 0
        stats = json.loads(out.splitlines()[-1])
        assert set(stats["amplitudes"]) <= {0, 2}


class TestGate:
    def test_not_worked_example(self, tmp_path, capsys):
        code, out, _ = run(
            capsys,
            "gate", "not", "--targets", "1,3", "--input", "1100",
            "--seed", 7, "--out", tmp_path,
        )
        assert code == 0
        assert "engine: 1*[0110]" in out
        assert "oracle: 1*[0110]" in out

    def test_pairwise_xor_and_xnor(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "gate", "xor", "--a", "1100", "--b", "1010",
            "--seed", 7, "--out", tmp_path,
        )
        assert code == 0 and "engine: 1*[0110]" in out
        code, out, _ = run(
            capsys, "gate", "xnor", "--a", "1100", "--b", "1010",
            "--seed", 7, "--out", tmp_path,
        )
        assert code == 0 and "engine: 1*[1001]" in out

    def test_xor_with_superposition_operand(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "gate", "xor", "--a", "1100", "--b", "1010+1000",
            "--seed", 7, "--out", tmp_path,
        )
        assert code == 0
        assert "engine: 1*[0100] + 1*[0110]" in out
        assert "oracle: 1*[0100] + 1*[0110]" in out

    def test_xnor_with_superposition_operand(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "gate", "xnor", "--a", "1100", "--b", "1010+1000",
            "--seed", 7, "--out", tmp_path,
        )
        assert code == 0
        assert "engine: 1*[1001] + 1*[1011]" in out

    def test_targeted_xor(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "gate", "xor", "--a", "1100", "--target", 3, "--value", 1,
            "--seed", 7, "--out", tmp_path,
        )
        assert code == 0
        assert "engine: 1*[1110]" in out

    def test_multiplicity_syntax(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "gate", "xor", "--a", "1100", "--b", "2*1010+1000",
            "--seed", 7, "--out", tmp_path,
        )
        assert code == 0
        assert "engine: 1*[0100] + 2*[0110]" in out

    def test_output_trace_written(self, tmp_path, capsys):
        run(
            capsys, "gate", "xor", "--a", "1100", "--b", "1010",
            "--seed", 7, "--out", tmp_path,
        )
        trace = read_trace(tmp_path / "gate_xor.csv")
        sys = generate_reference_system(4, 128, seed=7)
        assert trace == synthesize(sys, "0110")

    def test_not_requires_targets(self, tmp_path, capsys):
        code, _, _ = run(capsys, "gate", "not", "--input", "1100", "--out", tmp_path)
        assert code == 2

    def test_missing_operand(self, tmp_path, capsys):
        code, _, _ = run(capsys, "gate", "xor", "--a", "1100", "--out", tmp_path)
        assert code == 2


class TestCompare:
    def test_identical(self, tmp_path, capsys):
        run(capsys, "synth", "1100", "--seed", 7, "--out", tmp_path)
        path = tmp_path / "synth_1100.csv"
        code, out, _ = run(capsys, "compare", path, path)
        assert code == 0
        assert "identical" in out

    def test_oracle_realization_matches_gate_output(self, tmp_path, capsys):
        # engine xor output vs the two-term superposition built by synth
        run(
            capsys, "gate", "xor", "--a", "1100", "--b", "1010+1000",
            "--seed", 7, "--out", tmp_path,
        )
        run(
            capsys, "synth", "0110", "0100", "--superpose", "--seed", 7,
            "--out", tmp_path,
        )
        code, out, _ = run(
            capsys, "compare", tmp_path / "gate_xor.csv", tmp_path / "superposition.csv"
        )
        assert code == 0

    def test_divergent_traces(self, tmp_path, capsys):
        run(capsys, "synth", "1100", "1010", "--seed", 7, "--out", tmp_path)
        code, out, _ = run(
            capsys, "compare", tmp_path / "synth_1100.csv", tmp_path / "synth_1010.csv"
        )
        assert code == 3
        assert "first divergence at clock" in out

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(capsys, "compare", tmp_path / "nope.csv", tmp_path / "nope.csv")
        assert code == 4

    def test_parse_failure(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("not,a,trace\n")
        code, _, _ = run(capsys, "compare", bad, bad)
        assert code == 4


class TestSeedHandling:
    def test_env_override(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("NOISELOGIC_SEED", "99")
        run(capsys, "synth", "1100", "--out", tmp_path / "env")
        run(capsys, "synth", "1100", "--seed", 99, "--out", tmp_path / "flag")
        assert (tmp_path / "env/synth_1100.csv").read_bytes() == (
            tmp_path / "flag/synth_1100.csv"
        ).read_bytes()

    def test_flag_beats_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("NOISELOGIC_SEED", "99")
        run(capsys, "synth", "1100", "--seed", 7, "--out", tmp_path / "a")
        run(capsys, "synth", "1100", "--seed", 7, "--out", tmp_path / "b")
        monkeypatch.delenv("NOISELOGIC_SEED")
        run(capsys, "synth", "1100", "--seed", 7, "--out", tmp_path / "c")
        data = [(tmp_path / d / "synth_1100.csv").read_bytes() for d in "abc"]
        assert data[0] == data[1] == data[2]

    def test_bad_env_value(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("NOISELOGIC_SEED", "pi")
        code, _, _ = run(capsys, "synth", "1100", "--out", tmp_path)
        assert code == 2


class TestDeterminismAndFormats:
    def test_json_format_round_trip(self, tmp_path, capsys):
        run(
            capsys, "synth", "1100", "--format", "json", "--seed", 7,
            "--out", tmp_path,
        )
        trace = read_trace(tmp_path / "synth_1100.json")
        sys = generate_reference_system(4, 128, seed=7)
        assert trace == synthesize(sys, "1100")
        assert trace.label == "1100"

    def test_repeat_runs_byte_identical(self, tmp_path, capsys):
        for d in ("one", "two"):
            run(
                capsys, "gate", "xnor", "--a", "1100", "--b", "1010+1000",
                "--seed", 7, "--out", tmp_path / d,
            )
        a = (tmp_path / "one/gate_xnor.csv").read_bytes()
        b = (tmp_path / "two/gate_xnor.csv").read_bytes()
        assert a == b
