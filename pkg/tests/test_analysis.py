"""Decoders and statistics."""

import json

import numpy as np
import pytest

from noiselogic import (
    AmbiguousDecodeError,
    BitString,
    NoMatchError,
    ScaleExceededError,
    SuperpositionDecodeError,
    SymbolicSuperposition,
    Trace,
    agreement_stats,
    apply_not,
    decode_product,
    decode_superposition,
    generate_reference_system,
    low_reference,
    realize,
    superpose,
    synthesize,
    universe,
    universe_stats,
    xor_pair,
)


@pytest.fixture
def sys4():
    return generate_reference_system(4, 128, seed=23)


class TestDecodeProduct:
    def test_round_trip_exhaustive_m6(self):
        sys = generate_reference_system(6, 128, seed=5)
        for n in range(64):
            s = BitString(6, n)
            assert decode_product(sys, synthesize(sys, s)) == s

    def test_constant_one_reads_all_zeros(self, sys4):
        assert decode_product(sys4, low_reference(128)).text == "0000"

    def test_reads_gate_output(self, sys4):
        out = xor_pair(synthesize(sys4, "1100"), synthesize(sys4, "1010"))
        assert decode_product(sys4, out).text == "0110"

    def test_no_match_for_non_binary_trace(self, sys4):
        sup = superpose([synthesize(sys4, "1100"), synthesize(sys4, "1010")])
        with pytest.raises(NoMatchError):
            decode_product(sys4, sup)

    def test_no_match_for_corrupted_product_state(self, sys4):
        samples = synthesize(sys4, "1100").samples.copy()
        samples[17] = -samples[17]
        with pytest.raises(NoMatchError):
            decode_product(sys4, Trace(samples))

    def test_ambiguous_when_window_too_short(self):
        # one clock cannot separate the ~2^(M-1) candidates sharing its sign
        sys = generate_reference_system(3, 1, seed=2)
        with pytest.raises(AmbiguousDecodeError) as info:
            decode_product(sys, low_reference(1))
        assert len(info.value.candidates) >= 2
        assert BitString(3, 0) in info.value.candidates

    def test_scale_cap(self):
        sys = generate_reference_system(21, 4, seed=1)
        with pytest.raises(ScaleExceededError):
            decode_product(sys, sys.low)


class TestDecodeSuperposition:
    def test_worked_inversion_set(self, sys4):
        sup = superpose([synthesize(sys4, s) for s in ("1100", "1010", "1000")])
        out = apply_not(sys4, {1, 3}, sup)
        got = decode_superposition(sys4, out)
        expected = SymbolicSuperposition.from_terms(
            4,
            [
                (BitString.from_text(s).to_term(), 1)
                for s in ("0110", "0000", "0010")
            ],
        )
        assert got == expected

    def test_universe_m3_has_all_terms(self):
        sys = generate_reference_system(3, 4096, seed=9)
        got = decode_superposition(sys, universe(sys))
        assert got == SymbolicSuperposition(3, {m: 1 for m in range(8)})

    def test_zero_trace_is_empty(self, sys4):
        z = Trace(np.zeros(128, dtype=np.int64))
        assert decode_superposition(sys4, z).is_zero

    def test_round_trip_random_combinations(self):
        rng = np.random.default_rng(2024)
        sys = generate_reference_system(8, 1000, seed=77)
        for _ in range(20):
            n_terms = int(rng.integers(1, 9))
            masks = rng.choice(256, size=n_terms, replace=False)
            coeffs = rng.integers(-3, 4, size=n_terms)
            sup = SymbolicSuperposition(
                8, {int(m): int(c) for m, c in zip(masks, coeffs)}
            )
            assert decode_superposition(sys, realize(sys, sup)) == sup

    def test_refuses_near_match(self, sys4):
        # an isolated unit bump correlates below rounding range everywhere
        samples = np.zeros(128, dtype=np.int64)
        samples[3] = 1
        with pytest.raises(SuperpositionDecodeError):
            decode_superposition(sys4, Trace(samples))

    def test_scale_cap(self):
        sys = generate_reference_system(13, 8, seed=1)
        with pytest.raises(ScaleExceededError):
            decode_superposition(sys, sys.low)


class TestAgreement:
    def test_identical_traces(self, sys4):
        a = synthesize(sys4, "1100")
        report = agreement_stats(a, a)
        assert report.rate == 1.0
        assert report.full_agreement

    def test_distinct_states_near_half(self):
        t = 10**5
        sys = generate_reference_system(4, t, seed=42)
        report = agreement_stats(synthesize(sys, "1100"), synthesize(sys, "1010"))
        assert abs(report.rate - 0.5) <= 4 * np.sqrt(0.25 / t)
        assert not report.full_agreement

    def test_error_window_figure(self):
        sys = generate_reference_system(1, 83, seed=3)
        report = agreement_stats(sys.high(1), sys.high(1))
        assert report.t == 83
        assert report.theoretical_full_agreement == pytest.approx(1.03e-25, rel=0.01)

    def test_json_shape(self, sys4):
        d = agreement_stats(sys4.low, sys4.low).as_dict()
        assert set(d) == {"rate", "T", "full_agreement", "theoretical_full_agreement"}
        json.dumps(d)


class TestUniverseStats:
    def test_m4_census(self):
        sys = generate_reference_system(4, 10**5, seed=11)
        stats = universe_stats(sys)
        assert set(stats.amplitudes) <= {0, 16}
        assert stats.expected_fraction == 0.0625
        assert abs(stats.nonzero_fraction - 0.0625) <= 3 * np.sqrt(
            0.0625 * 0.9375 / 10**5
        )

    def test_m1_census(self):
        sys = generate_reference_system(1, 10**4, seed=11)
        stats = universe_stats(sys)
        assert set(stats.amplitudes) <= {0, 2}
        assert stats.nonzero_fraction == pytest.approx(0.5, abs=0.02)

    def test_m6_census(self):
        sys = generate_reference_system(6, 10**5, seed=11)
        stats = universe_stats(sys)
        p = 2**-6
        assert set(stats.amplitudes) <= {0, 64}
        assert abs(stats.nonzero_fraction - p) <= 3 * np.sqrt(p * (1 - p) / 10**5)

    def test_json_shape(self, sys4):
        d = universe_stats(sys4).as_dict()
        assert set(d) == {
            "m",
            "T",
            "amplitudes",
            "nonzero_fraction",
            "expected_fraction",
            "standard_error",
        }
        json.dumps(d)
