"""Tests for coset pattern selection and sub-Nyquist sampling."""

from fractions import Fraction

import numpy as np
import pytest

from mcsense import CosetPattern, MultibandSpec, NyquistRecord, generate, random_pattern, sample


def record_from(samples, L):
    samples = np.asarray(samples, dtype=np.complex128)
    spec = MultibandSpec(
        L=L, active_set=(), omega_max=1.0, snr_db=0.0,
        record_snapshots=samples.size // L, noise_variance=1.0,
    )
    return NyquistRecord(samples=samples, spec=spec, seed=None)


class TestRandomPattern:
    def test_draws_sorted_distinct_offsets_in_range(self):
        pat = random_pattern(32, 10, seed=42)
        assert pat.p == 10
        assert len(set(pat.offsets)) == 10
        assert all(0 <= c < 32 for c in pat.offsets)
        assert list(pat.offsets) == sorted(pat.offsets)

    def test_full_set_is_forced(self):
        for seed in range(5):
            assert random_pattern(4, 4, seed=seed).offsets == (0, 1, 2, 3)

    def test_fixed_seed_is_deterministic(self):
        assert random_pattern(32, 10, seed=7) == random_pattern(32, 10, seed=7)

    def test_rejects_p_above_l(self):
        with pytest.raises(ValueError):
            random_pattern(4, 5, seed=0)

    def test_alpha_is_exact_fraction(self):
        assert random_pattern(32, 10, seed=0).alpha == Fraction(10, 32)


class TestPatternValidation:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError, match="increasing"):
            CosetPattern(L=8, offsets=(3, 1))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="increasing"):
            CosetPattern(L=8, offsets=(1, 1))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="lie in"):
            CosetPattern(L=8, offsets=(0, 8))


class TestSample:
    def test_even_coset_of_four_samples(self):
        rec = record_from([1, 2, 3, 4], L=2)
        seqs = sample(rec, CosetPattern(L=2, offsets=(0,)))
        assert np.array_equal(seqs.data, [[1, 3]])

    def test_odd_coset_of_four_samples(self):
        rec = record_from([1, 2, 3, 4], L=2)
        seqs = sample(rec, CosetPattern(L=2, offsets=(1,)))
        assert np.array_equal(seqs.data, [[2, 4]])

    def test_reference_shape_and_rate(self):
        spec = MultibandSpec(
            L=32, active_set=(8, 16), omega_max=0.25, snr_db=1.0, record_snapshots=100,
        )
        rec = generate(spec, 0)
        pat = random_pattern(32, 10, seed=1)
        seqs = sample(rec, pat)
        assert seqs.data.shape == (10, 100)
        retained = seqs.data.size
        assert retained == 1000
        assert Fraction(retained, rec.samples.size) == pat.alpha == Fraction(10, 32)

    def test_is_lossless_restriction(self):
        rng = np.random.default_rng(3)
        samples = rng.normal(size=64) + 1j * rng.normal(size=64)
        rec = record_from(samples, L=8)
        pat = CosetPattern(L=8, offsets=(0, 3, 7))
        seqs = sample(rec, pat)
        for i, c in enumerate(pat.offsets):
            for m in range(8):
                assert seqs.data[i, m] == samples[m * 8 + c]

    def test_rejects_mismatched_l(self):
        rec = record_from([1, 2, 3, 4], L=2)
        with pytest.raises(ValueError, match="match"):
            sample(rec, CosetPattern(L=4, offsets=(0,)))
