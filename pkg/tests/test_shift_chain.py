"""Tests for the fractional-shift chain."""

import numpy as np
import pytest

from mcsense import (
    CosetPattern,
    CosetSequences,
    MultibandSpec,
    fractional_shift,
    generate,
    ideal_filter_mask,
    sample,
    sample_correlation,
    steering_vectors,
)


def seqs_from(rows, L, offsets):
    return CosetSequences(
        data=np.asarray(rows, dtype=np.complex128),
        pattern=CosetPattern(L=L, offsets=offsets),
    )


class TestIdealFilterMask:
    def test_half_band(self):
        assert np.array_equal(ideal_filter_mask(8, 2), [1, 1, 1, 1, 0, 0, 0, 0])

    def test_quarter_band(self):
        assert np.array_equal(ideal_filter_mask(8, 4), [1, 1, 0, 0, 0, 0, 0, 0])

    def test_single_bin_band(self):
        mask = ideal_filter_mask(32, 32)
        assert mask[0] == 1
        assert np.all(mask[1:] == 0)

    def test_rejects_indivisible_length(self):
        with pytest.raises(ValueError, match="multiple"):
            ideal_filter_mask(9, 2)


class TestFractionalShift:
    def test_dc_survives_unchanged(self):
        out = fractional_shift(seqs_from([[1, 1, 1, 1]], L=2, offsets=(0,)))
        assert np.allclose(out.data, [[1, 1, 1, 1]], atol=1e-12)

    def test_zero_offset_row_is_identity_on_channel_zero_content(self):
        spec = MultibandSpec(
            L=8, active_set=(0,), omega_max=0.5, snr_db=0.0,
            record_snapshots=64, noise_variance=0.0,
        )
        rec = generate(spec, 4)
        seqs = sample(rec, CosetPattern(L=8, offsets=(0, 3)))
        out = fractional_shift(seqs)
        assert np.allclose(out.data[0], seqs.data[0], atol=1e-10)

    def test_linearity(self):
        rng = np.random.default_rng(8)
        x = rng.normal(size=(3, 16)) + 1j * rng.normal(size=(3, 16))
        y = rng.normal(size=(3, 16)) + 1j * rng.normal(size=(3, 16))
        a, b = 2.0 - 1j, -0.5 + 3j
        offsets = (1, 4, 6)
        out_sum = fractional_shift(seqs_from(a * x + b * y, 8, offsets))
        out_x = fractional_shift(seqs_from(x, 8, offsets))
        out_y = fractional_shift(seqs_from(y, 8, offsets))
        assert np.allclose(out_sum.data, a * out_x.data + b * out_y.data, atol=1e-10)

    def test_chain_is_energy_preserving_per_row(self):
        # The chain acts as a pure fractional delay on each row, so row
        # energy is conserved (and in particular bounded by L x input).
        rng = np.random.default_rng(12)
        rows = rng.normal(size=(4, 32)) + 1j * rng.normal(size=(4, 32))
        seqs = seqs_from(rows, 8, (0, 2, 5, 7))
        out = fractional_shift(seqs)
        e_in = np.sum(np.abs(rows) ** 2, axis=1)
        e_out = np.sum(np.abs(out.data) ** 2, axis=1)
        assert np.allclose(e_out, e_in, rtol=1e-12)
        assert np.all(e_out <= 8 * e_in + 1e-9)

    def test_noiseless_single_channel_gives_rank_one_correlation(self):
        spec = MultibandSpec(
            L=16, active_set=(5,), omega_max=0.5, snr_db=3.0,
            record_snapshots=128, noise_variance=0.0,
        )
        rec = generate(spec, 6)
        pat = CosetPattern(L=16, offsets=(0, 2, 3, 7, 11))
        est = sample_correlation(fractional_shift(sample(rec, pat)))
        svals = np.linalg.svd(est.matrix, compute_uv=False)
        assert svals[1] < 1e-10 * svals[0]


class TestFrequencyDomainEquivalence:
    @pytest.mark.parametrize("noise_variance", [0.0, 1.0])
    def test_sample_correlation_matches_realized_record_model(self, noise_variance):
        # The chain output's correlation must equal the steering-matrix model
        # built directly from the record's per-channel DFT content (a fully
        # independent path: no upsampling, masking, delaying or downsampling).
        for seed in range(3):
            L, p, m = 32, 10, 1024
            active = (8, 16, 17, 18, 29, 30)
            spec = MultibandSpec(
                L=L, active_set=active, omega_max=0.25, snr_db=1.0,
                record_snapshots=m, noise_variance=noise_variance,
            )
            rec = generate(spec, [41, seed])
            rng = np.random.default_rng([42, seed])
            pat = CosetPattern(L=L, offsets=tuple(int(c) for c in np.sort(rng.choice(L, 10, replace=False))))
            est = sample_correlation(fractional_shift(sample(rec, pat)))

            channel_content = np.fft.fft(rec.samples).reshape(L, m)
            empirical_p = channel_content @ channel_content.conj().T / m**2
            a_all = steering_vectors(pat, range(L))
            model = a_all @ empirical_p @ a_all.conj().T / L**2

            scale = np.vdot(model, est.matrix).real / np.vdot(model, model).real
            err = np.linalg.norm(est.matrix - scale * model) / np.linalg.norm(scale * model)
            assert err < 1e-10
