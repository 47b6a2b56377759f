"""Tests for zero scanning, unit-interval counting, and counter models.

Ordinate references are frozen from mp.zetazero at 25 digits; counter
oracles come from scipy Bessel and Airy zero finders.
"""

import math

import numpy as np
import pytest

from zetaphase import (
    CoverageError,
    ScanConfig,
    ZeroList,
    airy_counter,
    airy_counter_corrected,
    airy_neg_zeros,
    bessel_j0_counter,
    bessel_j0_counter_corrected,
    bessel_j0_zeros,
    counter_from_counting_function,
    divergence_report,
    first_missed_zero,
    floor_counter,
    hardy_z,
    point_density_zeta,
    read_zero_cache,
    scan_zeros,
    unit_interval_counts,
    write_zero_cache,
)

# mp.zetazero imaginary parts, 25-digit evaluation rounded to double.
FIRST_ORDINATES = [
    14.134725141734694,
    21.022039638771555,
    25.010857580145689,
    30.424876125859513,
    32.935061587739190,
    37.586178158825671,
    40.918719012147495,
    43.327073280914999,
    48.005150881167160,
    49.773832477672302,
    52.970321477714461,
    56.446247697063395,
    59.347044002602354,
]


class TestScanConfig:
    def test_defaults(self):
        config = ScanConfig(t_lo=0.0, t_hi=100.0)
        assert config.step == 0.05
        assert config.refine_tol == 1e-9

    def test_validation(self):
        with pytest.raises(ValueError):
            ScanConfig(t_lo=-1.0, t_hi=50.0)
        with pytest.raises(ValueError):
            ScanConfig(t_lo=50.0, t_hi=50.0)
        with pytest.raises(ValueError):
            ScanConfig(t_lo=0.0, t_hi=10001.0)
        with pytest.raises(ValueError):
            ScanConfig(t_lo=0.0, t_hi=100.0, step=0.2)
        with pytest.raises(ValueError):
            ScanConfig(t_lo=0.0, t_hi=100.0, refine_tol=1e-3)


class TestScanZeros:
    def test_first_fifty(self):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=50.0))
        assert zeros.count == 10
        assert [int(y) for y in zeros.ordinates[:4]] == [14, 21, 25, 30]
        for got, want in zip(zeros.ordinates, FIRST_ORDINATES):
            assert got == pytest.approx(want, abs=5e-9)
        assert zeros.suspect_intervals == ()
        assert zeros.source == "scanned"

    def test_empty_below_first_zero(self):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=14.0))
        assert zeros.count == 0
        assert zeros.ordinates == ()

    def test_twenty_nine_below_hundred(self):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=100.0))
        assert zeros.count == 29

    def test_ordinates_are_actual_roots(self):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=60.0))
        for y in zeros.ordinates:
            assert abs(hardy_z(y)) < 1e-6

    def test_partial_window(self):
        zeros = scan_zeros(ScanConfig(t_lo=20.0, t_hi=50.0))
        assert zeros.count == 9
        assert zeros.ordinates[0] == pytest.approx(FIRST_ORDINATES[1], abs=5e-9)

    def test_determinism(self):
        a = scan_zeros(ScanConfig(t_lo=100.0, t_hi=200.0))
        b = scan_zeros(ScanConfig(t_lo=100.0, t_hi=200.0))
        assert a.ordinates == b.ordinates

    def test_high_window_uses_fast_path(self):
        zeros = scan_zeros(ScanConfig(t_lo=1000.0, t_hi=1020.0))
        assert zeros.count == 16
        for y in zeros.ordinates:
            assert abs(hardy_z(y)) < 1e-6


class TestZeroList:
    def test_count_below(self):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=50.0))
        assert zeros.count_below(14.0) == 0
        assert zeros.count_below(15.0) == 1
        assert zeros.count_below(50.0) == 10

    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            ZeroList(
                ordinates=(20.0, 15.0),
                source="ingested",
                t_lo=0.0,
                t_hi=30.0,
                step=0.05,
                refine_tol=1e-9,
                suspect_intervals=(),
            )

    def test_merge_requires_abutting_coverage(self):
        a = scan_zeros(ScanConfig(t_lo=0.0, t_hi=30.0))
        b = scan_zeros(ScanConfig(t_lo=30.0, t_hi=60.0))
        c = scan_zeros(ScanConfig(t_lo=70.0, t_hi=90.0))
        merged = a.merge(b)
        assert merged.t_lo == 0.0 and merged.t_hi == 60.0
        assert merged.count == a.count + b.count
        with pytest.raises(ValueError):
            merged.merge(c)

    def test_merge_requires_same_source(self):
        a = scan_zeros(ScanConfig(t_lo=0.0, t_hi=30.0))
        b = scan_zeros(ScanConfig(t_lo=30.0, t_hi=60.0))
        foreign = ZeroList(
            ordinates=b.ordinates,
            source="ingested",
            t_lo=b.t_lo,
            t_hi=b.t_hi,
            step=b.step,
            refine_tol=b.refine_tol,
            suspect_intervals=(),
        )
        with pytest.raises(ValueError):
            a.merge(foreign)


class TestZeroCache:
    def test_roundtrip(self, tmp_path):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=60.0))
        path = tmp_path / "zeros.txt"
        write_zero_cache(zeros, path)
        loaded = read_zero_cache(path)
        assert loaded.source == "ingested"
        assert loaded.t_lo == zeros.t_lo and loaded.t_hi == zeros.t_hi
        assert len(loaded.ordinates) == len(zeros.ordinates)
        for a, b in zip(loaded.ordinates, zeros.ordinates):
            assert a == pytest.approx(b, abs=1e-12)

    def test_rewrite_is_byte_identical(self, tmp_path):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=60.0))
        p1 = tmp_path / "a.txt"
        p2 = tmp_path / "b.txt"
        write_zero_cache(zeros, p1)
        write_zero_cache(zeros, p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_malformed_line_reported_with_number(self, tmp_path):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=50.0))
        path = tmp_path / "zeros.txt"
        write_zero_cache(zeros, path)
        lines = path.read_text().splitlines()
        lines[8] = "not-a-number"
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(ValueError, match=":9: not an ordinate"):
            read_zero_cache(path)

    def test_out_of_order_rejected(self, tmp_path):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=50.0))
        path = tmp_path / "zeros.txt"
        write_zero_cache(zeros, path)
        lines = path.read_text().splitlines()
        first = next(i for i, s in enumerate(lines) if s and s[0].isdigit() and "." in s)
        lines[first], lines[first + 1] = lines[first + 1], lines[first]
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(ValueError):
            read_zero_cache(path)

    def test_declared_count_mismatch_rejected(self, tmp_path):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=50.0))
        path = tmp_path / "zeros.txt"
        write_zero_cache(zeros, path)
        lines = path.read_text().splitlines()
        del lines[-1]
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(ValueError):
            read_zero_cache(path)

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "zeros.txt"
        path.write_text("something else\n")
        with pytest.raises(ValueError):
            read_zero_cache(path)


class TestUnitIntervalCounts:
    def test_coverage_must_span_requested_range(self):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=50.0))
        with pytest.raises(CoverageError):
            unit_interval_counts(zeros, 50)
        counts = unit_interval_counts(zeros, 49)
        assert counts.n_max == 49

    def test_small_window_counts(self):
        zeros = scan_zeros(ScanConfig(t_lo=0.0, t_hi=51.0))
        counts = unit_interval_counts(zeros, 50)
        assert counts.get(13) == 0
        assert counts.get(14) == 1
        assert counts.get(21) == 1
        assert counts.get(15) == 0
        assert counts.total == 10
        nonzero = dict(counts.nonzero_items())
        assert set(nonzero) == {14, 21, 25, 30, 32, 37, 40, 43, 48, 49}
        with pytest.raises(ValueError):
            counts.get(0)


class TestPointDensity:
    def test_formula(self):
        assert point_density_zeta(6500.0) == pytest.approx(1.3973, abs=1e-4)
        for n in (20.0, 100.0, 6000.0):
            assert point_density_zeta(n) == pytest.approx(
                math.log(n) / (2.0 * math.pi), rel=1e-14
            )

    def test_domain(self):
        with pytest.raises(ValueError):
            point_density_zeta(2.0 * math.pi * math.e)

    def test_tracks_running_mean(self, census_counts):
        # The measured mean count over [5000, 6000] sits ln(2 pi)/(2 pi)
        # below the ln(n)/(2 pi) figure, matching the smooth zero count.
        window = [census_counts.get(n) for n in range(5000, 6000)]
        mean = sum(window) / len(window)
        expected = point_density_zeta(5500.0) - math.log(2.0 * math.pi) / (
            2.0 * math.pi
        )
        assert mean == pytest.approx(expected, abs=0.02)


class TestFloorCounter:
    def test_golden_ratio_pattern(self):
        alpha = (math.sqrt(5.0) - 1.0) / 2.0
        got = [floor_counter(n, alpha) for n in range(12)]
        assert got == [0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1]

    def test_telescoping(self):
        alpha = 0.437
        total = sum(floor_counter(n, alpha) for n in range(200))
        assert total == math.floor(200 * alpha)


class TestOscillatorCounters:
    def test_bessel_literal_values(self):
        assert bessel_j0_counter(2) == 1
        assert bessel_j0_counter(3) == 0
        assert bessel_j0_counter(8) == 0

    def test_bessel_oracle_disagrees_at_eight(self):
        zeros = bessel_j0_zeros(80)
        in_interval = sum(1 for z in zeros if 8.0 <= z < 9.0)
        assert in_interval == 1
        assert bessel_j0_counter(8) == 0

    def test_counting_function_form(self):
        # The corrected counter is the floor difference of x/pi + 1/4.
        f = lambda x: x / math.pi + 0.25
        for n in range(1, 60):
            assert counter_from_counting_function(f, n) == (
                bessel_j0_counter_corrected(n)
            )

    def test_bessel_divergences(self):
        report = divergence_report("bessel", 200)
        assert report[:4] == [(6, 1, 0), (8, 0, 1), (9, 1, 0), (11, 0, 1)]
        assert first_missed_zero(report) == 8

    @staticmethod
    def _oracle_counts(zeros, n_max):
        arr = np.asarray(zeros)
        return {
            n: int(np.count_nonzero((arr >= n) & (arr < n + 1)))
            for n in range(1, n_max + 1)
        }

    def test_bessel_corrected_matches_oracle(self):
        oracle = self._oracle_counts(bessel_j0_zeros(70), 200)
        for n in range(1, 201):
            assert bessel_j0_counter_corrected(n) == oracle[n], n

    def test_airy_literal_values(self):
        assert airy_counter(2) == 1
        assert airy_counter(5) == 1
        assert airy_counter(6) == 0

    def test_airy_divergences(self):
        report = divergence_report("airy", 200)
        assert report[0] == (6, 0, 1)
        assert report[1] == (8, 1, 0)
        assert first_missed_zero(report) == 6

    def test_airy_corrected_matches_oracle(self):
        oracle = self._oracle_counts(airy_neg_zeros(620), 200)
        for n in range(1, 201):
            assert airy_counter_corrected(n) == oracle[n], n

    def test_scipy_backed_zero_tables(self):
        # First zeros of J0 and of Ai(-x), frozen from scipy refinement.
        j0 = bessel_j0_zeros(3)
        assert j0 == pytest.approx([2.4048255577, 5.5200781103, 8.6537279129], abs=1e-9)
        ai = airy_neg_zeros(3)
        assert ai == pytest.approx([2.3381074105, 4.0879494441, 5.5205598281], abs=1e-9)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            divergence_report("cosine", 50)


class TestCensusLandmarks:
    def test_totals(self, census_zeros):
        assert census_zeros.count == 6148
        assert census_zeros.suspect_intervals == ()

    def test_counts_shape(self, census_counts):
        values = {n: census_counts.get(n) for n in range(1, census_counts.n_max + 1)}
        assert max(values.values()) == 3
        assert all(values[n] == 0 for n in range(1, 14))
        assert values[14] == 1

    def test_double_intervals_below_three_hundred(self, census_counts):
        doubles = [n for n in range(1, 301) if census_counts.get(n) == 2]
        assert doubles == [111, 150, 169, 224, 231]

    def test_triple_intervals(self, census_counts):
        triples = [
            n
            for n in range(1, census_counts.n_max + 1)
            if census_counts.get(n) == 3
        ]
        assert triples == [5826, 5978, 6494]

    def test_close_pair_resolved(self, census_zeros):
        # The tightest gap in the window is narrower than the scan step,
        # so finding both members exercises the recheck pass.
        ords = np.asarray(census_zeros.ordinates)
        gaps = np.diff(ords)
        k = int(np.argmin(gaps))
        assert gaps[k] == pytest.approx(0.043254, abs=1e-4)
        assert ords[k] == pytest.approx(5229.199, abs=1e-2)


class TestPartitionedScan:
    def test_same_census_from_chunks(self, census_zeros, partitioned_census):
        assert partitioned_census.count == census_zeros.count
        a = np.asarray(census_zeros.ordinates)
        b = np.asarray(partitioned_census.ordinates)
        assert np.max(np.abs(a - b)) <= 2e-9

    def test_identical_interval_counts(self, census_counts, partitioned_census):
        other = unit_interval_counts(partitioned_census, census_counts.n_max)
        assert other.nonzero_items() == census_counts.nonzero_items()
