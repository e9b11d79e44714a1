// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The trifmcw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "trifmcw/beat.hpp"

#include <cstddef>
#include <vector>

namespace trifmcw
{

struct RangeMapping
{
    double propagation_speed_mps = 343.0;
    bool round_trip = true;

    void validate() const;
    double range_for_delay(double tau_s) const { return propagation_speed_mps * tau_s * (round_trip ? 0.5 : 1.0); }
    double delay_for_range(double range_m) const
    {
        return range_m / (propagation_speed_mps * (round_trip ? 0.5 : 1.0));
    }
};

/// Power of the real-part beat spectrum over the non-negative frequency bins.
///
/// Bin p sits at frequency p / T_w (T_w the beat duration), delay p / (alpha T_w)
/// and range bin_spacing_m * p. With round-trip mapping a triangle profile has
/// spacing c / (4B); gentle and linear profiles are twice as coarse.
struct RangeProfile
{
    std::vector<double> power;
    double bin_spacing_m = 0.0;
    double sample_rate_hz = 0.0;
    double window_duration_s = 0.0;
    double slope_hz_per_s = 0.0;

    std::size_t bins() const { return power.size(); }
    double range_of(double bin) const { return bin * bin_spacing_m; }
    // Fractional bin at which a tap of delay tau appears.
    double bin_of_delay(double tau_s) const { return slope_hz_per_s * tau_s * window_duration_s; }
};

struct Peak
{
    std::size_t bin = 0;
    double range_m = 0.0;
    double power = 0.0;
};

struct PeakSet
{
    std::vector<Peak> peaks;

    std::size_t size() const { return peaks.size(); }
    bool empty() const { return peaks.empty(); }
    bool contains_bin(std::size_t bin) const;
};

struct PeakOptions
{
    double rel_threshold_db = -12.0;
    // Minimum drop on both outer sides for two adjacent bins to count as two lines.
    // A single tone under a rectangular window gives at most 20 log10(3) = 9.54 dB.
    double doublet_contrast_db = 12.0;
};

// DFT of Re(beat), full length, Hermitian. Throws ArgumentError for fewer than 2 samples.
// Rectangular everywhere by default; Hann is only for side-by-side comparisons.
enum class ProfileWindow
{
    Rectangular,
    Hann
};

std::vector<cdouble> real_part_spectrum(const BeatSignal &beat, ProfileWindow window = ProfileWindow::Rectangular);

RangeProfile range_profile(const BeatSignal &beat, const RangeMapping &mapping,
                           ProfileWindow window = ProfileWindow::Rectangular);

/// Peaks of a range profile, sorted by range.
///
/// A bin qualifies when its power reaches max * 10^(rel_threshold_db / 10) and
/// either both neighbours are strictly lower, or it forms a resolved doublet:
/// its one higher-or-equal neighbour is also above threshold and each of the two
/// bins exceeds its outer neighbour by doublet_contrast_db. Bins outside the
/// profile count as zero power.
PeakSet detect_peaks(const RangeProfile &profile, const PeakOptions &options = {});
PeakSet detect_peaks(const RangeProfile &profile, double rel_threshold_db);

/// Fraction of real-part energy held by the bin pair +-p, by Parseval:
/// (|Y(p)| + |Y(-p)|)^2 / (2 N sum Re(beat)^2). For p = 0 and p = N/2 the pair is
/// one bin and the fraction is |Y(p)|^2 / (N sum Re(beat)^2). Zero beat gives 0.
double energy_dominance(const BeatSignal &beat, std::size_t p);

// 10 log10(P[p] / max P outside [p - guard, p + guard]); +inf when that max is 0.
double sntr(const RangeProfile &profile, std::size_t true_p, std::size_t guard = 2);

} // namespace trifmcw
