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

#include "trifmcw/spectrum.hpp"

#include "trifmcw/dft.hpp"
#include "trifmcw/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace trifmcw
{

void RangeMapping::validate() const
{
    if (!(std::isfinite(propagation_speed_mps) && propagation_speed_mps > 0.0))
        throw ConfigError("propagation speed must be positive and finite");
}

bool PeakSet::contains_bin(std::size_t bin) const
{
    return std::any_of(peaks.begin(), peaks.end(), [bin](const Peak &p) { return p.bin == bin; });
}

std::vector<cdouble> real_part_spectrum(const BeatSignal &beat, ProfileWindow window)
{
    if (beat.size() < 2)
        throw ArgumentError("real-part spectrum needs at least 2 beat samples");
    std::vector<double> re(beat.size());
    std::transform(beat.samples.begin(), beat.samples.end(), re.begin(), [](cdouble z) { return z.real(); });
    if (window == ProfileWindow::Hann)
    {
        const double n = static_cast<double>(re.size());
        for (std::size_t i = 0; i < re.size(); ++i)
            re[i] *= 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n);
    }
    return dft_real(re);
}

RangeProfile range_profile(const BeatSignal &beat, const RangeMapping &mapping, ProfileWindow window)
{
    mapping.validate();
    const auto spectrum = real_part_spectrum(beat, window);
    const std::size_t n = spectrum.size();

    RangeProfile profile;
    profile.sample_rate_hz = beat.sample_rate_hz;
    profile.window_duration_s = beat.duration();
    profile.slope_hz_per_s = beat.spec.effective_slope();
    profile.bin_spacing_m = mapping.propagation_speed_mps / (profile.slope_hz_per_s * profile.window_duration_s) *
                            (mapping.round_trip ? 0.5 : 1.0);
    profile.power.resize(n / 2 + 1);
    for (std::size_t k = 0; k < profile.power.size(); ++k)
        profile.power[k] = std::norm(spectrum[k]);
    return profile;
}

PeakSet detect_peaks(const RangeProfile &profile, const PeakOptions &options)
{
    if (profile.power.empty())
        throw ArgumentError("cannot detect peaks in an empty profile");
    if (!(options.rel_threshold_db <= 0.0))
        throw ArgumentError("relative peak threshold must be <= 0 dB");

    const auto &p = profile.power;
    const std::size_t n = p.size();
    const double max_power = *std::max_element(p.begin(), p.end());
    PeakSet out;
    if (!(max_power > 0.0))
        return out;

    const double threshold = max_power * std::pow(10.0, options.rel_threshold_db / 10.0);
    const double contrast = std::pow(10.0, options.doublet_contrast_db / 10.0);
    auto at = [&](std::ptrdiff_t k) { return k < 0 || k >= static_cast<std::ptrdiff_t>(n) ? 0.0 : p[k]; };

    for (std::size_t i = 0; i < n; ++i)
    {
        const auto k = static_cast<std::ptrdiff_t>(i);
        const double v = p[i];
        if (!(v > 0.0) || v < threshold)
            continue;

        bool is_peak = v > at(k - 1) && v > at(k + 1);
        for (std::ptrdiff_t s : {-1, 1})
        {
            if (is_peak)
                break;
            // the pair and both outer neighbours must lie inside the profile
            const std::ptrdiff_t j = k + s;
            const std::ptrdiff_t lo = std::min(k - s, j + s);
            const std::ptrdiff_t hi = std::max(k - s, j + s);
            if (lo < 0 || hi >= static_cast<std::ptrdiff_t>(n))
                continue;
            is_peak = at(j) >= v && at(j) >= threshold && v > at(k - s) && v >= contrast * at(k - s) &&
                      at(j) >= contrast * at(j + s);
        }
        if (is_peak)
            out.peaks.push_back({i, profile.range_of(static_cast<double>(i)), v});
    }
    return out;
}

PeakSet detect_peaks(const RangeProfile &profile, double rel_threshold_db)
{
    PeakOptions options;
    options.rel_threshold_db = rel_threshold_db;
    return detect_peaks(profile, options);
}

double energy_dominance(const BeatSignal &beat, std::size_t p)
{
    const auto spectrum = real_part_spectrum(beat);
    const std::size_t n = spectrum.size();
    if (2 * p > n)
        throw ArgumentError("bin " + std::to_string(p) + " is outside the non-negative spectrum half (N = " +
                            std::to_string(n) + ")");

    double energy = 0.0;
    for (const auto &z : beat.samples)
        energy += z.real() * z.real();
    if (!(energy > 0.0))
        return 0.0;

    const auto total = static_cast<double>(n) * energy;
    if (p == 0 || 2 * p == n)
        return std::norm(spectrum[p]) / total;
    const double pair = std::abs(spectrum[p]) + std::abs(spectrum[n - p]);
    return pair * pair / (2.0 * total);
}

double sntr(const RangeProfile &profile, std::size_t true_p, std::size_t guard)
{
    if (true_p >= profile.bins())
        throw ArgumentError("true bin " + std::to_string(true_p) + " is outside the profile (" +
                            std::to_string(profile.bins()) + " bins)");
    double noise = 0.0;
    for (std::size_t k = 0; k < profile.bins(); ++k)
    {
        const std::size_t dist = k > true_p ? k - true_p : true_p - k;
        if (dist > guard)
            noise = std::max(noise, profile.power[k]);
    }
    if (noise == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(profile.power[true_p] / noise);
}

} // namespace trifmcw
