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

#include "trifmcw/waveform.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace trifmcw
{

struct ChannelTap
{
    double delay_s = 0.0;
    cdouble gain{1.0, 0.0};
};

// Tapped delay line. Taps are kept sorted by delay; duplicate delays are rejected.
class ChannelModel
{
public:
    ChannelModel() = default;
    explicit ChannelModel(std::vector<ChannelTap> taps, std::uint64_t seed = 0);
    ChannelModel(std::initializer_list<ChannelTap> taps, std::uint64_t seed = 0)
        : ChannelModel(std::vector<ChannelTap>(taps), seed)
    {
    }

    const std::vector<ChannelTap> &taps() const { return taps_; }
    std::uint64_t seed() const { return seed_; }
    bool empty() const { return taps_.empty(); }

private:
    std::vector<ChannelTap> taps_;
    std::uint64_t seed_ = 0;
};

// Delay of index p on the doubled-resolution grid, tau = p / (2B).
inline double delay_for_index(double p, double bandwidth_hz)
{
    return p / (2.0 * bandwidth_hz);
}

/// Received signal y[n] = sum_i g_i x[n - d_i], d_i = tau_i * fs.
///
/// Output has the input length; samples shifted past the end are dropped and
/// the leading d_i samples of each tap contribute zero. Every delay must land on
/// the sample grid (|tau fs - round(tau fs)| < 1e-9), otherwise PrecisionError.
ComplexSignal apply(const ComplexSignal &sig, const ChannelModel &channel);

/// Complex Rayleigh gains, (g_re + j g_im) / sqrt(2) with g_re, g_im ~ N(0, 1).
///
/// Generator: std::mt19937_64 seeded with `seed`; uniforms u = (x >> 11) * 2^-53;
/// one Box-Muller pair per delay in input order, r = sqrt(-2 ln(1 - u1)),
/// g_re = r cos(2 pi u2), g_im = r sin(2 pi u2). Gains are not renormalized.
ChannelModel rayleigh_taps(std::span<const double> delays_s, std::uint64_t seed);

} // namespace trifmcw
