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

#include "trifmcw/channel.hpp"

#include "trifmcw/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace trifmcw
{

ChannelModel::ChannelModel(std::vector<ChannelTap> taps, std::uint64_t seed) : taps_(std::move(taps)), seed_(seed)
{
    for (const auto &tap : taps_)
    {
        if (!std::isfinite(tap.delay_s) || tap.delay_s < 0.0)
            throw ArgumentError("channel tap delay must be finite and non-negative");
        if (!std::isfinite(tap.gain.real()) || !std::isfinite(tap.gain.imag()))
            throw ArgumentError("channel tap gain must be finite");
    }
    std::stable_sort(taps_.begin(), taps_.end(),
                     [](const ChannelTap &a, const ChannelTap &b) { return a.delay_s < b.delay_s; });
    for (std::size_t i = 1; i < taps_.size(); ++i)
        if (taps_[i].delay_s == taps_[i - 1].delay_s)
        {
            std::ostringstream os;
            os << "duplicate channel tap delay " << taps_[i].delay_s << " s";
            throw ArgumentError(os.str());
        }
}

ComplexSignal apply(const ComplexSignal &sig, const ChannelModel &channel)
{
    const std::size_t len = sig.size();
    ComplexSignal out;
    out.sample_rate_hz = sig.sample_rate_hz;
    out.t0_s = sig.t0_s;
    out.samples.assign(len, cdouble{0.0, 0.0});

    std::vector<std::size_t> shifts;
    shifts.reserve(channel.taps().size());
    for (std::size_t i = 0; i < channel.taps().size(); ++i)
    {
        const auto &tap = channel.taps()[i];
        const double exact = tap.delay_s * sig.sample_rate_hz;
        const double rounded = std::round(exact);
        if (std::abs(exact - rounded) >= 1e-9)
        {
            std::ostringstream os;
            os.precision(12);
            os << "channel tap " << i << " (delay " << tap.delay_s << " s) is " << exact
               << " samples at fs=" << sig.sample_rate_hz
               << " Hz, not on the sample grid; raise fs so that delay * fs is an integer";
            throw PrecisionError(os.str());
        }
        if (rounded >= static_cast<double>(len))
        {
            std::ostringstream os;
            os << "channel tap " << i << " delay " << tap.delay_s << " s is not shorter than the signal ("
               << sig.duration() << " s)";
            throw ArgumentError(os.str());
        }
        shifts.push_back(static_cast<std::size_t>(rounded));
    }

    for (std::size_t i = 0; i < shifts.size(); ++i)
    {
        const std::size_t d = shifts[i];
        const cdouble g = channel.taps()[i].gain;
        for (std::size_t n = d; n < len; ++n)
            out.samples[n] += g * sig.samples[n - d];
    }
    return out;
}

ChannelModel rayleigh_taps(std::span<const double> delays_s, std::uint64_t seed)
{
    std::mt19937_64 engine(seed);
    auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

    std::vector<ChannelTap> taps;
    taps.reserve(delays_s.size());
    for (double delay : delays_s)
    {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        taps.push_back({delay, cdouble{r * std::cos(angle), r * std::sin(angle)} / std::numbers::sqrt2});
    }
    return ChannelModel(std::move(taps), seed);
}

} // namespace trifmcw
