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

#include "trifmcw/spectrum.hpp"
#include "trifmcw/waveform.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trifmcw
{

enum class DelayUnit
{
    Seconds, // delay_seconds
    Index,   // delay_p, tau = p / (2B)
    Range    // range_meters, via the scenario's range mapping
};

struct TapConfig
{
    DelayUnit unit = DelayUnit::Seconds;
    double value = 0.0;
    cdouble gain{1.0, 0.0};
    bool rayleigh = false;
    std::size_t line = 0; // line of the [tap] header
};

/// Custom scenario read from a flat key = value file.
///
///     # comment
///     name = two_walls
///     methods = triangle, sawtooth
///     bandwidth = 8000
///     chirp = 0.1
///     fs = 16000            (optional, default per waveform)
///     speed = 343
///     round_trip = true
///     threshold_db = -12
///     seed = 7
///
///     [tap]
///     delay_p = 48          (or delay_seconds / range_meters)
///     gain_re = 1
///     gain_im = 0           (or: rayleigh = true)
struct Scenario
{
    std::string name = "custom";
    std::string source = "<scenario>";
    std::vector<WaveformKind> methods{WaveformKind::Triangle};
    double bandwidth_hz = 8000.0;
    double chirp_duration_s = 0.1;
    std::optional<double> sample_rate_hz;
    RangeMapping mapping;
    double threshold_db = -12.0;
    std::uint64_t seed = 0;
    std::vector<TapConfig> taps;

    double delay_of(const TapConfig &tap) const;
};

// Throws ConfigError "<source>:<line>: message".
Scenario parse_scenario(std::istream &is, const std::string &source);
Scenario load_scenario(const std::filesystem::path &path);

} // namespace trifmcw
