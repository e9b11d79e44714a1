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
#include "trifmcw/channel.hpp"
#include "trifmcw/csv.hpp"
#include "trifmcw/scenario.hpp"
#include "trifmcw/spectrum.hpp"
#include "trifmcw/waveform.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace trifmcw
{

struct ExperimentConfig
{
    double bandwidth_hz = 8000.0;
    double chirp_duration_s = 0.1;
    std::optional<double> sample_rate_hz; // overrides every method's rate
    RangeMapping mapping;
    PeakOptions peaks;
    std::optional<double> awgn_snr_db; // off by default; SNR of the received signal per sample
};

struct MethodRun
{
    std::string label;
    WaveformSpec spec;
    BeatSignal beat;
    RangeProfile profile;
    PeakSet peaks;
    std::optional<double> sntr_db;   // single-tap runs only
    std::optional<double> dominance; // single-tap runs on an integer bin only
};

struct Assertion
{
    std::string criterion; // e.g. "AC-1"
    std::string description;
    std::string measured;
    std::string bound;
    bool pass = false;
};

struct SntrPoint
{
    double tau_over_tc = 0.0;
    std::size_t p = 0;
    double sntr_db = 0.0;
};

struct SpacingPoint
{
    double true_spacing_m = 0.0;
    std::vector<double> estimate_m; // per method, same order as ExperimentReport::methods_in_sweep
    std::vector<bool> degenerate;
};

struct ExperimentReport
{
    std::string scenario;
    std::vector<MethodRun> methods;
    std::vector<double> ground_truth_ranges_m;
    std::vector<Assertion> assertions;
    std::vector<std::string> notes;
    bool degenerate = false;

    // sweeps
    std::optional<csv::Table> table;
    std::string table_name;
    std::vector<SntrPoint> sntr_points;
    std::vector<std::string> methods_in_sweep;
    std::vector<SpacingPoint> spacing_points;
    std::vector<double> mean_tight_error_m; // per methods_in_sweep

    bool passed() const;
    const MethodRun *find(const std::string &label) const;
};

// One waveform through generate -> channel -> (noise) -> mix -> profile -> peaks.
MethodRun run_method(WaveformKind kind, const ChannelModel &channel, const ExperimentConfig &cfg,
                     std::optional<double> sample_rate_hz = std::nullopt, std::string label = {});

ExperimentReport run_four_path(std::uint64_t seed, const ExperimentConfig &cfg = {});

ExperimentReport run_sntr_sweep(std::size_t points, const ExperimentConfig &cfg = {});

// Default rate 171500 Hz puts both delays on the sample grid at c = 343 m/s.
inline constexpr double kNonIntegerSampleRate = 171500.0;
ExperimentReport run_non_integer(std::uint64_t seed, const ExperimentConfig &cfg = {});

ExperimentReport run_spacing_sweep(const ExperimentConfig &cfg = {});

// Runs a parsed scenario file; cfg supplies overrides already folded in by the caller.
ExperimentReport run_scenario(const Scenario &scenario);

// Separation of the two strongest peaks, 0 when fewer than two were found.
double estimate_spacing(const PeakSet &peaks);

std::string render_report(const ExperimentReport &report);

void write_outputs(const ExperimentReport &report, const std::filesystem::path &dir);

} // namespace trifmcw
