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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trifmcw
{

using cdouble = std::complex<double>;

enum class WaveformKind
{
    Triangle, // up-chirp followed by its mirrored down-chirp
    Sawtooth, // two identical up-chirps, phase reset at each start
    Gentle,   // one up-chirp at half slope over the symbol
    Extended, // one up-chirp at full slope over the symbol (sweeps 2B)
    Linear    // single up-chirp over one chirp duration
};

std::string_view to_string(WaveformKind kind);

// Accepts the lower-case names produced by to_string(). Throws ConfigError.
WaveformKind parse_waveform_kind(std::string_view name);

/// Parameters of one FMCW symbol.
///
/// Frequencies in hertz, durations in seconds. The slope is B / T_c for every
/// kind except Gentle, which sweeps B over 2 T_c. Use make() to get the default
/// sample rate (2B, or 4B for Extended) and a validated spec.
struct WaveformSpec
{
    WaveformKind kind = WaveformKind::Triangle;
    double bandwidth_hz = 0.0;
    double chirp_duration_s = 0.0;
    double start_freq_hz = 0.0;
    double sample_rate_hz = 0.0;

    static WaveformSpec make(WaveformKind kind, double bandwidth_hz, double chirp_duration_s,
                             std::optional<double> sample_rate_hz = std::nullopt, double start_freq_hz = 0.0);

    static double default_sample_rate(WaveformKind kind, double bandwidth_hz);

    // Throws ConfigError naming the violated invariant.
    void validate() const;

    double slope() const { return bandwidth_hz / chirp_duration_s; }
    double effective_slope() const { return kind == WaveformKind::Gentle ? 0.5 * slope() : slope(); }
    double symbol_duration() const { return 2.0 * chirp_duration_s; }
    double min_sample_rate() const;

    std::size_t chirp_samples() const;
    std::size_t symbol_samples() const { return 2 * chirp_samples(); }
    // Length of the generated signal: N_c for Linear, N_s otherwise.
    std::size_t signal_samples() const;
    double signal_duration() const { return static_cast<double>(signal_samples()) / sample_rate_hz; }
};

struct ComplexSignal
{
    std::vector<cdouble> samples;
    double sample_rate_hz = 0.0;
    double t0_s = 0.0;

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate_hz; }
    double time_of(std::size_t n) const { return t0_s + static_cast<double>(n) / sample_rate_hz; }
};

// Instantaneous phase (radians, unwrapped) of the waveform at time t.
double waveform_phase(const WaveformSpec &spec, double t);

// Unit-amplitude complex baseband samples on the grid t = n / fs.
ComplexSignal generate(const WaveformSpec &spec);

// Spectrogram defaults: window N_c / 16, hop half the window.
std::size_t default_spectrogram_window(const WaveformSpec &spec);

/// Short-time power spectrum with a periodic Hann window.
///
/// Row r covers samples [r*hop, r*hop + window_len). Each row holds the squared
/// DFT magnitude for bins 0..window_len-1 (bin k above window_len/2 is the
/// negative frequency k - window_len).
struct Spectrogram
{
    std::size_t window_len = 0;
    std::size_t hop = 0;
    double sample_rate_hz = 0.0;
    std::vector<std::vector<double>> power;

    std::size_t rows() const { return power.size(); }
    double frame_center_time(std::size_t row) const;
    double bin_frequency(std::size_t bin) const;
};

Spectrogram spectrogram(const ComplexSignal &sig, std::size_t window_len, std::size_t hop);

} // namespace trifmcw
