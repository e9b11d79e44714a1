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

#include "trifmcw/waveform.hpp"

#include "trifmcw/dft.hpp"
#include "trifmcw/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace trifmcw
{

namespace
{

constexpr double pi = std::numbers::pi;

bool is_integral(double x)
{
    return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x));
}

std::string describe(const WaveformSpec &spec)
{
    std::ostringstream os;
    os << to_string(spec.kind) << " (B=" << spec.bandwidth_hz << " Hz, T_c=" << spec.chirp_duration_s
       << " s, fs=" << spec.sample_rate_hz << " Hz)";
    return os.str();
}

} // namespace

std::string_view to_string(WaveformKind kind)
{
    switch (kind)
    {
    case WaveformKind::Triangle:
        return "triangle";
    case WaveformKind::Sawtooth:
        return "sawtooth";
    case WaveformKind::Gentle:
        return "gentle";
    case WaveformKind::Extended:
        return "extended";
    case WaveformKind::Linear:
        return "linear";
    }
    return "unknown";
}

WaveformKind parse_waveform_kind(std::string_view name)
{
    for (auto kind : {WaveformKind::Triangle, WaveformKind::Sawtooth, WaveformKind::Gentle, WaveformKind::Extended,
                      WaveformKind::Linear})
        if (to_string(kind) == name)
            return kind;
    throw ConfigError("unknown waveform kind '" + std::string(name) +
                      "' (expected triangle, sawtooth, gentle, extended or linear)");
}

double WaveformSpec::default_sample_rate(WaveformKind kind, double bandwidth_hz)
{
    return kind == WaveformKind::Extended ? 4.0 * bandwidth_hz : 2.0 * bandwidth_hz;
}

WaveformSpec WaveformSpec::make(WaveformKind kind, double bandwidth_hz, double chirp_duration_s,
                                std::optional<double> sample_rate_hz, double start_freq_hz)
{
    WaveformSpec spec;
    spec.kind = kind;
    spec.bandwidth_hz = bandwidth_hz;
    spec.chirp_duration_s = chirp_duration_s;
    spec.start_freq_hz = start_freq_hz;
    spec.sample_rate_hz = sample_rate_hz.value_or(default_sample_rate(kind, bandwidth_hz));
    spec.validate();
    return spec;
}

double WaveformSpec::min_sample_rate() const
{
    return default_sample_rate(kind, bandwidth_hz);
}

void WaveformSpec::validate() const
{
    if (!(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0))
        throw ConfigError("bandwidth must be positive and finite: " + describe(*this));
    if (!(std::isfinite(chirp_duration_s) && chirp_duration_s > 0.0))
        throw ConfigError("chirp duration must be positive and finite: " + describe(*this));
    if (!std::isfinite(start_freq_hz))
        throw ConfigError("start frequency must be finite: " + describe(*this));
    if (!(std::isfinite(sample_rate_hz) && sample_rate_hz > 0.0))
        throw ConfigError("sample rate must be positive and finite: " + describe(*this));
    if (sample_rate_hz < min_sample_rate() * (1.0 - 1e-12))
    {
        std::ostringstream os;
        os << "sample rate below the Nyquist bound fs >= " << min_sample_rate() << " Hz: " << describe(*this);
        throw ConfigError(os.str());
    }
    const double nc = sample_rate_hz * chirp_duration_s;
    if (!is_integral(nc) || std::round(nc) < 1.0)
    {
        std::ostringstream os;
        os << "fs * T_c = " << nc << " is not a positive integer sample count: " << describe(*this);
        throw ConfigError(os.str());
    }
}

std::size_t WaveformSpec::chirp_samples() const
{
    return static_cast<std::size_t>(std::llround(sample_rate_hz * chirp_duration_s));
}

std::size_t WaveformSpec::signal_samples() const
{
    return kind == WaveformKind::Linear ? chirp_samples() : symbol_samples();
}

double waveform_phase(const WaveformSpec &spec, double t)
{
    const double alpha = spec.slope();
    const double tc = spec.chirp_duration_s;
    const double carrier = 2.0 * pi * spec.start_freq_hz;
    switch (spec.kind)
    {
    case WaveformKind::Triangle:
        if (t < tc)
            return pi * alpha * t * t + carrier * t;
        else
        {
            // Mirrored ramp, B -> 0, continuing from phi(T_c) = pi B T_c.
            const double u = t - tc;
            return pi * spec.bandwidth_hz * tc + 2.0 * pi * spec.bandwidth_hz * u - pi * alpha * u * u + carrier * t;
        }
    case WaveformKind::Sawtooth: {
        const double u = t < tc ? t : t - tc;
        return pi * alpha * u * u + carrier * u;
    }
    case WaveformKind::Gentle:
        return 0.5 * pi * alpha * t * t + carrier * t;
    case WaveformKind::Extended:
    case WaveformKind::Linear:
        return pi * alpha * t * t + carrier * t;
    }
    return 0.0;
}

ComplexSignal generate(const WaveformSpec &spec)
{
    spec.validate();

    const std::size_t len = spec.signal_samples();
    const std::size_t nc = spec.chirp_samples();
    const double fs = spec.sample_rate_hz;

    ComplexSignal sig;
    sig.sample_rate_hz = fs;
    sig.samples.resize(len);
    for (std::size_t n = 0; n < len; ++n)
    {
        double phase;
        if (spec.kind == WaveformKind::Triangle && n >= nc)
        {
            // Offset from the ramp junction in exact sample units.
            const double t = static_cast<double>(n) / fs;
            const double u = static_cast<double>(n - nc) / fs;
            const double alpha = spec.slope();
            const double b = spec.bandwidth_hz;
            phase = pi * b * spec.chirp_duration_s + 2.0 * pi * b * u - pi * alpha * u * u +
                    2.0 * pi * spec.start_freq_hz * t;
        }
        else if (spec.kind == WaveformKind::Sawtooth)
        {
            const double u = static_cast<double>(n % nc) / fs;
            phase = pi * spec.slope() * u * u + 2.0 * pi * spec.start_freq_hz * u;
        }
        else
        {
            phase = waveform_phase(spec, static_cast<double>(n) / fs);
        }
        sig.samples[n] = std::polar(1.0, phase);
    }
    return sig;
}

std::size_t default_spectrogram_window(const WaveformSpec &spec)
{
    return std::max<std::size_t>(1, spec.chirp_samples() / 16);
}

double Spectrogram::frame_center_time(std::size_t row) const
{
    return (static_cast<double>(row * hop) + 0.5 * static_cast<double>(window_len)) / sample_rate_hz;
}

double Spectrogram::bin_frequency(std::size_t bin) const
{
    const auto k = static_cast<double>(bin);
    const auto w = static_cast<double>(window_len);
    const double signed_bin = bin < (window_len + 1) / 2 ? k : k - w;
    return signed_bin * sample_rate_hz / w;
}

Spectrogram spectrogram(const ComplexSignal &sig, std::size_t window_len, std::size_t hop)
{
    if (window_len < 1 || window_len > sig.size())
        throw ArgumentError("spectrogram window length " + std::to_string(window_len) + " must be in [1, " +
                            std::to_string(sig.size()) + "]");
    if (hop < 1)
        throw ArgumentError("spectrogram hop must be at least 1");

    std::vector<double> window(window_len, 1.0);
    if (window_len > 1)
        for (std::size_t n = 0; n < window_len; ++n)
            window[n] = 0.5 - 0.5 * std::cos(2.0 * pi * static_cast<double>(n) / static_cast<double>(window_len));

    Spectrogram out;
    out.window_len = window_len;
    out.hop = hop;
    out.sample_rate_hz = sig.sample_rate_hz;

    const std::size_t rows = (sig.size() - window_len) / hop + 1;
    out.power.reserve(rows);
    std::vector<cdouble> frame(window_len);
    for (std::size_t r = 0; r < rows; ++r)
    {
        const std::size_t start = r * hop;
        for (std::size_t n = 0; n < window_len; ++n)
            frame[n] = window[n] * sig.samples[start + n];
        const auto spectrum = dft(frame);
        std::vector<double> row(window_len);
        for (std::size_t k = 0; k < window_len; ++k)
            row[k] = std::norm(spectrum[k]);
        out.power.push_back(std::move(row));
    }
    return out;
}

} // namespace trifmcw
