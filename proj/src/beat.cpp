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

#include "trifmcw/beat.hpp"

#include "trifmcw/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace trifmcw
{

namespace
{

constexpr double pi = std::numbers::pi;

void check_delay(const WaveformSpec &spec, double tau_s)
{
    if (!std::isfinite(tau_s) || tau_s < 0.0 || tau_s >= spec.chirp_duration_s)
    {
        std::ostringstream os;
        os << "delay " << tau_s << " s must lie in [0, T_c = " << spec.chirp_duration_s << " s)";
        throw ArgumentError(os.str());
    }
}

double segment_phase(const BeatSegment &seg, double t)
{
    return pi * seg.chirp_rate_hz_per_s * t * t + 2.0 * pi * seg.frequency_hz * t + seg.phase_offset_rad;
}

} // namespace

double wrap_phase(double rad)
{
    double y = std::remainder(rad, 2.0 * pi);
    if (y <= -pi)
        y += 2.0 * pi;
    return y;
}

std::size_t delay_samples(double tau_s, double sample_rate_hz)
{
    const double exact = tau_s * sample_rate_hz;
    return static_cast<std::size_t>(std::ceil(exact - 1e-9));
}

BeatSignal mix(const ComplexSignal &tx, const ComplexSignal &rx, const WaveformSpec &spec)
{
    if (tx.size() != rx.size())
        throw ArgumentError("mix: transmit and receive lengths differ (" + std::to_string(tx.size()) + " vs " +
                            std::to_string(rx.size()) + ")");
    if (tx.sample_rate_hz != rx.sample_rate_hz)
        throw ArgumentError("mix: transmit and receive sample rates differ");

    BeatSignal beat;
    beat.sample_rate_hz = tx.sample_rate_hz;
    beat.spec = spec;
    beat.samples.resize(tx.size());
    for (std::size_t n = 0; n < tx.size(); ++n)
        beat.samples[n] = std::conj(tx.samples[n]) * rx.samples[n];
    return beat;
}

BeatSegments analytic_segments(const WaveformSpec &spec, double tau_s)
{
    if (spec.kind != WaveformKind::Triangle)
        throw ArgumentError("analytic beat is defined for the triangle waveform only");
    if (spec.start_freq_hz != 0.0)
        throw ArgumentError("analytic beat requires a zero start frequency");
    spec.validate();
    check_delay(spec, tau_s);

    const double alpha = spec.slope();
    const double b = spec.bandwidth_hz;
    const double tc = spec.chirp_duration_s;
    const std::size_t nc = spec.chirp_samples();
    const std::size_t ns = spec.symbol_samples();
    const std::size_t nd = delay_samples(tau_s, spec.sample_rate_hz);

    BeatSegments segs;
    segs.rising = {nd, nc, -alpha * tau_s, 0.0, pi * alpha * tau_s * tau_s};
    segs.transition = {nc, nc + nd, -(2.0 * b + alpha * tau_s), 2.0 * alpha,
                       pi * (2.0 * b * tc + alpha * tau_s * tau_s)};
    segs.falling = {nc + nd, ns, alpha * tau_s, 0.0, -pi * (4.0 * b * tau_s + alpha * tau_s * tau_s)};
    return segs;
}

BeatSignal analytic_beat(const WaveformSpec &spec, double tau_s)
{
    const BeatSegments segs = analytic_segments(spec, tau_s);

    BeatSignal beat;
    beat.sample_rate_hz = spec.sample_rate_hz;
    beat.spec = spec;
    beat.samples.assign(spec.symbol_samples(), cdouble{0.0, 0.0});
    for (const BeatSegment *seg : {&segs.rising, &segs.transition, &segs.falling})
        for (std::size_t n = seg->n_begin; n < seg->n_end; ++n)
            beat.samples[n] = std::polar(1.0, segment_phase(*seg, static_cast<double>(n) / spec.sample_rate_hz));
    return beat;
}

PhaseConsistency phase_consistency(const WaveformSpec &spec, double tau_s, double tolerance_rad)
{
    check_delay(spec, tau_s);
    const double alpha = spec.slope();
    const double b = spec.bandwidth_hz;

    PhaseConsistency pc;
    pc.phi_seg3_start = wrap_phase(pi * (alpha * tau_s * tau_s - 2.0 * b * tau_s));
    pc.phi_extended = wrap_phase(pi * (-alpha * tau_s * tau_s - 2.0 * b * tau_s));
    // Sum is -2 pi (2 B tau); reduce the index first so large tau keeps full precision.
    const double index = 2.0 * b * tau_s;
    pc.mismatch = wrap_phase(-2.0 * pi * (index - std::round(index)));
    pc.consistent = std::abs(pc.mismatch) < tolerance_rad;
    return pc;
}

BeatSignal reference_beat(const WaveformSpec &spec, double tau_s)
{
    spec.validate();
    check_delay(spec, tau_s);

    const double alpha = spec.slope();
    const std::size_t ns = spec.symbol_samples();
    const std::size_t nd = delay_samples(tau_s, spec.sample_rate_hz);
    const double offset = pi * alpha * tau_s * tau_s - 2.0 * pi * spec.start_freq_hz * tau_s;

    BeatSignal beat;
    beat.sample_rate_hz = spec.sample_rate_hz;
    beat.spec = spec;
    beat.samples.assign(ns, cdouble{0.0, 0.0});
    for (std::size_t n = nd; n < ns; ++n)
    {
        const double t = static_cast<double>(n) / spec.sample_rate_hz;
        beat.samples[n] = std::polar(1.0, -2.0 * pi * alpha * tau_s * t + offset);
    }
    return beat;
}

} // namespace trifmcw
