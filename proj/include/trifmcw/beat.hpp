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

#include <cstddef>
#include <vector>

namespace trifmcw
{

struct BeatSignal
{
    std::vector<cdouble> samples;
    double sample_rate_hz = 0.0;
    WaveformSpec spec; // transmit spec the beat was mixed against

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate_hz; }
};

/// One piece of the triangle beat on the sample grid, samples [n_begin, n_end).
///
/// Within the piece the phase is chirp_rate * pi * t^2 + 2 pi frequency_hz * t + phase_offset
/// with t in seconds from the start of the symbol; frequency_hz is the
/// instantaneous frequency at t = 0 of that law.
struct BeatSegment
{
    std::size_t n_begin = 0;
    std::size_t n_end = 0;
    double frequency_hz = 0.0;
    double chirp_rate_hz_per_s = 0.0;
    double phase_offset_rad = 0.0;

    std::size_t size() const { return n_end - n_begin; }
};

// Constant tone (-alpha tau), transition chirp (rate 2 alpha), mirrored tone (+alpha tau).
struct BeatSegments
{
    BeatSegment rising;
    BeatSegment transition;
    BeatSegment falling;
};

// Sample index where the delayed copy starts, ceil(tau fs) with a 1e-9 sample tolerance.
std::size_t delay_samples(double tau_s, double sample_rate_hz);

// out[n] = conj(tx[n]) * rx[n]. Throws ArgumentError on length or rate mismatch.
BeatSignal mix(const ComplexSignal &tx, const ComplexSignal &rx, const WaveformSpec &spec);

// Closed-form segments for a Triangle spec with f0 = 0 and 0 <= tau < T_c.
BeatSegments analytic_segments(const WaveformSpec &spec, double tau_s);

/// Closed-form triangle beat for a single unit tap of delay tau.
///
/// Zero before tau, then the three segments of analytic_segments(). The
/// transition constant is +2 B T_c, which is what conj(x) * y yields for the
/// phase-continuous mirrored ramp generated by generate().
BeatSignal analytic_beat(const WaveformSpec &spec, double tau_s);

struct PhaseConsistency
{
    double phi_seg3_start = 0.0; // pi (alpha tau^2 - 2 B tau), wrapped
    double phi_extended = 0.0;   // pi (-alpha tau^2 - 2 B tau), wrapped
    double mismatch = 0.0;       // wrap(phi_seg3_start + phi_extended)
    bool consistent = false;
};

/// Checks that the real part of the falling-ramp tone continues the rising-ramp
/// tone, i.e. phi_seg3_start == -phi_extended mod 2 pi. Holds iff 2 B tau is an
/// integer. All phases reported in (-pi, pi].
PhaseConsistency phase_consistency(const WaveformSpec &spec, double tau_s, double tolerance_rad = 1e-6);

// Single tone exp(j(-2 pi alpha tau t + pi alpha tau^2 - 2 pi f0 tau)) over the
// symbol, zero before tau: the beat an extended (2B over 2 T_c) chirp would give.
BeatSignal reference_beat(const WaveformSpec &spec, double tau_s);

// Wraps an angle to (-pi, pi].
double wrap_phase(double rad);

} // namespace trifmcw
