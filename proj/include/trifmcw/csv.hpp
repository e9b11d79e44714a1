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
#include "trifmcw/spectrum.hpp"
#include "trifmcw/waveform.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trifmcw::csv
{

// Locale-independent, 6 significant digits ("inf", "-inf", "nan" for non-finite).
std::string format_number(double value);

// Shortest representation that parses back to the same double.
std::string format_exact(double value);

// n,t,re,im
void write_waveform(std::ostream &os, const ComplexSignal &sig);

// frame,t,bin,freq_hz,power (long format, one row per frame and bin)
void write_spectrogram(std::ostream &os, const Spectrogram &sg);

// n,t,re,im with exact sample values so the beat can be reprocessed losslessly.
void write_beat(std::ostream &os, const BeatSignal &beat);

// bin_p,range_m,power,power_db with power_db relative to the profile maximum.
void write_profile(std::ostream &os, const RangeProfile &profile);
void write_peaks(std::ostream &os, const PeakSet &peaks, const RangeProfile &profile);

struct BeatTable
{
    std::vector<cdouble> samples;
    std::optional<double> sample_rate_hz; // from the t column when there are >= 2 rows
};

// Reads the n,t,re,im schema. Throws ConfigError "<source>: row R: ..." on malformed input.
BeatTable read_beat(std::istream &is, const std::string &source);

struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_table(std::ostream &os, const Table &table);

} // namespace trifmcw::csv
