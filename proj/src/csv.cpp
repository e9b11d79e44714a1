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

#include "trifmcw/csv.hpp"

#include "trifmcw/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace trifmcw::csv
{

namespace
{

std::string non_finite(double value)
{
    if (std::isnan(value))
        return "nan";
    return value > 0 ? "inf" : "-inf";
}

std::string relative_db(double power, double max_power)
{
    if (!(max_power > 0.0) || !(power > 0.0))
        return "-inf";
    return format_number(10.0 * std::log10(power / max_power));
}

std::vector<std::string> split(const std::string &line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

bool parse_double(std::string_view text, double &out)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

} // namespace

std::string format_number(double value)
{
    if (!std::isfinite(value))
        return non_finite(value);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

std::string format_exact(double value)
{
    if (!std::isfinite(value))
        return non_finite(value);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void write_waveform(std::ostream &os, const ComplexSignal &sig)
{
    os << "n,t,re,im\n";
    for (std::size_t n = 0; n < sig.size(); ++n)
        os << n << ',' << format_number(sig.time_of(n)) << ',' << format_number(sig.samples[n].real()) << ','
           << format_number(sig.samples[n].imag()) << '\n';
}

void write_spectrogram(std::ostream &os, const Spectrogram &sg)
{
    os << "frame,t,bin,freq_hz,power\n";
    for (std::size_t r = 0; r < sg.rows(); ++r)
    {
        const std::string t = format_number(sg.frame_center_time(r));
        for (std::size_t k = 0; k < sg.window_len; ++k)
            os << r << ',' << t << ',' << k << ',' << format_number(sg.bin_frequency(k)) << ','
               << format_number(sg.power[r][k]) << '\n';
    }
}

void write_beat(std::ostream &os, const BeatSignal &beat)
{
    os << "n,t,re,im\n";
    for (std::size_t n = 0; n < beat.size(); ++n)
        os << n << ',' << format_exact(static_cast<double>(n) / beat.sample_rate_hz) << ','
           << format_exact(beat.samples[n].real()) << ',' << format_exact(beat.samples[n].imag()) << '\n';
}

void write_profile(std::ostream &os, const RangeProfile &profile)
{
    const double max_power =
        profile.power.empty() ? 0.0 : *std::max_element(profile.power.begin(), profile.power.end());
    os << "bin_p,range_m,power,power_db\n";
    for (std::size_t k = 0; k < profile.bins(); ++k)
        os << k << ',' << format_number(profile.range_of(static_cast<double>(k))) << ','
           << format_number(profile.power[k]) << ',' << relative_db(profile.power[k], max_power) << '\n';
}

void write_peaks(std::ostream &os, const PeakSet &peaks, const RangeProfile &profile)
{
    const double max_power =
        profile.power.empty() ? 0.0 : *std::max_element(profile.power.begin(), profile.power.end());
    os << "bin_p,range_m,power,power_db\n";
    for (const auto &peak : peaks.peaks)
        os << peak.bin << ',' << format_number(peak.range_m) << ',' << format_number(peak.power) << ','
           << relative_db(peak.power, max_power) << '\n';
}

BeatTable read_beat(std::istream &is, const std::string &source)
{
    auto fail = [&](std::size_t row, const std::string &what) {
        throw ConfigError(source + ": row " + std::to_string(row) + ": " + what);
    };

    std::string line;
    if (!std::getline(is, line))
        fail(1, "missing header 'n,t,re,im'");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "n,t,re,im")
        fail(1, "expected header 'n,t,re,im', got '" + line + "'");

    BeatTable table;
    std::vector<double> times;
    std::size_t row = 1;
    while (std::getline(is, line))
    {
        ++row;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split(line);
        if (fields.size() != 4)
            fail(row, "expected 4 fields, got " + std::to_string(fields.size()));
        double values[4];
        for (int i = 0; i < 4; ++i)
            if (!parse_double(fields[i], values[i]))
                fail(row, "field " + std::to_string(i + 1) + " is not a finite number: '" + fields[i] + "'");
        if (values[0] != static_cast<double>(table.samples.size()))
            fail(row, "sample index " + fields[0] + " out of sequence");
        if (!times.empty() && !(values[1] > times.back()))
            fail(row, "time column must increase");
        times.push_back(values[1]);
        table.samples.emplace_back(values[2], values[3]);
    }
    if (table.samples.empty())
        fail(row, "no samples");

    if (times.size() >= 2)
    {
        const double step = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
        double fs = 1.0 / step;
        // t = n / fs is written exactly; integer rates survive the division up to rounding.
        if (std::abs(fs - std::round(fs)) < 1e-6 * fs)
            fs = std::round(fs);
        table.sample_rate_hz = fs;
    }
    return table;
}

void write_table(std::ostream &os, const Table &table)
{
    for (std::size_t i = 0; i < table.header.size(); ++i)
        os << (i ? "," : "") << table.header[i];
    os << '\n';
    for (const auto &row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << '\n';
    }
}

} // namespace trifmcw::csv
