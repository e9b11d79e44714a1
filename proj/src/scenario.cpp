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

#include "trifmcw/scenario.hpp"

#include "trifmcw/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace trifmcw
{

namespace
{

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

class Parser
{
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(std::size_t line, const std::string &what) const
    {
        throw ConfigError(source_ + ":" + std::to_string(line) + ": " + what);
    }

    double number(std::size_t line, const std::string &key, const std::string &value) const
    {
        double out = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
        if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out))
            fail(line, "'" + key + "' expects a finite number, got '" + value + "'");
        return out;
    }

    std::uint64_t unsigned_number(std::size_t line, const std::string &key, const std::string &value) const
    {
        std::uint64_t out = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
        if (ec != std::errc() || ptr != value.data() + value.size())
            fail(line, "'" + key + "' expects an unsigned integer, got '" + value + "'");
        return out;
    }

    bool boolean(std::size_t line, const std::string &key, const std::string &value) const
    {
        if (value == "true" || value == "yes" || value == "1")
            return true;
        if (value == "false" || value == "no" || value == "0")
            return false;
        fail(line, "'" + key + "' expects true or false, got '" + value + "'");
    }

private:
    std::string source_;
};

struct PendingTap
{
    TapConfig tap;
    bool has_delay = false;
    bool has_gain = false;
};

} // namespace

double Scenario::delay_of(const TapConfig &tap) const
{
    switch (tap.unit)
    {
    case DelayUnit::Seconds:
        return tap.value;
    case DelayUnit::Index:
        return tap.value / (2.0 * bandwidth_hz);
    case DelayUnit::Range:
        return mapping.delay_for_range(tap.value);
    }
    return tap.value;
}

Scenario parse_scenario(std::istream &is, const std::string &source)
{
    Parser parser(source);
    Scenario sc;
    sc.source = source;

    std::vector<PendingTap> taps;
    auto close_tap = [&](std::size_t line) {
        if (taps.empty())
            return;
        const auto &t = taps.back();
        if (!t.has_delay)
            parser.fail(t.tap.line, "[tap] needs one of delay_seconds, delay_p or range_meters");
        if (t.tap.rayleigh && t.has_gain)
            parser.fail(t.tap.line, "[tap] sets both rayleigh and gain_re/gain_im");
        (void)line;
    };

    std::string raw;
    std::size_t line = 0;
    while (std::getline(is, raw))
    {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = trim(hash == std::string::npos ? raw : std::string_view(raw).substr(0, hash));
        if (text.empty())
            continue;
        if (text.front() == '[')
        {
            if (text != "[tap]")
                parser.fail(line, "unknown section '" + text + "' (only [tap] is supported)");
            close_tap(line);
            taps.push_back({});
            taps.back().tap.line = line;
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            parser.fail(line, "expected 'key = value', got '" + text + "'");
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        if (value.empty())
            parser.fail(line, "'" + key + "' has no value");

        if (!taps.empty())
        {
            auto &t = taps.back();
            auto set_delay = [&](DelayUnit unit) {
                if (t.has_delay)
                    parser.fail(line, "[tap] delay given twice");
                t.tap.unit = unit;
                t.tap.value = parser.number(line, key, value);
                if (t.tap.value < 0.0)
                    parser.fail(line, "'" + key + "' must be non-negative");
                t.has_delay = true;
            };
            if (key == "delay_seconds")
                set_delay(DelayUnit::Seconds);
            else if (key == "delay_p")
                set_delay(DelayUnit::Index);
            else if (key == "range_meters")
                set_delay(DelayUnit::Range);
            else if (key == "gain_re")
            {
                t.tap.gain.real(parser.number(line, key, value));
                t.has_gain = true;
            }
            else if (key == "gain_im")
            {
                t.tap.gain.imag(parser.number(line, key, value));
                t.has_gain = true;
            }
            else if (key == "rayleigh")
                t.tap.rayleigh = parser.boolean(line, key, value);
            else
                parser.fail(line, "unknown [tap] key '" + key + "'");
            continue;
        }

        if (key == "name")
            sc.name = value;
        else if (key == "methods")
        {
            sc.methods.clear();
            std::istringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
            {
                try
                {
                    sc.methods.push_back(parse_waveform_kind(trim(item)));
                }
                catch (const ConfigError &e)
                {
                    parser.fail(line, e.what());
                }
            }
            if (sc.methods.empty())
                parser.fail(line, "'methods' lists no waveform");
        }
        else if (key == "bandwidth")
            sc.bandwidth_hz = parser.number(line, key, value);
        else if (key == "chirp")
            sc.chirp_duration_s = parser.number(line, key, value);
        else if (key == "fs")
            sc.sample_rate_hz = parser.number(line, key, value);
        else if (key == "speed")
            sc.mapping.propagation_speed_mps = parser.number(line, key, value);
        else if (key == "round_trip")
            sc.mapping.round_trip = parser.boolean(line, key, value);
        else if (key == "threshold_db")
        {
            sc.threshold_db = parser.number(line, key, value);
            if (sc.threshold_db > 0.0)
                parser.fail(line, "'threshold_db' must be <= 0");
        }
        else if (key == "seed")
            sc.seed = parser.unsigned_number(line, key, value);
        else
            parser.fail(line, "unknown key '" + key + "'");
    }
    close_tap(line);

    for (const auto &t : taps)
        sc.taps.push_back(t.tap);
    return sc;
}

Scenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path.string() + ": cannot open scenario file");
    return parse_scenario(in, path.string());
}

} // namespace trifmcw
