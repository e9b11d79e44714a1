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

#include "doctest.h"

#include "trifmcw/channel.hpp"
#include "trifmcw/csv.hpp"
#include "trifmcw/error.hpp"

#include <clocale>
#include <sstream>

using namespace trifmcw;

namespace
{

std::vector<std::string> lines_of(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        out.push_back(line);
    return out;
}

std::string read_error(const std::string &text)
{
    std::istringstream is(text);
    try
    {
        (void)csv::read_beat(is, "beat.csv");
    }
    catch (const ConfigError &e)
    {
        return e.what();
    }
    return {};
}

BeatSignal small_beat()
{
    const auto spec = WaveformSpec::make(WaveformKind::Triangle, 400.0, 0.1);
    const auto tx = generate(spec);
    return mix(tx, apply(tx, ChannelModel{{delay_for_index(3, 400.0), {1.0, 0.0}}}), spec);
}

} // namespace

TEST_CASE("six significant digits, locale independent")
{
    CHECK(csv::format_number(0.0107187500) == "0.0107188");
    CHECK(csv::format_number(51.45) == "51.45");
    CHECK(csv::format_number(123456789.0) == "1.23457e+08");
    CHECK(csv::format_number(-2.5) == "-2.5");
    CHECK(csv::format_number(1.0 / 0.0) == "inf");
    CHECK(csv::format_number(-1.0 / 0.0) == "-inf");
    const char *old = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = old ? old : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8"))
    {
        CHECK(csv::format_number(0.5) == "0.5");
        std::setlocale(LC_NUMERIC, saved.c_str());
    }
}

TEST_CASE("exact formatting round trips")
{
    for (double v : {0.1, 1.0 / 3.0, -1e-300, 6.02214076e23, 0.0})
    {
        const auto s = csv::format_exact(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("waveform csv")
{
    const auto sig = generate(WaveformSpec::make(WaveformKind::Triangle, 400.0, 0.1));
    std::ostringstream os;
    csv::write_waveform(os, sig);
    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == sig.size() + 1);
    CHECK(lines[0] == "n,t,re,im");
    CHECK(lines[1] == "0,0,1,0");
    CHECK(lines[2].rfind("1,0.00125,", 0) == 0);
}

TEST_CASE("spectrogram csv")
{
    const auto sig = generate(WaveformSpec::make(WaveformKind::Triangle, 400.0, 0.1));
    const auto sg = spectrogram(sig, 8, 4);
    std::ostringstream os;
    csv::write_spectrogram(os, sg);
    const auto lines = lines_of(os.str());
    CHECK(lines[0] == "frame,t,bin,freq_hz,power");
    CHECK(lines.size() == sg.rows() * 8 + 1);
}

TEST_CASE("beat csv round trip is lossless")
{
    const auto beat = small_beat();
    std::ostringstream os;
    csv::write_beat(os, beat);
    std::istringstream is(os.str());
    const auto table = csv::read_beat(is, "mem");
    REQUIRE(table.samples.size() == beat.size());
    for (std::size_t n = 0; n < beat.size(); ++n)
        REQUIRE(table.samples[n] == beat.samples[n]);
    REQUIRE(table.sample_rate_hz);
    CHECK(*table.sample_rate_hz == 800.0);
}

TEST_CASE("beat csv accepts hand-made tables")
{
    std::istringstream is("n,t,re,im\r\n0,0,1,0\r\n1,0.5,1,0\r\n2, 1 ,1,0\r\n");
    const auto t = csv::read_beat(is, "hand");
    CHECK(t.samples.size() == 3);
    CHECK(*t.sample_rate_hz == 2.0);
    std::istringstream one("n,t,re,im\n0,0,1,0\n");
    CHECK_FALSE(csv::read_beat(one, "one").sample_rate_hz);
}

TEST_CASE("malformed beat csv names the row")
{
    CHECK(read_error("") == "beat.csv: row 1: missing header 'n,t,re,im'");
    CHECK(read_error("a,b\n").find("row 1") != std::string::npos);
    CHECK(read_error("n,t,re,im\n0,0,1,0\n1,0.1,x,0\n").find("row 3: field 3") != std::string::npos);
    CHECK(read_error("n,t,re,im\n0,0,1\n").find("row 2: expected 4 fields") != std::string::npos);
    CHECK(read_error("n,t,re,im\n0,0,1,0\n2,0.1,1,0\n").find("row 3: sample index") != std::string::npos);
    CHECK(read_error("n,t,re,im\n0,0,1,0\n1,0,1,0\n").find("row 3: time") != std::string::npos);
    CHECK(read_error("n,t,re,im\n0,0,inf,0\n").find("row 2") != std::string::npos);
    CHECK(read_error("n,t,re,im\n").find("no samples") != std::string::npos);
}

TEST_CASE("profile and peaks csv")
{
    RangeProfile prof;
    prof.bin_spacing_m = 0.01;
    prof.power = {0.0, 4.0, 1.0};
    std::ostringstream os;
    csv::write_profile(os, prof);
    CHECK(os.str() == "bin_p,range_m,power,power_db\n0,0,0,-inf\n1,0.01,4,0\n2,0.02,1,-6.0206\n");

    PeakSet peaks;
    peaks.peaks.push_back({1, 0.01, 4.0});
    std::ostringstream ps;
    csv::write_peaks(ps, peaks, prof);
    CHECK(ps.str() == "bin_p,range_m,power,power_db\n1,0.01,4,0\n");
}

TEST_CASE("generic table")
{
    csv::Table t{{"a", "b"}, {{"1", "2"}, {"3", "x"}}};
    std::ostringstream os;
    csv::write_table(os, t);
    CHECK(os.str() == "a,b\n1,2\n3,x\n");
}
