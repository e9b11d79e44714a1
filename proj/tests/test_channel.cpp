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
#include "trifmcw/error.hpp"

#include <random>

using namespace trifmcw;

namespace
{

ComplexSignal random_signal(std::size_t n, double fs, unsigned seed)
{
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    ComplexSignal s;
    s.sample_rate_hz = fs;
    s.samples.resize(n);
    for (auto &z : s.samples)
        z = {g(rng), g(rng)};
    return s;
}

double energy(const ComplexSignal &s)
{
    double e = 0.0;
    for (const auto &z : s.samples)
        e += std::norm(z);
    return e;
}

} // namespace

TEST_CASE("identity tap")
{
    const auto x = random_signal(50, 1000.0, 1);
    const auto y = apply(x, ChannelModel({{0.0, {1.0, 0.0}}}));
    CHECK(y.samples == x.samples);
    CHECK(y.sample_rate_hz == x.sample_rate_hz);
}

TEST_CASE("pure shift with zero fill")
{
    const auto x = random_signal(8, 1000.0, 2);
    const auto y = apply(x, ChannelModel({{3.0 / 1000.0, {1.0, 0.0}}}));
    REQUIRE(y.size() == 8);
    for (std::size_t n = 0; n < 3; ++n)
        CHECK(y.samples[n] == cdouble(0.0, 0.0));
    for (std::size_t n = 3; n < 8; ++n)
        CHECK(y.samples[n] == x.samples[n - 3]);
}

TEST_CASE("empty channel gives silence")
{
    const auto x = random_signal(8, 1000.0, 2);
    const auto y = apply(x, ChannelModel{});
    CHECK(y.size() == 8);
    CHECK(energy(y) == 0.0);
}

TEST_CASE("superposition over random taps")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> delay(0, 30);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial)
    {
        const double fs = 2000.0;
        const auto x = random_signal(40, fs, static_cast<unsigned>(trial));
        const int d1 = delay(rng);
        int d2 = delay(rng);
        if (d2 == d1)
            d2 = (d1 + 1) % 31;
        const cdouble g1{g(rng), g(rng)};
        const cdouble g2{g(rng), g(rng)};
        const auto both = apply(x, ChannelModel({{d1 / fs, g1}, {d2 / fs, g2}}));
        const auto a = apply(x, ChannelModel({{d1 / fs, g1}}));
        const auto b = apply(x, ChannelModel({{d2 / fs, g2}}));
        for (std::size_t n = 0; n < x.size(); ++n)
            REQUIRE(std::abs(both.samples[n] - (a.samples[n] + b.samples[n])) < 1e-12);
    }
}

TEST_CASE("unit tap energy loses only the clipped tail")
{
    const double fs = 1000.0;
    const auto x = random_signal(64, fs, 9);
    for (std::size_t d : {0u, 1u, 10u, 63u})
    {
        const auto y = apply(x, ChannelModel({{static_cast<double>(d) / fs, {1.0, 0.0}}}));
        double tail = 0.0;
        for (std::size_t n = x.size() - d; n < x.size(); ++n)
            tail += std::norm(x.samples[n]);
        CHECK(energy(y) == doctest::Approx(energy(x) - tail).epsilon(1e-12));
    }
}

TEST_CASE("taps are sorted and validated")
{
    const ChannelModel ch({{0.003, 1.0}, {0.001, 2.0}, {0.002, 3.0}}, 42);
    REQUIRE(ch.taps().size() == 3);
    CHECK(ch.taps()[0].delay_s == 0.001);
    CHECK(ch.taps()[1].delay_s == 0.002);
    CHECK(ch.taps()[2].delay_s == 0.003);
    CHECK(ch.seed() == 42);
    CHECK_THROWS_AS(ChannelModel({{0.001, 1.0}, {0.001, 2.0}}), ArgumentError);
    CHECK_THROWS_AS(ChannelModel({{-0.001, 1.0}}), ArgumentError);
    CHECK_THROWS_AS(ChannelModel({{NAN, 1.0}}), ArgumentError);
}

TEST_CASE("off-grid delay names the tap")
{
    const auto x = random_signal(100, 1000.0, 1);
    try
    {
        (void)apply(x, ChannelModel({{0.002, 1.0}, {0.0025, 1.0}}));
        FAIL("expected a precision error");
    }
    catch (const PrecisionError &e)
    {
        const std::string msg = e.what();
        CHECK(msg.find("tap 1") != std::string::npos);
        CHECK(msg.find("fs") != std::string::npos);
    }
}

TEST_CASE("delay beyond the signal is an argument error")
{
    const auto x = random_signal(10, 1000.0, 1);
    CHECK_THROWS_AS(apply(x, ChannelModel({{0.010, 1.0}})), ArgumentError);
    CHECK_NOTHROW(apply(x, ChannelModel({{0.009, 1.0}})));
}

TEST_CASE("delay for index")
{
    CHECK(delay_for_index(48.0, 8000.0) == doctest::Approx(0.003));
}

TEST_CASE("rayleigh taps are deterministic and sorted")
{
    const std::vector<double> delays{0.004, 0.001, 0.003, 0.002};
    const auto a = rayleigh_taps(delays, 7);
    const auto b = rayleigh_taps(delays, 7);
    const auto c = rayleigh_taps(delays, 8);
    REQUIRE(a.taps().size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
    {
        CHECK(a.taps()[i].gain == b.taps()[i].gain);
        CHECK(a.taps()[i].gain != c.taps()[i].gain);
        CHECK(std::abs(a.taps()[i].gain) > 0.0);
    }
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(a.taps()[i - 1].delay_s < a.taps()[i].delay_s);
    const std::vector<double> single{0.001};
    CHECK(rayleigh_taps(single, 3).taps()[0].gain == rayleigh_taps(single, 3).taps()[0].gain);
    const std::vector<double> dup{0.001, 0.001};
    CHECK_THROWS_AS(rayleigh_taps(dup, 1), ArgumentError);
}

TEST_CASE("rayleigh gains have unit mean power")
{
    std::vector<double> delays(100000);
    for (std::size_t i = 0; i < delays.size(); ++i)
        delays[i] = static_cast<double>(i);
    const auto ch = rayleigh_taps(delays, 2024);
    double p = 0.0;
    double re = 0.0;
    double im = 0.0;
    double re2 = 0.0;
    for (const auto &t : ch.taps())
    {
        p += std::norm(t.gain);
        re += t.gain.real();
        im += t.gain.imag();
        re2 += t.gain.real() * t.gain.real();
    }
    const double n = static_cast<double>(delays.size());
    CHECK(p / n >= 0.99);
    CHECK(p / n <= 1.01);
    CHECK(std::abs(re / n) < 0.01);
    CHECK(std::abs(im / n) < 0.01);
    CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.02));
}
