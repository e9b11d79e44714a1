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
#include "oracles.hpp"

#include "trifmcw/dft.hpp"

#include <random>
#include <thread>

using oracle::cd;

namespace
{

std::vector<cd> random_signal(std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    std::vector<cd> x(n);
    for (auto &z : x)
        z = {g(rng), g(rng)};
    return x;
}

double max_err(const std::vector<cd> &a, const std::vector<cd> &b)
{
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

} // namespace

TEST_CASE("complex dft matches the direct sum")
{
    for (std::size_t n : {1u, 2u, 7u, 31u, 64u, 100u, 257u})
    {
        const auto x = random_signal(n, static_cast<unsigned>(n));
        const auto got = trifmcw::dft(x);
        const auto want = oracle::naive_dft(x);
        REQUIRE(got.size() == n);
        CHECK(max_err(got, want) < 1e-9 * static_cast<double>(n));
    }
}

TEST_CASE("real dft returns the full hermitian spectrum")
{
    for (std::size_t n : {2u, 9u, 50u, 128u})
    {
        const auto z = random_signal(n, 3);
        std::vector<double> re(n);
        std::vector<cd> as_complex(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            re[i] = z[i].real();
            as_complex[i] = re[i];
        }
        const auto got = trifmcw::dft_real(re);
        CHECK(max_err(got, oracle::naive_dft(as_complex)) < 1e-9 * static_cast<double>(n));
        for (std::size_t k = 1; k < n; ++k)
            CHECK(std::abs(got[k] - std::conj(got[n - k])) < 1e-12 * static_cast<double>(n));
    }
}

TEST_CASE("dft is safe to call from several threads")
{
    const auto x = random_signal(480, 11);
    const auto want = trifmcw::dft(x);
    std::vector<std::vector<cd>> got(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < got.size(); ++i)
        pool.emplace_back([&, i] {
            for (int r = 0; r < 20; ++r)
                got[i] = trifmcw::dft(x);
        });
    for (auto &t : pool)
        t.join();
    for (const auto &g : got)
        CHECK(max_err(g, want) == 0.0);
}

TEST_CASE("empty input gives an empty spectrum")
{
    CHECK(trifmcw::dft(std::vector<cd>{}).empty());
    CHECK(trifmcw::dft_real(std::vector<double>{}).empty());
}
