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

#include "trifmcw/dft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <memory>
#include <mutex>

namespace trifmcw
{

namespace
{

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex &planner_mutex()
{
    static std::mutex m;
    return m;
}

struct FftwFree
{
    void operator()(void *p) const { fftw_free(p); }
};

template <typename T> using fftw_buffer = std::unique_ptr<T, FftwFree>;

class Plan
{
public:
    explicit Plan(fftw_plan p) : plan_(p) {}
    ~Plan()
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    Plan(const Plan &) = delete;
    Plan &operator=(const Plan &) = delete;

    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_;
};

} // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x)
{
    const int n = static_cast<int>(x.size());
    if (n == 0)
        return {};

    fftw_buffer<fftw_complex> in(fftw_alloc_complex(x.size()));
    fftw_buffer<fftw_complex> out(fftw_alloc_complex(x.size()));
    fftw_plan raw;
    {
        std::lock_guard lock(planner_mutex());
        raw = fftw_plan_dft_1d(n, in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    }
    Plan plan(raw);

    // std::complex<double> is layout-compatible with double[2]
    std::memcpy(in.get(), x.data(), x.size() * sizeof(fftw_complex));
    plan.execute();

    std::vector<std::complex<double>> result(x.size());
    std::memcpy(static_cast<void *>(result.data()), out.get(), x.size() * sizeof(fftw_complex));
    return result;
}

std::vector<std::complex<double>> dft_real(std::span<const double> x)
{
    const std::size_t n = x.size();
    if (n == 0)
        return {};

    const std::size_t half = n / 2 + 1;
    fftw_buffer<double> in(fftw_alloc_real(n));
    fftw_buffer<fftw_complex> out(fftw_alloc_complex(half));
    fftw_plan raw;
    {
        std::lock_guard lock(planner_mutex());
        raw = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
    }
    Plan plan(raw);

    std::copy(x.begin(), x.end(), in.get());
    plan.execute();

    std::vector<std::complex<double>> result(n);
    for (std::size_t k = 0; k < half; ++k)
        result[k] = {out.get()[k][0], out.get()[k][1]};
    for (std::size_t k = half; k < n; ++k)
        result[k] = std::conj(result[n - k]);
    return result;
}

} // namespace trifmcw
