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

#include <complex>
#include <span>
#include <vector>

namespace trifmcw
{

// Forward DFT, X[k] = sum_n x[n] exp(-j 2 pi k n / N). Reentrant.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x);

// Forward DFT of a real sequence, full length N (Hermitian).
std::vector<std::complex<double>> dft_real(std::span<const double> x);

} // namespace trifmcw
