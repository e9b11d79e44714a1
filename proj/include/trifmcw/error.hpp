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

#include <stdexcept>
#include <string>

namespace trifmcw
{

// Invalid waveform or scenario configuration (Nyquist, sample grid, file syntax).
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Operation called with arguments outside its domain.
class ArgumentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A continuous quantity cannot be represented on the sample grid.
class PrecisionError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

} // namespace trifmcw
