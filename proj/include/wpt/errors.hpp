// SPDX-License-Identifier: Apache-2.0
//
// wptsim - closed-loop wireless power transfer simulator
// Copyright (C) 2026 The wptsim authors
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

#ifndef WPT_ERRORS_HPP_
#define WPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wpt
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

// Matrices, grids or codebooks that disagree on M, N or K.
class DimensionError : public Error
{
public:
    using Error::Error;
};

// Invalid configuration values or malformed configuration files.
class ConfigError : public Error
{
public:
    using Error::Error;
};

// Channel whose per-tone norms are all zero (SMF normalization undefined).
class DegenerateChannelError : public Error
{
public:
    using Error::Error;
};

// Feedback message that cannot be decoded for the given codebook size.
class ProtocolError : public Error
{
public:
    using Error::Error;
};

// Unreadable, truncated or corrupt data files. Carries the offending line.
class LoadError : public Error
{
public:
    LoadError(const std::string &what, std::size_t line = 0)
        : Error(line == 0 ? what : what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Output location that cannot be written.
class IoError : public Error
{
public:
    using Error::Error;
};

// Summary generation failure (e.g. missing baseline sweep point).
class SummaryError : public Error
{
public:
    using Error::Error;
};

} // namespace wpt

#endif
