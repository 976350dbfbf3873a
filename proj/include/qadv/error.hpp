// Copyright 2026 The qadv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qadv {

enum class Errc {
    NonHermitian,
    InvalidState,
    OutOfRange,
    NonUnitary,
    DegenerateOutcome,
    InvalidParams,
    NotXState,
    NotSymmetric,
    InvalidTime,
    InvalidDistribution,
    ConventionViolated,
    InvalidConfig,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::InvalidState: return "InvalidState";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NonUnitary: return "NonUnitary";
    case Errc::DegenerateOutcome: return "DegenerateOutcome";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotXState: return "NotXState";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::InvalidTime: return "InvalidTime";
    case Errc::InvalidDistribution: return "InvalidDistribution";
    case Errc::ConventionViolated: return "ConventionViolated";
    case Errc::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

/// Exception carrying a machine-checkable error kind.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qadv
