/*
   Copyright 2026 The genjac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "genjac/error.hpp"

namespace genjac {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivergesAtInfinity: return "DivergesAtInfinity";
    case ErrorKind::InvalidDenominator: return "InvalidDenominator";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NonIntegerParams: return "NonIntegerParams";
    case ErrorKind::ResidualNonzero: return "ResidualNonzero";
    case ErrorKind::ParamPole: return "ParamPole";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace genjac
