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

#pragma once

#include <string>
#include <vector>

#include "genjac/coeffs.hpp"

namespace genjac {

enum class Basis { Plain, Shifted };

Basis parse_basis(const std::string& name);
std::string to_string(Basis basis);

/// Serializable coefficient table. Coefficients run from low to high degree,
/// in powers of x (Plain) or of x+1 / x-1 for families a / b (Shifted).
struct TableDocument {
  struct Entry {
    unsigned i = 0;
    std::vector<Rational> coeffs;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  Rational alpha;
  Rational beta;
  std::string family;
  unsigned i_max = 0;
  std::string tool_version;
  Basis basis = Basis::Plain;
  std::vector<Entry> entries;

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// Throws Error(Parse) for a shifted basis on a family other than a or b.
TableDocument make_table_document(const CoefficientTable& table, unsigned i_max,
                                  Basis basis = Basis::Plain);

std::string to_json(const TableDocument& doc);
/// Throws Error(Parse) on malformed input.
TableDocument parse_json(const std::string& text);

/// Header `i,deg,coeff`, one row per stored coefficient.
std::string to_csv(const TableDocument& doc);
/// Entries only; metadata is not carried by CSV.
std::vector<TableDocument::Entry> parse_csv(const std::string& text);

}  // namespace genjac
