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

#include <doctest.h>

#include "../support.hpp"
#include "genjac/error.hpp"
#include "genjac/table_io.hpp"

using namespace genjac;
using genjac::test::params;
using genjac::test::q;

TEST_CASE("document from a table") {
  const CoefficientTable t = build_coefficient_table(Family::A, params("0", "0"), 1);
  const TableDocument doc = make_table_document(t, 1);
  REQUIRE(doc.entries.size() == 1);
  CHECK(doc.entries[0].i == 1);
  CHECK(doc.entries[0].coeffs == std::vector<Rational>{Rational(-2), Rational(-2)});
  CHECK(doc.family == "a");
  CHECK(to_csv(doc) == "i,deg,coeff\n1,0,-2\n1,1,-2\n");
}

TEST_CASE("shifted basis") {
  const JacobiParams p = params("1/2", "1/3");
  const TableDocument a = make_table_document(build_coefficient_table(Family::A, p, 4), 4, Basis::Shifted);
  const TableDocument b = make_table_document(build_coefficient_table(Family::B, p, 4), 4, Basis::Shifted);
  for (const auto& e : a.entries) {
    CHECK(e.coeffs[0] == Rational(0));
    CHECK(e.coeffs[1] == lowest_shift_coeff_a(e.i, p));
  }
  for (const auto& e : b.entries) CHECK(e.coeffs[1] == lowest_shift_coeff_b(e.i, p));
  CHECK_THROWS_AS(make_table_document(build_coefficient_table(Family::C, p, 3), 3, Basis::Shifted), Error);
}

TEST_CASE("json round trip on random documents") {
  test::RationalSource src(51);
  for (int trial = 0; trial < 25; ++trial) {
    TableDocument doc;
    doc.alpha = src.next();
    doc.beta = src.next();
    doc.family = std::string(1, "abcCB"[trial % 5]);
    doc.i_max = static_cast<unsigned>(trial % 7);
    doc.tool_version = "1.0.0";
    doc.basis = trial % 2 ? Basis::Plain : Basis::Shifted;
    for (unsigned i = 0; i <= doc.i_max; ++i) {
      TableDocument::Entry e{i, {}};
      for (int k = 0; k < (trial + static_cast<int>(i)) % 6; ++k) e.coeffs.push_back(src.next(100000, 9999));
      doc.entries.push_back(std::move(e));
    }
    CHECK(parse_json(to_json(doc)) == doc);
    CHECK(parse_csv(to_csv(doc)).size() <= doc.entries.size());
  }
}

TEST_CASE("csv and json carry the same values") {
  const TableDocument doc =
      make_table_document(build_coefficient_table(Family::C, params("-1/2", "3/4"), 6), 6);
  const auto rows = parse_csv(to_csv(doc));
  std::vector<TableDocument::Entry> nonempty;
  for (const auto& e : doc.entries)
    if (!e.coeffs.empty()) nonempty.push_back(e);
  CHECK(rows == nonempty);
  CHECK(parse_json(to_json(doc)) == doc);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), Error);
  CHECK_THROWS_AS(parse_json(R"({"meta": {}})"), Error);
  CHECK_THROWS_AS(parse_csv("a,b\n"), Error);
  CHECK_THROWS_AS(parse_csv("i,deg,coeff\n1,1,3\n"), Error);
  CHECK_THROWS_AS(parse_basis("curved"), Error);
}
