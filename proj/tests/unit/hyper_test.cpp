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
#include "genjac/hyper.hpp"

using namespace genjac;
using genjac::test::q;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("pfq examples") {
  CHECK(pfq_unit({{Rational(-2), Rational(3)}, {Rational(5)}}) == q("1/5"));
  CHECK(pfq_unit({{Rational(0), q("7/3")}, {q("-5/2")}}) == Rational(1));
  CHECK(pfq_unit({{Rational(-1), Rational(2), Rational(3)}, {Rational(4), Rational(5)}}) == q("7/10"));
  CHECK(pfq({{Rational(-1), Rational(1)}, {Rational(1)}}, Rational(3)) == Rational(-2));
}

TEST_CASE("pfq termination and errors") {
  CHECK(termination_index({{Rational(-4), Rational(-2), q("1/2")}, {Rational(3)}}) == 2);
  CHECK(kind_of([] { (void)pfq_unit({{q("1/2"), Rational(3)}, {Rational(5)}}); }) ==
        ErrorKind::NonTerminating);
  CHECK(kind_of([] { (void)pfq_unit({{Rational(-3), Rational(1)}, {Rational(-1)}}); }) ==
        ErrorKind::InvalidDenominator);
  // A denominator pole beyond the termination index is harmless.
  CHECK(pfq_unit({{Rational(-1), Rational(1)}, {Rational(-1)}}) == Rational(2));
}

TEST_CASE("f_sum examples") {
  const Rational b = q("-13/4");
  CHECK(f_sum(q("2/9"), b, 0) == b);
  CHECK(f_sum(Rational(1), Rational(2), 1) == Rational(6));
  CHECK(f_sum(Rational(2), Rational(3), 2) == Rational(60));
  CHECK(f_sum_closed(Rational(2), Rational(3), 2) == Rational(60));
}

TEST_CASE("Vandermonde sum on random parameters") {
  test::RationalSource src(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a = src.next();
    const Rational b = src.next_fraction();
    for (unsigned n = 0; n <= 12; ++n)
      CHECK(pfq_unit({{-Rational(n), a}, {b}}) == vandermonde_closed(a, b, n));
  }
}

TEST_CASE("F_n closed form on random parameters") {
  test::RationalSource src(22);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational a = src.next_fraction();
    const Rational b = src.next_fraction() + Rational(1, 7);
    if ((b - a).is_integer()) continue;
    for (unsigned n = 0; n <= 12; ++n) CHECK(f_sum(a, b, n) == f_sum_closed(a, b, n));
  }
}

TEST_CASE("well-poised sum and its specialization") {
  test::RationalSource src(23);
  int done = 0;
  while (done < 30) {
    const Rational a = src.next_fraction();
    const Rational b = src.next_fraction();
    const Rational c = src.next_fraction() + Rational(1, 5);
    if ((b - a).is_integer() || (b - c).is_integer()) continue;
    ++done;
    for (unsigned n = 0; n <= 10; ++n) {
      CHECK(well_poised_sum(a, b, c, n) == well_poised_closed(a, b, c, n));
      CHECK(well_poised_sum(a, b, b + Rational(n + 1), n) == f_sum_closed(a, b, n));
    }
  }
}

TEST_CASE("terminating transformation formulas") {
  test::RationalSource src(24);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational b = src.next(), c = src.next(), p = src.next();
    const Rational d = src.next_fraction(), e = src.next_fraction(), qq = src.next_fraction();
    for (unsigned n = 0; n <= 6; ++n) {
      const Rational a = -Rational(n);
      for (const Rational& z : {q("1/4"), q("-1/3"), Rational(1)}) {
        CHECK(pfq({{a, b, p}, {c + Rational(1, 2), qq}}, z) ==
              expand_3f2(a, b, p, c + Rational(1, 2), qq, z));
        CHECK(pfq({{a, b, c, p}, {d, e, qq}}, z) == expand_4f3(a, b, c, p, d, e, qq, z));
      }
    }
  }
}

TEST_CASE("transformation requires a terminating first parameter") {
  CHECK(kind_of([] {
          (void)expand_3f2(q("1/2"), Rational(1), Rational(-2), q("3/2"), q("5/2"), q("1/4"));
        }) == ErrorKind::NonTerminating);
}
