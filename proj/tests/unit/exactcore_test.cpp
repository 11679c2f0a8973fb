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
#include "genjac/ratfunc.hpp"

using namespace genjac;
using genjac::test::q;

TEST_CASE("rational parsing and canonical form") {
  CHECK(q("6/4").to_string() == "3/2");
  CHECK(q("-6/4").to_string() == "-3/2");
  CHECK(q("-8/4").to_string() == "-2");
  CHECK_THROWS_AS(Rational::parse("4/-2"), Error);
  CHECK(q("0/7").to_string() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rational(3), 2) == Rational(12));
  CHECK(pochhammer(q("-7/3"), 0) == Rational(1));
  CHECK(pochhammer(Rational(-2), 4) == Rational(0));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(q("1/2"), 2) == q("-1/8"));
}

TEST_CASE("pochhammer splits over k + m") {
  test::RationalSource src(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a = src.next();
    for (unsigned k = 0; k <= 20; k += 4)
      for (unsigned m = 0; m <= 20; m += 5)
        CHECK(pochhammer(a, k + m) == pochhammer(a, k) * pochhammer(a + Rational(k), m));
  }
}

TEST_CASE("affine substitution examples") {
  CHECK(affine_substitute(Poly::x(), Rational(-1), Rational(0)) == Poly({Rational(0), Rational(-1)}));
  CHECK(affine_substitute(Poly::x() * Poly::x(), Rational(1), Rational(1)) ==
        Poly({Rational(1), Rational(2), Rational(1)}));
  CHECK(affine_substitute(Poly({Rational(3), Rational(2)}), Rational(0), Rational(5)) == Poly(Rational(13)));
}

TEST_CASE("affine substitution is inverted by the inverse map") {
  test::RationalSource src(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly p = src.next_poly(trial % 7);
    Rational u = src.next();
    if (u.is_zero()) u = Rational(3);
    const Rational v = src.next();
    CHECK(affine_substitute(affine_substitute(p, u, v), Rational(1) / u, -v / u) == p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  test::RationalSource src(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly a = src.next_poly(trial % 5);
    const Poly b = src.next_poly((trial + 2) % 6);
    const Rational r = src.next();
    CHECK((a * b)(r) == a(r) * b(r));
    CHECK((a + b)(r) == a(r) + b(r));
    CHECK((a - b)(r) == a(r) - b(r));
  }
}

TEST_CASE("polynomial helpers") {
  const Poly x = Poly::x();
  const Poly p = pow(x + Rational(1), 3);
  CHECK(p == Poly({Rational(1), Rational(3), Rational(3), Rational(1)}));
  CHECK(derivative(p, 2) == Rational(6) * (x + Rational(1)));
  CHECK(derivative(p, 4).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(shifted_coeffs(p, Rational(-1)) ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(compose(x * x, x + Rational(1)) == pow(x + Rational(1), 2));
  const auto [quot, rem] = divmod(x * x - Rational(1), x - Rational(1));
  CHECK(quot == x + Rational(1));
  CHECK(rem.is_zero());
  CHECK(gcd(x * x - Rational(1), Rational(2) * x - Rational(2)) == x - Rational(1));
  CHECK(p.to_string() == "x^3 + 3*x^2 + 3*x + 1");
}

TEST_CASE("ratfunc limits") {
  const RatFunc t = RatFunc::t();
  CHECK(limit_at_infinity((t + RatFunc(1)) / (RatFunc(2) * t)) == q("1/2"));
  CHECK(limit_at_infinity(RatFunc(1) / (t * t + RatFunc(1))) == Rational(0));
  try {
    (void)limit_at_infinity(t * t / t);
    FAIL("expected DivergesAtInfinity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergesAtInfinity);
  }
}

TEST_CASE("ratfunc arithmetic agrees with evaluation") {
  test::RationalSource src(14);
  const RatFunc t = RatFunc::t();
  const RatFunc f = (t * t + RatFunc(q("1/3"))) / (t - RatFunc(2));
  const RatFunc g = pochhammer(t + RatFunc(q("1/2")), 3) / (t * t + RatFunc(1));
  const RatFunc sum = f + g, prod = f * g, quot = f / g;
  CHECK((f - f).is_zero());
  CHECK(f / f == RatFunc(1));
  int points = 0;
  while (points < 10) {
    const Rational r = src.next();
    if (r == Rational(2) || g(r).is_zero()) continue;
    ++points;
    CHECK(sum(r) == f(r) + g(r));
    CHECK(prod(r) == f(r) * g(r));
    CHECK(quot(r) == f(r) / g(r));
  }
  CHECK_THROWS_AS((void)f(Rational(2)), std::domain_error);
}
