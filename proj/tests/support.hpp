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

#include <random>
#include <string>
#include <vector>

#include "genjac/jacobi.hpp"
#include "genjac/poly.hpp"

namespace genjac::test {

inline Rational q(const char* text) { return Rational::parse(text); }

inline JacobiParams params(const char* alpha, const char* beta) { return {q(alpha), q(beta)}; }

inline Poly x_squared_minus_one() { return Poly({Rational(-1), Rational(0), Rational(1)}); }

inline Poly reflect(const Poly& p) { return affine_substitute(p, Rational(-1), Rational(0)); }

/// The parameter grid used by the differential-equation checks.
inline std::vector<JacobiParams> main_grid() {
  return {params("0", "0"),     params("1", "0"),    params("0", "2"),  params("1", "3"),
          params("1/2", "1/2"), params("-1/2", "3/4"), params("5", "5")};
}

/// Grid with negative and non-integer values for identities that hold for all parameters.
inline std::vector<JacobiParams> wide_grid() {
  return {params("0", "0"),      params("1/2", "-1/3"), params("-5/2", "7/4"),
          params("-7", "-9/2"),  params("3", "-2/5"),   params("11/3", "5")};
}

/// Deterministic random rationals with small numerators and denominators.
class RationalSource {
 public:
  explicit RationalSource(unsigned seed) : rng_(seed) {}

  Rational next(long num_bound = 40, long den_bound = 12) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng_), den(rng_));
  }

  /// Never an integer, so shifts by integers cannot hit a pole.
  Rational next_fraction() {
    for (;;) {
      Rational r = next(60, 13);
      if (!r.is_integer()) return r;
    }
  }

  Poly next_poly(unsigned degree) {
    std::vector<Rational> c;
    for (unsigned k = 0; k <= degree; ++k) c.push_back(next());
    return Poly(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace genjac::test
