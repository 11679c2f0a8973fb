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

#include "genjac/hyper.hpp"

#include <algorithm>
#include <optional>

#include "genjac/error.hpp"

namespace genjac {

unsigned termination_index(const PfqSpec& spec) {
  std::optional<long> best;
  for (const auto& a : spec.numerator) {
    if (!a.is_nonpositive_integer()) continue;
    auto v = a.to_long();
    if (!v) continue;
    if (!best || -*v < *best) best = -*v;
  }
  if (!best) throw Error(ErrorKind::NonTerminating, "no nonpositive integer numerator parameter");
  return static_cast<unsigned>(*best);
}

Rational pfq(const PfqSpec& spec, const Rational& z) {
  const unsigned length = termination_index(spec);
  Rational term(1);
  Rational sum(1);
  for (unsigned k = 0; k < length; ++k) {
    Rational num(1), den(k + 1);
    for (const auto& a : spec.numerator) num *= a + Rational(k);
    for (const auto& b : spec.denominator) {
      const Rational f = b + Rational(k);
      if (f.is_zero())
        throw Error(ErrorKind::InvalidDenominator,
                    "denominator parameter " + b.to_string() + " vanishes at term " +
                        std::to_string(k + 1));
      den *= f;
    }
    term *= num * z / den;
    sum += term;
  }
  return sum;
}

Rational f_sum(const Rational& a, const Rational& b, unsigned n) {
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational den = pochhammer(b - a + Rational(1), k) * factorial(k);
    if (den.is_zero()) throw Error(ErrorKind::InvalidDenominator, "(b-a+1)_k vanishes");
    sum += pochhammer(a, k) * pochhammer(b, k) / den * (b + Rational(2 * k));
  }
  return sum;
}

Rational f_sum_closed(const Rational& a, const Rational& b, unsigned n) {
  const Rational den = pochhammer(b - a + Rational(1), n) * factorial(n);
  if (den.is_zero()) throw Error(ErrorKind::InvalidDenominator, "(b-a+1)_n vanishes");
  return pochhammer(a + Rational(1), n) * pochhammer(b, n + 1) / den;
}

Rational well_poised_sum(const Rational& a, const Rational& b, const Rational& c, unsigned n) {
  const Rational one(1);
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational num = pochhammer(-Rational(n), k) * pochhammer(a, k) * pochhammer(b, k) *
                         pochhammer(c, k);
    const Rational den = pochhammer(b + Rational(n) + one, k) * pochhammer(b - a + one, k) *
                         pochhammer(b - c + one, k) * factorial(k);
    if (den.is_zero()) throw Error(ErrorKind::InvalidDenominator, "well-poised denominator vanishes");
    sum += num / den * (b + Rational(2 * k));
  }
  return sum;
}

Rational well_poised_closed(const Rational& a, const Rational& b, const Rational& c, unsigned n) {
  const Rational one(1);
  const Rational den = pochhammer(b - a + one, n) * pochhammer(b - c + one, n);
  if (den.is_zero()) throw Error(ErrorKind::InvalidDenominator, "well-poised closed form pole");
  return pochhammer(b, n + 1) * pochhammer(b - a - c + one, n) / den;
}

Rational vandermonde_closed(const Rational& a, const Rational& b, unsigned n) {
  const Rational den = pochhammer(b, n);
  if (den.is_zero()) throw Error(ErrorKind::InvalidDenominator, "(b)_n vanishes");
  return pochhammer(b - a, n) / den;
}

namespace {

unsigned outer_length(const Rational& a) {
  if (!a.is_nonpositive_integer())
    throw Error(ErrorKind::NonTerminating, "expansion requires a nonpositive integer parameter");
  return static_cast<unsigned>(-*a.to_long());
}

}  // namespace

Rational expand_3f2(const Rational& a, const Rational& b, const Rational& p,
                    const Rational& c, const Rational& q, const Rational& z) {
  const unsigned length = outer_length(a);
  Rational sum(0);
  for (unsigned n = 0; n <= length; ++n) {
    const Rational rn(n);
    const Rational den = pochhammer(c, n) * pochhammer(q, n) * factorial(n);
    if (den.is_zero()) throw Error(ErrorKind::InvalidDenominator, "expansion coefficient pole");
    Rational coef = pochhammer(a, n) * pochhammer(b, n) * pochhammer(q - p, n) / den * pow(z, n);
    if (n % 2) coef = -coef;
    if (coef.is_zero()) continue;
    sum += coef * pfq(PfqSpec{{rn + a, rn + b}, {rn + c}}, z);
  }
  return sum;
}

Rational expand_4f3(const Rational& a, const Rational& b, const Rational& c, const Rational& p,
                    const Rational& d, const Rational& e, const Rational& q, const Rational& z) {
  const unsigned length = outer_length(a);
  Rational sum(0);
  for (unsigned n = 0; n <= length; ++n) {
    const Rational rn(n);
    const Rational den = pochhammer(d, n) * pochhammer(e, n) * pochhammer(q, n) * factorial(n);
    if (den.is_zero()) throw Error(ErrorKind::InvalidDenominator, "expansion coefficient pole");
    Rational coef = pochhammer(a, n) * pochhammer(b, n) * pochhammer(c, n) *
                    pochhammer(q - p, n) / den * pow(z, n);
    if (n % 2) coef = -coef;
    if (coef.is_zero()) continue;
    sum += coef * pfq(PfqSpec{{rn + a, rn + b, rn + c}, {rn + d, rn + e}}, z);
  }
  return sum;
}

}  // namespace genjac
