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

#include "genjac/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "genjac/error.hpp"

namespace genjac {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, 1);
  q_ /= den;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };

  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num_part, true) || !is_int(den_part, false))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");

  mpz_class num(std::string(strip_plus(num_part)), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
  return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational result(1);
  Rational factor = a;
  for (unsigned j = 0; j < k; ++j) {
    if (factor.is_zero()) return Rational(0);
    result *= factor;
    factor += Rational(1);
  }
  return result;
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(mpq_class(f));
}

Rational binomial(const Rational& a, unsigned k) {
  Rational result(1);
  for (unsigned j = 0; j < k; ++j) result *= (a - Rational(j));
  return result / factorial(k);
}

}  // namespace genjac
