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

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genjac/rational.hpp"

namespace genjac {

/// Dense univariate polynomial over the rationals. coeffs()[k] is the
/// coefficient of x^k; trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(implicit): constants promote freely
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs)
      : Poly(std::vector<Rational>(coeffs)) {}

  /// The monomial x.
  static Poly x() { return Poly({Rational(0), Rational(1)}); }
  /// The linear polynomial u*x + v.
  static Poly linear(const Rational& u, const Rational& v) { return Poly({v, u}); }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  /// Division by a nonzero scalar.
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator+(Poly a, const Rational& c) { return a += Poly(c); }
  friend Poly operator-(Poly a, const Rational& c) { return a -= Poly(c); }
  friend Poly operator+(const Rational& c, Poly a) { return a += Poly(c); }
  friend Poly operator-(const Rational& c, const Poly& a) { return Poly(c) -= a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly pow(const Poly& p, unsigned exponent);

/// First derivative.
Poly derivative(const Poly& p);
/// k-th derivative.
Poly derivative(const Poly& p, unsigned k);

/// q(x) = p(u x + v).
Poly affine_substitute(const Poly& p, const Rational& u, const Rational& v);

/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

/// Coefficients of p in powers of (x - center), low to high.
std::vector<Rational> shifted_coeffs(const Poly& p, const Rational& center);

/// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);

}  // namespace genjac
