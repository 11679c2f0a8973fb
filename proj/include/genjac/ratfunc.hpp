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

#include <iosfwd>

#include "genjac/poly.hpp"

namespace genjac {

/// Rational function num(t)/den(t) in one parameter t, kept reduced with a
/// monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  template <std::integral T>
  RatFunc(T c) : RatFunc(Rational(c)) {}  // NOLINT(implicit)
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
  /// Throws std::domain_error if den is zero.
  RatFunc(Poly num, Poly den);

  /// The parameter t itself.
  static RatFunc t() { return RatFunc(Poly::x()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Throws std::domain_error at a pole.
  Rational operator()(const Rational& at) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

RatFunc pow(const RatFunc& f, unsigned exponent);

/// Rising factorial over rational functions.
RatFunc pochhammer(const RatFunc& a, unsigned k);

/// Limit as t -> infinity. Zero when deg num < deg den, the ratio of leading
/// coefficients when the degrees agree; Error(DivergesAtInfinity) otherwise.
Rational limit_at_infinity(const RatFunc& f);

}  // namespace genjac
