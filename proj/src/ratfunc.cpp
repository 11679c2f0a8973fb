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

#include "genjac/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

#include "genjac/error.hpp"

namespace genjac {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  num_ /= lead;
  den_ /= lead;
}

Rational RatFunc::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_(at) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.num_.is_zero()) throw std::domain_error("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << '(' << f.num().to_string('t') << ")/(" << f.den().to_string('t') << ')';
}

RatFunc pow(const RatFunc& f, unsigned exponent) {
  return RatFunc(pow(f.num(), exponent), pow(f.den(), exponent));
}

RatFunc pochhammer(const RatFunc& a, unsigned k) {
  RatFunc result(1);
  RatFunc factor = a;
  for (unsigned j = 0; j < k; ++j) {
    result *= factor;
    factor += RatFunc(1);
  }
  return result;
}

Rational limit_at_infinity(const RatFunc& f) {
  const int dn = f.num().degree();
  const int dd = f.den().degree();
  if (dn > dd) throw Error(ErrorKind::DivergesAtInfinity, "numerator degree exceeds denominator degree");
  if (dn < dd) return Rational(0);
  return f.num().leading() / f.den().leading();
}

}  // namespace genjac
