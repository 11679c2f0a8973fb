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

#include "genjac/jacobi.hpp"

#include <string>
#include <vector>

#include "genjac/error.hpp"

namespace genjac {

void require_admissible(const JacobiParams& params, const char* where) {
  if (!params.admissible())
    throw Error(ErrorKind::ParamOutOfRange,
                std::string(where) + " requires alpha > -1 and beta > -1 (got alpha=" +
                    params.alpha.to_string() + ", beta=" + params.beta.to_string() + ")");
}

namespace {

// Polynomial in y = (x-1)/2 rewritten in x.
Poly from_half_shift(std::vector<Rational> coeffs_in_y) {
  return affine_substitute(Poly(std::move(coeffs_in_y)), Rational(1, 2), Rational(-1, 2));
}

}  // namespace

Poly jacobi_poly(unsigned n, const JacobiParams& params) {
  const Rational& a = params.alpha;
  const Rational& b = params.beta;
  const Rational top = Rational(n) + a + b + Rational(1);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    c[k] = pochhammer(top, k) / factorial(k) * pochhammer(a + Rational(k + 1), n - k) /
           factorial(n - k);
  return from_half_shift(std::move(c));
}

Poly jacobi_poly_alt(unsigned n, const JacobiParams& params) {
  const Rational& a = params.alpha;
  const Rational& b = params.beta;
  const Rational rn(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = pochhammer(-rn - Rational(k) - a - b, k) / factorial(k) * pochhammer(-rn - a, n - k) /
           factorial(n - k);
    if (n % 2) c[k] = -c[k];
  }
  return from_half_shift(std::move(c));
}

Rational jacobi_eigenvalue(unsigned n, const JacobiParams& params) {
  return Rational(n) * (Rational(n) + params.sum() + Rational(1));
}

Poly apply_classical_operator(const ClassicalOperator& op, const Poly& y) {
  const JacobiParams& p = op.params;
  const Poly one_minus_x2({Rational(1), Rational(0), Rational(-1)});
  const Poly drift = Poly::linear(-(p.sum() + Rational(2)), p.beta - p.alpha);
  return one_minus_x2 * derivative(y, 2) + drift * derivative(y) + op.lambda() * y;
}

}  // namespace genjac
