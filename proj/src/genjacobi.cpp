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

#include "genjac/genjacobi.hpp"

#include "genjac/error.hpp"

namespace genjac {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

Rational q_scale(unsigned n, const JacobiParams& p) {
  return pochhammer(p.beta + kTwo, n - 1) * pochhammer(p.sum() + kTwo, n - 1) /
         (pochhammer(p.alpha + kOne, n) * factorial(n));
}

Rational r_scale(unsigned n, const JacobiParams& p) {
  return pochhammer(p.alpha + kTwo, n - 1) * pochhammer(p.sum() + kTwo, n - 1) /
         (pochhammer(p.beta + kOne, n) * factorial(n));
}

Rational s_scale(unsigned n, const JacobiParams& p) {
  return pochhammer(p.sum() + kTwo, n) * pochhammer(p.sum() + kTwo, n - 1) /
         ((p.alpha + kOne) * (p.beta + kOne) * factorial(n) * factorial(n - 1));
}

// Prefactor shared by the contiguous and derivative forms of Q_n.
Rational q_alt_scale(unsigned n, const JacobiParams& p) {
  return pochhammer(p.beta + kTwo, n - 1) * pochhammer(p.sum() + kTwo, n - 1) /
         (pochhammer(p.alpha + kOne, n - 1) * factorial(n));
}

Rational r_alt_scale(unsigned n, const JacobiParams& p) {
  return pochhammer(p.alpha + kTwo, n - 1) * pochhammer(p.sum() + kTwo, n - 1) /
         (pochhammer(p.beta + kOne, n - 1) * factorial(n));
}

void require_positive_degree(unsigned n, const char* where) {
  if (n == 0) throw Error(ErrorKind::ParamOutOfRange, std::string(where) + " requires n >= 1");
}

}  // namespace

GenJacobi gen_jacobi_components(unsigned n, const JacobiParams& params) {
  require_admissible(params, "gen_jacobi_components");
  GenJacobi g{n, params, jacobi_poly(n, params), {}, {}, {}};
  if (n == 0) return g;

  const Poly dp = derivative(g.p);
  const Poly lambda_p = jacobi_eigenvalue(n, params) * g.p;
  const Poly xm1 = Poly::linear(kOne, -kOne);
  const Poly xp1 = Poly::linear(kOne, kOne);
  const Rational a1 = params.alpha + kOne;
  const Rational b1 = params.beta + kOne;

  g.q = q_scale(n, params) * (lambda_p - b1 * xm1 * dp);
  g.r = r_scale(n, params) * (lambda_p - a1 * xp1 * dp);
  g.s = s_scale(n, params) * (lambda_p - (b1 * xm1 + a1 * xp1) * dp);
  return g;
}

Poly gen_jacobi_eval(const GenJacobi& g, const MassParams& masses) {
  return g.p + masses.m * g.q + masses.n * g.r + (masses.m * masses.n) * g.s;
}

namespace alt {

Poly q_from_contiguous(unsigned n, const JacobiParams& params) {
  require_positive_degree(n, "q_from_contiguous");
  return q_alt_scale(n, params) *
         (Rational(n) * jacobi_poly(n, params) +
          (params.beta + kOne) * jacobi_poly(n - 1, params.shifted(0, 1)));
}

Poly q_from_derivative(unsigned n, const JacobiParams& params) {
  require_positive_degree(n, "q_from_derivative");
  return q_alt_scale(n, params) * Poly::linear(kOne, kOne) *
         derivative(jacobi_poly(n, params.shifted(-1, 1)));
}

Poly r_from_contiguous(unsigned n, const JacobiParams& params) {
  require_positive_degree(n, "r_from_contiguous");
  return r_alt_scale(n, params) *
         (Rational(n) * jacobi_poly(n, params) -
          (params.alpha + kOne) * jacobi_poly(n - 1, params.shifted(1, 0)));
}

Poly r_from_derivative(unsigned n, const JacobiParams& params) {
  require_positive_degree(n, "r_from_derivative");
  return r_alt_scale(n, params) * Poly::linear(kOne, -kOne) *
         derivative(jacobi_poly(n, params.shifted(1, -1)));
}

Poly s_from_second_derivative(unsigned n, const JacobiParams& params) {
  require_positive_degree(n, "s_from_second_derivative");
  const Poly x2m1({Rational(-1), Rational(0), Rational(1)});
  return s_scale(n, params) * x2m1 * derivative(jacobi_poly(n, params), 2);
}

}  // namespace alt

std::tuple<Rational, Rational, Rational> connection_leading_coeffs(unsigned n,
                                                                   const JacobiParams& p) {
  require_positive_degree(n, "connection_leading_coeffs");
  const Rational common = pochhammer(p.sum() + kTwo, n - 1);
  const Rational q = pochhammer(p.beta + kTwo, n - 1) * common /
                     (pochhammer(p.alpha + kOne, n - 1) * factorial(n - 1));
  const Rational r = pochhammer(p.alpha + kTwo, n - 1) * common /
                     (pochhammer(p.beta + kOne, n - 1) * factorial(n - 1));
  const Rational s = Rational(n) * Rational(n - 1) / ((p.alpha + kOne) * (p.beta + kOne)) *
                     pochhammer(p.sum() + kTwo, n) * common /
                     (factorial(n) * factorial(n - 1));
  return {q, r, s};
}

std::pair<Rational, Rational> boundary_values(unsigned n, const JacobiParams& p) {
  require_positive_degree(n, "boundary_values");
  const Rational p_plus = pochhammer(p.alpha + kOne, n) / factorial(n);
  Rational p_minus = pochhammer(p.beta + kOne, n) / factorial(n);
  if (n % 2) p_minus = -p_minus;
  const Rational common = pochhammer(p.sum() + kTwo, n) / factorial(n - 1);
  const Rational q1 = pochhammer(p.beta + kTwo, n - 1) * common / pochhammer(p.alpha + kOne, n) *
                      p_plus;
  const Rational r1 = pochhammer(p.alpha + kTwo, n - 1) * common / pochhammer(p.beta + kOne, n) *
                      p_minus;
  return {q1, r1};
}

Rational inner_product(const Poly& f, const Poly& g, const JacobiParams& params,
                       const MassParams& masses) {
  if (!params.alpha.is_nonnegative_integer() || !params.beta.is_nonnegative_integer())
    throw Error(ErrorKind::NonIntegerParams,
                "inner_product needs nonnegative integer alpha and beta");
  const auto a = static_cast<unsigned>(*params.alpha.to_long());
  const auto b = static_cast<unsigned>(*params.beta.to_long());

  // Normalization (a+b+1)! / (2^{a+b+1} a! b!).
  const Rational norm = factorial(a + b + 1) / (pow(kTwo, a + b + 1) * factorial(a) * factorial(b));

  const Poly integrand = pow(Poly::linear(-kOne, kOne), a) * pow(Poly::linear(kOne, kOne), b) * f * g;
  Rational integral(0);
  auto c = integrand.coeffs();
  for (std::size_t k = 0; k < c.size(); k += 2) integral += c[k] * kTwo / Rational(k + 1);

  return norm * integral + masses.m * f(-kOne) * g(-kOne) + masses.n * f(kOne) * g(kOne);
}

}  // namespace genjac
