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

#include "genjac/verify.hpp"

#include <string>

#include "genjac/error.hpp"

namespace genjac {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

Poly reflect(const Poly& p) { return affine_substitute(p, Rational(-1), Rational(0)); }

// sum_{i=0}^{n} coeff_i D^i y with coeff_0 the constant eigen value.
Poly apply_series(const Rational& eigen, const std::vector<Poly>& coeffs, unsigned top,
                  const Poly& y) {
  Poly acc = eigen * y;
  for (unsigned i = 1; i <= top; ++i) {
    if (coeffs[i].is_zero()) continue;
    Poly d = derivative(y, i);
    if (d.is_zero()) break;
    acc += coeffs[i] * d;
  }
  return acc;
}

}  // namespace

DeCoefficients DeCoefficients::closed_form(const JacobiParams& params, unsigned i_max) {
  require_admissible(params, "DeCoefficients::closed_form");
  DeCoefficients out{params, std::vector<Poly>(i_max + 1), std::vector<Poly>(i_max + 1),
                     std::vector<Poly>(i_max + 1)};
  for (unsigned i = 1; i <= i_max; ++i) {
    out.a[i] = coeff_a(i, params);
    out.b[i] = coeff_b(i, params);
    out.c[i] = coeff_c(i, params);
  }
  return out;
}

bool BilinearResidual::is_zero() const { return nonzero_components().empty(); }

std::vector<std::pair<int, int>> BilinearResidual::nonzero_components() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      if (!components[p][q].is_zero()) out.emplace_back(p, q);
  return out;
}

BilinearResidual de_residual(unsigned n, const JacobiParams& params, unsigned i_max) {
  if (i_max < n)
    throw Error(ErrorKind::TruncationTooSmall,
                "i_max=" + std::to_string(i_max) + " is below n=" + std::to_string(n));
  return de_residual(n, DeCoefficients::closed_form(params, n), i_max);
}

BilinearResidual de_residual(unsigned n, const DeCoefficients& coeffs, unsigned i_max) {
  if (i_max < n)
    throw Error(ErrorKind::TruncationTooSmall,
                "i_max=" + std::to_string(i_max) + " is below n=" + std::to_string(n));
  const unsigned top = n;
  if (coeffs.a.size() <= top || coeffs.b.size() <= top || coeffs.c.size() <= top)
    throw Error(ErrorKind::TruncationTooSmall, "coefficient tables shorter than n");

  const JacobiParams& params = coeffs.params;
  const GenJacobi g = gen_jacobi_components(n, params);
  const auto [a0, b0, c0] = eigen_coeffs(n, params);
  const ClassicalOperator op{params, n};

  auto A = [&](const Poly& y) { return apply_series(a0, coeffs.a, top, y); };
  auto B = [&](const Poly& y) { return apply_series(b0, coeffs.b, top, y); };
  auto C = [&](const Poly& y) { return apply_series(c0, coeffs.c, top, y); };
  auto L = [&](const Poly& y) { return apply_classical_operator(op, y); };

  BilinearResidual out{n, params, i_max, {}};
  auto& c = out.components;
  c[0][0] = L(g.p);
  c[1][0] = A(g.p) + L(g.q);
  c[2][0] = A(g.q);
  c[0][1] = B(g.p) + L(g.r);
  c[0][2] = B(g.r);
  c[1][1] = A(g.r) + B(g.q) + C(g.p) + L(g.s);
  c[2][1] = A(g.s) + C(g.q);
  c[1][2] = B(g.s) + C(g.r);
  c[2][2] = C(g.s);
  return out;
}

std::vector<std::string> check_symmetry(unsigned i_max, const JacobiParams& params) {
  std::vector<std::string> failures;
  const JacobiParams swapped = params.swapped();
  auto sign = [](unsigned i) { return Rational(i % 2 ? -1 : 1); };

  for (unsigned i = 1; i <= i_max; ++i) {
    if (coeff_a(i, params) != sign(i) * reflect(coeff_b(i, swapped)))
      failures.push_back("a_i/b_i reflection fails at i=" + std::to_string(i));
    if (i >= 2) {
      const auto [c1, c2] = coeff_c_parts(i, params);
      const auto [s1, s2] = coeff_c_parts(i, swapped);
      if (c1 != sign(i) * reflect(s2))
        failures.push_back("c_i part reflection fails at i=" + std::to_string(i));
      if (c2 != sign(i) * reflect(s1))
        failures.push_back("c_i part reflection (second half) fails at i=" + std::to_string(i));
    }
  }
  for (unsigned n = 0; n <= i_max; ++n) {
    const auto [a0, b0, c0] = eigen_coeffs(n, params);
    const auto [sa0, sb0, sc0] = eigen_coeffs(n, swapped);
    if (a0 != sb0) failures.push_back("a_0/b_0 swap fails at n=" + std::to_string(n));
    if (c0 != sc0) failures.push_back("c_0 swap fails at n=" + std::to_string(n));
  }
  return failures;
}

std::vector<RatFunc> coeff_b_symbolic_beta(unsigned i, const Rational& alpha) {
  if (i == 0) throw Error(ErrorKind::ParamOutOfRange, "coeff_b requires i >= 1");
  const RatFunc beta = RatFunc::t();
  const RatFunc one(1);
  std::vector<RatFunc> out(i + 1);
  for (unsigned l = 0; l < i; ++l) {
    const unsigned m = i - l - 1;
    const Rational fixed = pochhammer(alpha + Rational(3), m) * pochhammer(-alpha - kTwo, m) /
                           (factorial(m + 1) * factorial(m) * factorial(l));
    if (fixed.is_zero()) continue;

    // 3F2(-l, alpha+beta+3, alpha+i-l+2; beta+i-l, i-l+1; 1) in beta.
    RatFunc series(0);
    RatFunc term(1);
    for (unsigned k = 0; k <= l; ++k) {
      series += term;
      const Rational rk(k);
      term *= RatFunc(Rational(k) - Rational(l)) * (beta + RatFunc(alpha + Rational(3) + rk)) *
              RatFunc(alpha + Rational(i - l + 2) + rk) /
              ((beta + RatFunc(Rational(i - l) + rk)) * RatFunc(Rational(i - l + 1) + rk) *
               RatFunc(rk + kOne));
    }
    out[l + 1] = (beta + RatFunc(alpha + kTwo)) * RatFunc(pow(Rational(-2), i) * fixed) * series /
                 pochhammer(beta + one, m);
  }
  return out;
}

Poly laguerre_limit_coeff(unsigned i, const Rational& alpha) {
  if (!(alpha > Rational(-1)))
    throw Error(ErrorKind::ParamOutOfRange, "laguerre_limit_coeff requires alpha > -1");
  const std::vector<RatFunc> shifted = coeff_b_symbolic_beta(i, alpha);
  // ((x-1)/2)^k at x = 1 - 2x/beta is (-x/beta)^k; scale by beta^{i-1}/(-2)^i.
  const RatFunc beta = RatFunc::t();
  const Rational scale = kOne / pow(Rational(-2), i);
  std::vector<Rational> limit(i + 1);
  for (unsigned k = 1; k <= i; ++k) {
    if (shifted[k].is_zero()) continue;
    RatFunc term = shifted[k] * RatFunc(scale);
    if (k % 2) term = -term;
    // beta^{i-1-k} may be a negative power.
    if (i - 1 >= k)
      term *= pow(beta, i - 1 - k);
    else
      term /= pow(beta, k - (i - 1));
    limit[k] = limit_at_infinity(term);
  }
  return Poly(std::move(limit));
}

Poly laguerre_limit_closed(unsigned i, const Rational& alpha) {
  std::vector<Rational> c(i + 1);
  for (unsigned j = 1; j <= i; ++j) {
    Rational v = binomial(alpha + kOne, j - 1) * binomial(alpha + kTwo, i - j) *
                 pochhammer(alpha + Rational(3), i - j);
    if ((i + j + 1) % 2) v = -v;
    c[j] = v;
  }
  return Poly(std::move(c)) / factorial(i);
}

Rational eigen_limit(unsigned n, const Rational& alpha) {
  if (n == 0) return Rational(0);
  const RatFunc beta = RatFunc::t();
  // b_0(n) = (a+b+2) (a+3)_{n-1} (a+b+3)_{n-1} / ((b+1)_{n-1} (n-1)!)
  const RatFunc b0 = (beta + RatFunc(alpha + kTwo)) *
                     RatFunc(pochhammer(alpha + Rational(3), n - 1) / factorial(n - 1)) *
                     pochhammer(beta + RatFunc(alpha + Rational(3)), n - 1) /
                     pochhammer(beta + RatFunc(1), n - 1);
  return limit_at_infinity(b0 / beta);
}

Rational eigen_limit_closed(unsigned n, const Rational& alpha) {
  if (n == 0) return Rational(0);
  return binomial(Rational(n) + alpha + kOne, n - 1);
}

}  // namespace genjac
