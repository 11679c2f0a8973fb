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

#include "genjac/coeffs.hpp"

#include <vector>

#include "genjac/error.hpp"
#include "genjac/hyper.hpp"

namespace genjac {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

// sum_k c[k] ((x + shift)/2)^k as a polynomial in x.
Poly half_shift_series(std::vector<Rational> c, const Rational& shift) {
  return affine_substitute(Poly(std::move(c)), Rational(1, 2), shift / kTwo);
}

Rational signed_power_of_two(long base, unsigned exponent) { return pow(Rational(base), exponent); }

// (a+b+2)^2 (a+b+3)(a+b+4) / ((a+1)(b+1)).
Rational c_prefactor(const JacobiParams& p) {
  const Rational s = p.sum();
  return (s + kTwo) * (s + kTwo) * (s + Rational(3)) * (s + Rational(4)) /
         ((p.alpha + kOne) * (p.beta + kOne));
}

Poly x_squared_minus_one() { return Poly({Rational(-1), Rational(0), Rational(1)}); }

unsigned require_nonnegative_integer(const Rational& v, const char* what) {
  if (!v.is_nonnegative_integer())
    throw Error(ErrorKind::NonIntegerParams, std::string(what) + " must be a nonnegative integer");
  return static_cast<unsigned>(*v.to_long());
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "a") return Family::A;
  if (name == "b") return Family::B;
  if (name == "c") return Family::C;
  if (name == "C") return Family::BigC;
  if (name == "B") return Family::BigB;
  throw Error(ErrorKind::Parse, "unknown coefficient family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::BigC: return "C";
    case Family::BigB: return "B";
  }
  return "?";
}

unsigned first_index(Family family) {
  return (family == Family::BigC || family == Family::BigB) ? 0 : 1;
}

std::tuple<Rational, Rational, Rational> eigen_coeffs(unsigned n, const JacobiParams& p) {
  require_admissible(p, "eigen_coeffs");
  if (n == 0) return {Rational(0), Rational(0), Rational(0)};
  const Rational s = p.sum();
  const Rational common = pochhammer(s + Rational(3), n - 1) / factorial(n - 1);
  const Rational a0 = (s + kTwo) * pochhammer(p.beta + Rational(3), n - 1) * common /
                      pochhammer(p.alpha + kOne, n - 1);
  const Rational b0 = (s + kTwo) * pochhammer(p.alpha + Rational(3), n - 1) * common /
                      pochhammer(p.beta + kOne, n - 1);
  Rational c0(0);
  if (n >= 2) {
    c0 = (s + kTwo) * (s + kTwo) * (s + Rational(3)) / ((p.alpha + kOne) * (p.beta + kOne)) *
         pochhammer(s + Rational(4), n - 1) / factorial(n - 1) * pochhammer(s + Rational(4), n - 2) /
         factorial(n - 2);
  }
  return {a0, b0, c0};
}

std::tuple<Rational, Rational, Rational> eigen_coeffs_via_partial_sums(unsigned n,
                                                                       const JacobiParams& p) {
  require_admissible(p, "eigen_coeffs_via_partial_sums");
  Rational a0(0), b0(0), c0(0);
  for (unsigned j = 1; j <= n; ++j) {
    const Rational step = jacobi_eigenvalue(j, p) - jacobi_eigenvalue(j - 1, p);
    const auto [q, r, s] = connection_leading_coeffs(j, p);
    a0 += step * q;
    b0 += step * r;
    c0 += step * s;
  }
  return {a0, b0, c0};
}

Poly coeff_a(unsigned i, const JacobiParams& p) {
  require_admissible(p, "coeff_a");
  if (i == 0) throw Error(ErrorKind::ParamOutOfRange, "coeff_a requires i >= 1");
  const Rational s = p.sum();
  std::vector<Rational> c(i + 1);
  for (unsigned l = 0; l < i; ++l) {
    const unsigned m = i - l - 1;
    Rational term = pochhammer(p.beta + Rational(3), m) * pochhammer(-p.beta - kTwo, m) /
                    (pochhammer(p.alpha + kOne, m) * factorial(m + 1) * factorial(m) * factorial(l));
    if (term.is_zero()) continue;
    term *= pfq_unit(PfqSpec{{-Rational(l), s + Rational(3), p.beta + Rational(i - l + 2)},
                             {p.alpha + Rational(i - l), Rational(i - l + 1)}});
    if (l % 2) term = -term;
    c[l + 1] = term;
  }
  return -(s + kTwo) * signed_power_of_two(2, i) * half_shift_series(std::move(c), kOne);
}

Poly coeff_b(unsigned i, const JacobiParams& p) {
  require_admissible(p, "coeff_b");
  if (i == 0) throw Error(ErrorKind::ParamOutOfRange, "coeff_b requires i >= 1");
  const Rational s = p.sum();
  std::vector<Rational> c(i + 1);
  for (unsigned l = 0; l < i; ++l) {
    const unsigned m = i - l - 1;
    Rational term = pochhammer(p.alpha + Rational(3), m) * pochhammer(-p.alpha - kTwo, m) /
                    (pochhammer(p.beta + kOne, m) * factorial(m + 1) * factorial(m) * factorial(l));
    if (term.is_zero()) continue;
    term *= pfq_unit(PfqSpec{{-Rational(l), s + Rational(3), p.alpha + Rational(i - l + 2)},
                             {p.beta + Rational(i - l), Rational(i - l + 1)}});
    c[l + 1] = term;
  }
  return (s + kTwo) * signed_power_of_two(-2, i) * half_shift_series(std::move(c), -kOne);
}

std::pair<Poly, Poly> coeff_c_parts(unsigned i, const JacobiParams& p) {
  require_admissible(p, "coeff_c");
  if (i == 0) throw Error(ErrorKind::ParamOutOfRange, "coeff_c requires i >= 1");
  if (i == 1) return {Poly(), Poly()};
  const Rational s = p.sum();
  const Rational pre = c_prefactor(p) / Rational(i);
  std::vector<Rational> c1(i), c2(i);
  for (unsigned l = 0; l + 2 <= i; ++l) {
    const unsigned m = i - l - 2;
    const Rational fact = factorial(m + 1) * factorial(m) * factorial(l) * factorial(m + 1);
    const Rational neg = pochhammer(-s - Rational(3), m);
    const Rational li(i - l);

    Rational t1 = pochhammer(p.beta + Rational(3), m) * neg / fact;
    if (!t1.is_zero()) {
      t1 *= pfq_unit(PfqSpec{{-Rational(l), s + Rational(5), s + Rational(4), p.beta + li + kOne},
                             {p.beta + Rational(3), li, li}});
      if (l % 2) t1 = -t1;
      c1[l + 1] = t1;
    }

    Rational t2 = pochhammer(p.alpha + Rational(3), m) * neg / fact;
    if (!t2.is_zero()) {
      t2 *= pfq_unit(PfqSpec{{-Rational(l), s + Rational(5), s + Rational(4), p.alpha + li + kOne},
                             {p.alpha + Rational(3), li, li}});
      c2[l + 1] = t2;
    }
  }
  const Poly x2m1 = x_squared_minus_one();
  Poly part1 = -pre * signed_power_of_two(2, i - 2) * x2m1 * half_shift_series(std::move(c1), kOne);
  Poly part2 = pre * signed_power_of_two(-2, i - 2) * x2m1 * half_shift_series(std::move(c2), -kOne);
  return {std::move(part1), std::move(part2)};
}

Poly coeff_c(unsigned i, const JacobiParams& p) {
  auto [c1, c2] = coeff_c_parts(i, p);
  return c1 + c2;
}

Poly coeff_capital_C(unsigned i, const JacobiParams& p) {
  require_admissible(p, "coeff_capital_C");
  const Rational s = p.sum();
  std::vector<Rational> c(i + 1);
  for (unsigned l = 0; l <= i; ++l) {
    const unsigned m = i - l;
    Rational term = pochhammer(p.alpha + Rational(3), m) * pochhammer(-s - Rational(3), m) /
                    (factorial(m + 1) * factorial(m) * factorial(l) * factorial(m));
    if (term.is_zero()) continue;
    term *= pfq_unit(PfqSpec{
        {-Rational(l), s + Rational(5), s + Rational(4), p.alpha + Rational(m + 3)},
        {p.alpha + Rational(3), Rational(m + 2), Rational(m + 1)}});
    c[l] = term;
  }
  const Poly one_minus_x2 = -x_squared_minus_one();
  return c_prefactor(p) * signed_power_of_two(-2, i) * one_minus_x2 *
         half_shift_series(std::move(c), -kOne);
}

Poly coeff_capital_B(unsigned i, const JacobiParams& p) {
  require_admissible(p, "coeff_capital_B");
  const Rational s = p.sum();
  std::vector<Rational> c(i + 1);
  for (unsigned l = 0; l <= i; ++l) {
    const unsigned m = i - l;
    Rational term = pochhammer(p.alpha + Rational(3), m) * pochhammer(-p.alpha - kTwo, m) /
                    (pochhammer(p.beta + kOne, m) * factorial(m) * factorial(l) * factorial(m));
    if (term.is_zero()) continue;
    term *= pfq_unit(PfqSpec{{-Rational(l), p.alpha + Rational(m + 3), s + Rational(3)},
                             {p.beta + Rational(m + 1), Rational(m + 1)}});
    c[l] = term;
  }
  return -(s + kTwo) * signed_power_of_two(-2, i) * Poly::linear(kOne, -kOne) *
         half_shift_series(std::move(c), -kOne);
}

Poly family_coeff(Family family, unsigned i, const JacobiParams& params) {
  switch (family) {
    case Family::A: return coeff_a(i, params);
    case Family::B: return coeff_b(i, params);
    case Family::C: return coeff_c(i, params);
    case Family::BigC: return coeff_capital_C(i, params);
    case Family::BigB: return coeff_capital_B(i, params);
  }
  return Poly();
}

Rational lowest_shift_coeff_a(unsigned i, const JacobiParams& p) {
  return -(p.sum() + kTwo) * pow(kTwo, i - 1) * pochhammer(p.beta + Rational(3), i - 1) *
         pochhammer(-p.beta - kTwo, i - 1) /
         (pochhammer(p.alpha + kOne, i - 1) * factorial(i) * factorial(i - 1));
}

Rational lowest_shift_coeff_b(unsigned i, const JacobiParams& p) {
  return -(p.sum() + kTwo) * pow(Rational(-2), i - 1) * pochhammer(p.alpha + Rational(3), i - 1) *
         pochhammer(-p.alpha - kTwo, i - 1) /
         (pochhammer(p.beta + kOne, i - 1) * factorial(i) * factorial(i - 1));
}

Poly top_coeff_a(const JacobiParams& p) {
  const unsigned b = require_nonnegative_integer(p.beta, "beta");
  return -pow(x_squared_minus_one(), b + 2) /
         (pochhammer(p.alpha + kOne, b + 1) * factorial(b + 2));
}

Poly top_coeff_b(const JacobiParams& p) {
  const unsigned a = require_nonnegative_integer(p.alpha, "alpha");
  return -pow(x_squared_minus_one(), a + 2) /
         (pochhammer(p.beta + kOne, a + 1) * factorial(a + 2));
}

Poly top_coeff_c(const JacobiParams& p) {
  const unsigned a = require_nonnegative_integer(p.alpha, "alpha");
  const unsigned b = require_nonnegative_integer(p.beta, "beta");
  const Rational scale = -(p.sum() + kTwo) / ((p.alpha + kOne) * (p.beta + kOne)) /
                         (factorial(a + b + 1) * factorial(a + b + 3));
  return scale * pow(x_squared_minus_one(), a + b + 3);
}

CoefficientTable build_coefficient_table(Family family, const JacobiParams& params, unsigned i_max,
                                         unsigned n_max) {
  require_admissible(params, "build_coefficient_table");
  CoefficientTable table{params, family, {}, {}};
  for (unsigned i = first_index(family); i <= i_max; ++i)
    table.entries.emplace(i, family_coeff(family, i, params));
  if (family == Family::A || family == Family::B || family == Family::C) {
    for (unsigned n = 0; n <= n_max; ++n) {
      const auto [a0, b0, c0] = eigen_coeffs(n, params);
      table.eigen.emplace(n, family == Family::A ? a0 : (family == Family::B ? b0 : c0));
    }
  }
  return table;
}

std::string OrderReport::to_string() const {
  return (kind == Kind::Finite ? "Finite(" : "ProbeExhausted(") + std::to_string(value) + ")";
}

OrderReport differential_order(const JacobiParams& params, const MassParams& masses,
                               unsigned probe_limit) {
  require_admissible(params, "differential_order");
  std::vector<Family> active;
  if (masses.m.sign() > 0) active.push_back(Family::A);
  if (masses.n.sign() > 0) active.push_back(Family::B);
  if (masses.m.sign() > 0 && masses.n.sign() > 0) active.push_back(Family::C);

  unsigned order = 2;
  for (Family family : active) {
    // Walk down from the probe boundary; the first nonzero index is the
    // family's order within the window.
    for (unsigned i = probe_limit; i >= 1 && i > order; --i) {
      if (family_coeff(family, i, params).is_zero()) continue;
      if (i == probe_limit) return {OrderReport::Kind::ProbeExhausted, probe_limit};
      order = i;
      break;
    }
  }
  return {OrderReport::Kind::Finite, order};
}

}  // namespace genjac
