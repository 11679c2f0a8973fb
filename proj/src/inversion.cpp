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

#include "genjac/inversion.hpp"

#include <string>

#include "genjac/error.hpp"

namespace genjac {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

// Shared sum of the two inversion formulas: index i of the result is
// 2^i sum_{j=first}^{i} w(i,j) P_{i-j}^{(-a-i-1,-b-i-1)} rhs(j).
std::vector<Poly> invert(const RhsProvider& rhs, unsigned first, unsigned i_max,
                         const JacobiParams& params) {
  std::vector<Poly> rhs_values(i_max + 1);
  for (unsigned j = first; j <= i_max; ++j) rhs_values[j] = rhs(j);

  std::vector<Poly> out(i_max + 1);
  for (unsigned i = first; i <= i_max; ++i) {
    const JacobiParams reflected{-params.alpha - Rational(i + 1), -params.beta - Rational(i + 1)};
    Poly acc;
    for (unsigned j = first; j <= i; ++j) {
      if (rhs_values[j].is_zero()) continue;
      acc += inversion_weight(i, j, params.sum()) * jacobi_poly(i - j, reflected) * rhs_values[j];
    }
    out[i] = pow(kTwo, i) * acc;
  }
  return out;
}

void check_substitution(const std::vector<Poly>& coeffs, const RhsProvider& rhs, unsigned first,
                        unsigned i_max, const JacobiParams& params) {
  for (unsigned n = first; n <= i_max; ++n) {
    const Poly p = jacobi_poly(n, params);
    Poly lhs;
    for (unsigned i = first; i <= n; ++i) lhs += coeffs[i] * derivative(p, i);
    if (lhs != rhs(n))
      throw Error(ErrorKind::ResidualNonzero,
                  "inversion solution does not reproduce the right side at n=" + std::to_string(n));
  }
}

// Applies a lower-triangular matrix to a column of polynomials.
std::vector<Poly> apply_matrix(const PolyMatrix& m, const std::vector<Poly>& v) {
  std::vector<Poly> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c <= r && c < v.size(); ++c)
      if (!m[r][c].is_zero() && !v[c].is_zero()) out[r] += m[r][c] * v[c];
  return out;
}

}  // namespace

Rational inversion_weight(unsigned i, unsigned j, const Rational& param_sum) {
  if (j > i) throw Error(ErrorKind::ParamOutOfRange, "inversion weight needs j <= i");
  // (s+j+1)_{i+1} = prod_{m=0}^{i} (s+j+1+m); the m = j factor is s+2j+1.
  Rational den(1);
  for (unsigned m = 0; m <= i; ++m) {
    if (m == j) continue;
    const Rational f = param_sum + Rational(j + 1 + m);
    if (f.is_zero())
      throw Error(ErrorKind::ParamPole, "inversion weight has a pole at alpha+beta=" +
                                            param_sum.to_string());
    den *= f;
  }
  return kOne / den;
}

std::vector<Poly> solve_inv1(const RhsProvider& rhs, unsigned i_max, const JacobiParams& params) {
  std::vector<Poly> out = invert(rhs, 1, i_max, params);
  check_substitution(out, rhs, 1, i_max, params);
  return out;
}

std::vector<Poly> solve_inv2(const RhsProvider& rhs, unsigned i_max, const JacobiParams& params) {
  std::vector<Poly> out = invert(rhs, 0, i_max, params);
  check_substitution(out, rhs, 0, i_max, params);
  return out;
}

PolyMatrix identity_matrix(unsigned n) {
  PolyMatrix m(n, std::vector<Poly>(n));
  for (unsigned i = 0; i < n; ++i) m[i][i] = Poly(kOne);
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  PolyMatrix out(rows, std::vector<Poly>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

// Matrices below use 1-based (i, j) in the formulas, stored at [i-1][j-1].

PolyMatrix bidiagonal_matrix(unsigned n, const Poly& z) {
  PolyMatrix m(n, std::vector<Poly>(n));
  for (unsigned i = 1; i <= n; ++i) {
    m[i - 1][i - 1] = Poly(Rational(i));
    if (i >= 2) m[i - 1][i - 2] = z;
  }
  return m;
}

PolyMatrix bidiagonal_inverse(unsigned n, const Poly& z) {
  PolyMatrix m(n, std::vector<Poly>(n));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= i; ++j) {
      Rational scale = factorial(j - 1) / factorial(i);
      if ((i - j) % 2) scale = -scale;
      m[i - 1][j - 1] = scale * pow(z, i - j);
    }
  return m;
}

PolyMatrix tridiagonal_matrix(unsigned n) {
  PolyMatrix m(n, std::vector<Poly>(n));
  for (unsigned i = 1; i <= n; ++i) {
    m[i - 1][i - 1] = Poly(Rational(i * (i + 1)));
    if (i >= 2) m[i - 1][i - 2] = Poly::linear(Rational(2 * i), Rational(0));
    if (i >= 3) m[i - 1][i - 3] = Poly({Rational(-1), Rational(0), Rational(1)});
  }
  return m;
}

PolyMatrix tridiagonal_inverse(unsigned n) {
  PolyMatrix m(n, std::vector<Poly>(n));
  const Poly xp1 = Poly::linear(kOne, kOne);
  const Poly xm1 = Poly::linear(kOne, -kOne);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= i; ++j) {
      Rational scale = factorial(j - 1) / (kTwo * factorial(i + 1));
      if ((i - j) % 2) scale = -scale;
      m[i - 1][j - 1] = scale * (pow(xp1, i - j + 1) - pow(xm1, i - j + 1));
    }
  return m;
}

namespace {

// b_1..b_{count} (or a_*) from B_0..B_{count-1} via the bidiagonal inverse.
std::vector<Poly> recover_from_bidiagonal(const std::vector<Poly>& big, unsigned count,
                                          const Poly& z) {
  std::vector<Poly> column(big.begin(), big.begin() + count);
  std::vector<Poly> solved = apply_matrix(bidiagonal_inverse(count, z), column);
  std::vector<Poly> out(count + 1);
  for (unsigned i = 1; i <= count; ++i) out[i] = std::move(solved[i - 1]);
  return out;
}

std::vector<Poly> big_b_via_inv2(unsigned i_max, const JacobiParams& p) {
  const JacobiParams shifted = p.shifted(2, 0);
  const Poly xm1 = Poly::linear(kOne, -kOne);
  return solve_inv2(
      [&](unsigned j) {
        const Rational b0 = std::get<1>(eigen_coeffs(j + 1, p));
        return -b0 * xm1 * jacobi_poly(j, shifted);
      },
      i_max, shifted);
}

std::vector<Poly> big_a_via_inv2(unsigned i_max, const JacobiParams& p) {
  const JacobiParams shifted = p.shifted(0, 2);
  const Poly xp1 = Poly::linear(kOne, kOne);
  return solve_inv2(
      [&](unsigned j) {
        const Rational a0 = std::get<0>(eigen_coeffs(j + 1, p));
        return -a0 * xp1 * jacobi_poly(j, shifted);
      },
      i_max, shifted);
}

std::vector<Poly> big_c_via_inv2(unsigned i_max, const JacobiParams& p) {
  const JacobiParams shifted = p.shifted(2, 2);
  const Poly one_minus_x2({kOne, Rational(0), Rational(-1)});
  return solve_inv2(
      [&](unsigned j) {
        const Rational c0 = std::get<2>(eigen_coeffs(j + 2, p));
        return c0 * one_minus_x2 * jacobi_poly(j, shifted);
      },
      i_max, shifted);
}

}  // namespace

CoefficientTable coeffs_via_inversion(Family family, unsigned i_max, const JacobiParams& params) {
  require_admissible(params, "coeffs_via_inversion");
  CoefficientTable table{params, family, {}, {}};
  switch (family) {
    case Family::BigB: {
      auto big = big_b_via_inv2(i_max, params);
      for (unsigned i = 0; i <= i_max; ++i) table.entries.emplace(i, std::move(big[i]));
      break;
    }
    case Family::BigC: {
      auto big = big_c_via_inv2(i_max, params);
      for (unsigned i = 0; i <= i_max; ++i) table.entries.emplace(i, std::move(big[i]));
      break;
    }
    case Family::B:
    case Family::A: {
      if (i_max == 0) break;
      const bool is_b = family == Family::B;
      auto big = is_b ? big_b_via_inv2(i_max - 1, params) : big_a_via_inv2(i_max - 1, params);
      const Poly z = is_b ? Poly::linear(kOne, -kOne) : Poly::linear(kOne, kOne);
      auto small = recover_from_bidiagonal(big, i_max, z);
      for (unsigned i = 1; i <= i_max; ++i) table.entries.emplace(i, std::move(small[i]));
      break;
    }
    case Family::C: {
      if (i_max == 0) break;
      table.entries.emplace(1, Poly());
      if (i_max == 1) break;
      // Unknowns c_2..c_{i_max} against C_0..C_{i_max-2}.
      const unsigned count = i_max - 1;
      auto big = big_c_via_inv2(count - 1, params);
      std::vector<Poly> solved = apply_matrix(tridiagonal_inverse(count), big);
      for (unsigned k = 0; k < count; ++k) table.entries.emplace(k + 2, std::move(solved[k]));
      break;
    }
  }
  return table;
}

std::vector<Poly> coeff_a_via_inv1(unsigned i_max, const JacobiParams& p) {
  require_admissible(p, "coeff_a_via_inv1");
  const Rational s = p.sum();
  const Poly half_xp1 = Poly::linear(Rational(1, 2), Rational(1, 2));
  const JacobiParams system = p.shifted(0, 1);
  const JacobiParams target = p.shifted(0, 3);
  return solve_inv1(
      [&](unsigned n) {
        const Rational scale = -(s + kTwo) * pochhammer(p.beta + Rational(3), n - 1) *
                               pochhammer(s + Rational(3), n) /
                               (pochhammer(p.alpha + kOne, n - 1) * factorial(n));
        return scale * half_xp1 * jacobi_poly(n - 1, target);
      },
      i_max, system);
}

Poly bavinck_delta(unsigned i, unsigned j, unsigned s, const JacobiParams& params) {
  const Rational excluded = -(params.sum() + kTwo);
  if (excluded.is_nonnegative_integer())
    throw Error(ErrorKind::ParamOutOfRange,
                "delta identity undefined for -(alpha+beta+2) in {0,1,2,...}");
  if (i < j + 2 * s) throw Error(ErrorKind::ParamOutOfRange, "delta identity needs i >= j + 2s");

  const Rational sum = params.sum();
  const JacobiParams reflected{-params.alpha - Rational(i + 1), -params.beta - Rational(i + 1)};
  const JacobiParams raised = params.shifted(Rational(j), Rational(j));
  Poly acc;
  for (unsigned k = j; k <= i; ++k) {
    // (s+2k+1)/(s+j+k+1)_{i-j+1}: the factor with m = k-j cancels.
    Rational den(1);
    for (unsigned m = 0; m <= i - j; ++m) {
      if (m == k - j) continue;
      const Rational f = sum + Rational(j + k + 1 + m);
      if (f.is_zero()) throw Error(ErrorKind::ParamPole, "delta identity weight has a pole");
      den *= f;
    }
    const Rational weight = pow(Rational(k) * (Rational(k) + sum + kOne), s) / den;
    if (weight.is_zero()) continue;
    acc += weight * jacobi_poly(i - k, reflected) * jacobi_poly(k - j, raised);
  }
  return pow(kTwo, i - j) * acc;
}

Poly laguerre_poly(unsigned n, const Rational& alpha) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = pochhammer(alpha + Rational(k + 1), n - k) / (factorial(n - k) * factorial(k));
    if (k % 2) c[k] = -c[k];
  }
  return Poly(std::move(c));
}

Poly laguerre_delta(unsigned i, unsigned j, unsigned s, const Rational& alpha) {
  if (i < j + 2 * s) throw Error(ErrorKind::ParamOutOfRange, "delta identity needs i >= j + 2s");
  Poly acc;
  for (unsigned k = j; k <= i; ++k) {
    const Rational weight = pow(Rational(k), s);
    if (weight.is_zero()) continue;
    const Poly left = affine_substitute(laguerre_poly(i - k, -alpha - Rational(i + 1)),
                                        Rational(-1), Rational(0));
    acc += weight * left * laguerre_poly(k - j, alpha + Rational(j));
  }
  return acc;
}

}  // namespace genjac
