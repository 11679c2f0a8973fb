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

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "genjac/coeffs.hpp"
#include "genjac/ratfunc.hpp"

namespace genjac {

/// Coefficients a_i, b_i, c_i plugged into the differential equation.
/// Vector index i holds the i-th coefficient; index 0 is unused (the
/// eigenvalue constants come from eigen_coeffs).
struct DeCoefficients {
  JacobiParams params;
  std::vector<Poly> a;
  std::vector<Poly> b;
  std::vector<Poly> c;

  /// Closed-form coefficients for i = 1..i_max.
  static DeCoefficients closed_form(const JacobiParams& params, unsigned i_max);
};

/// The left side of the equation applied to P_n^{a,b,M,N}, grouped by
/// powers of M and N: components[p][q] multiplies M^p N^q. Component (0,0)
/// is the classical residual; the other eight are the systems that must
/// vanish for the equation to hold.
struct BilinearResidual {
  unsigned n = 0;
  JacobiParams params;
  unsigned truncation = 0;
  std::array<std::array<Poly, 3>, 3> components;

  bool is_zero() const;
  /// (M-power, N-power) of every nonzero component.
  std::vector<std::pair<int, int>> nonzero_components() const;
};

/// Residual with closed-form coefficients. Sums are truncated at i_max,
/// which is exact once i_max >= n; throws Error(TruncationTooSmall) otherwise.
BilinearResidual de_residual(unsigned n, const JacobiParams& params, unsigned i_max);

/// Residual with caller-supplied coefficients (used to inject perturbations).
BilinearResidual de_residual(unsigned n, const DeCoefficients& coeffs, unsigned i_max);

/// Checks a_i(a,b,x) = (-1)^i b_i(b,a,-x), c^{(1)}_i(a,b,x) = (-1)^i c^{(2)}_i(b,a,-x)
/// for i <= i_max, and a_0(n,a,b) = b_0(n,b,a), c_0(n,a,b) = c_0(n,b,a) for
/// n <= i_max. Returns one message per failure.
std::vector<std::string> check_symmetry(unsigned i_max, const JacobiParams& params);

/// lim_{beta->inf} beta^{i-1}/(-2)^i b_i(alpha, beta, 1 - 2x/beta), computed
/// with beta as an exact rational-function parameter.
Poly laguerre_limit_coeff(unsigned i, const Rational& alpha);

/// (1/i!) sum_{j=1}^i (-1)^{i+j+1} C(alpha+1, j-1) C(alpha+2, i-j) (alpha+3)_{i-j} x^j.
Poly laguerre_limit_closed(unsigned i, const Rational& alpha);

/// lim_{beta->inf} b_0(n, alpha, beta) / beta via rational-function arithmetic.
Rational eigen_limit(unsigned n, const Rational& alpha);

/// Closed form C(n+alpha+1, n-1) of eigen_limit (zero for n = 0).
Rational eigen_limit_closed(unsigned n, const Rational& alpha);

/// b_i(alpha, t, x) with t symbolic: coefficient k holds the coefficient of
/// ((x-1)/2)^k as a rational function of t.
std::vector<RatFunc> coeff_b_symbolic_beta(unsigned i, const Rational& alpha);

enum class Suite { All, Hyper, Jacobi, GenJacobi, Coeffs, Inversion, Symmetry, De, Limit };

/// Parses "all", "hyper", ... Throws Error(Parse).
Suite parse_suite(const std::string& name);

struct IdentityReport {
  struct Entry {
    std::string label;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t errors = 0;
    std::string first_problem;

    bool passed() const { return failures == 0 && errors == 0; }
  };
  std::vector<Entry> entries;

  bool all_passed() const;
};

/// Runs the identities of the chosen suite for every grid point, degrees up
/// to n_max and coefficient indices up to i_max. Precondition failures
/// (e.g. alpha <= -1) are recorded against the identity, not thrown. An
/// empty grid yields an empty report.
IdentityReport check_identity_suite(const std::vector<JacobiParams>& grid, unsigned n_max,
                                    unsigned i_max, Suite suite = Suite::All);

}  // namespace genjac
