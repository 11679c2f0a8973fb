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

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "genjac/genjacobi.hpp"

namespace genjac {

/// Coefficient families of the differential equation. A, B and C are the
/// series multiplying M, N and MN; BigC and BigB are the intermediates
/// C_i and B_i from which c_i and b_i are recovered by banded inversion.
enum class Family { A, B, C, BigC, BigB };

/// Parses "a", "b", "c", "C", "B". Throws Error(Parse).
Family parse_family(const std::string& name);
std::string to_string(Family family);
/// First valid index: 1 for a, b, c and 0 for C_i, B_i.
unsigned first_index(Family family);

/// The n-dependent constants (a_0(n), b_0(n), c_0(n)).
/// Throws Error(ParamOutOfRange) unless alpha, beta > -1.
std::tuple<Rational, Rational, Rational> eigen_coeffs(unsigned n, const JacobiParams& params);

/// Same values built as sums of (lambda_j - lambda_{j-1}) times the leading
/// connection coefficients q_{j,j}, r_{j,j}, s_{j,j}.
std::tuple<Rational, Rational, Rational> eigen_coeffs_via_partial_sums(unsigned n,
                                                                       const JacobiParams& params);

/// a_i(alpha, beta, x), i >= 1, from its terminating 3F2 expansion in powers
/// of (x+1)/2.
Poly coeff_a(unsigned i, const JacobiParams& params);

/// b_i(alpha, beta, x), i >= 1, expanded in powers of (x-1)/2.
Poly coeff_b(unsigned i, const JacobiParams& params);

/// The two halves (c_i^{(1)}, c_i^{(2)}) of c_i for i >= 2; both zero for i = 1.
std::pair<Poly, Poly> coeff_c_parts(unsigned i, const JacobiParams& params);

/// c_i = c_i^{(1)} + c_i^{(2)}; c_1 = 0.
Poly coeff_c(unsigned i, const JacobiParams& params);

/// C_i(x), i >= 0, from its terminating 4F3 expansion.
Poly coeff_capital_C(unsigned i, const JacobiParams& params);

/// B_i(x), i >= 0, from its terminating 3F2 expansion.
Poly coeff_capital_B(unsigned i, const JacobiParams& params);

/// Dispatch on family; i must be at least first_index(family).
Poly family_coeff(Family family, unsigned i, const JacobiParams& params);

/// Coefficient of (x+1)^1 in a_i, closed form.
Rational lowest_shift_coeff_a(unsigned i, const JacobiParams& params);
/// Coefficient of (x-1)^1 in b_i, closed form.
Rational lowest_shift_coeff_b(unsigned i, const JacobiParams& params);

/// Closed forms of the last nonzero coefficients for integer parameters:
///   a_{2b+4} = -(x^2-1)^{b+2} / ((a+1)_{b+1} (b+2)!)       (beta integer)
///   b_{2a+4} = -(x^2-1)^{a+2} / ((b+1)_{a+1} (a+2)!)       (alpha integer)
///   c_{2a+2b+6} = -(a+b+2)/((a+1)(b+1)) (x^2-1)^{a+b+3} / ((a+b+1)! (a+b+3)!)
/// Each throws Error(NonIntegerParams) when the relevant parameter is not a
/// nonnegative integer.
Poly top_coeff_a(const JacobiParams& params);
Poly top_coeff_b(const JacobiParams& params);
Poly top_coeff_c(const JacobiParams& params);

struct CoefficientTable {
  JacobiParams params;
  Family family = Family::A;
  std::map<unsigned, Poly> entries;
  std::map<unsigned, Rational> eigen;
};

/// Closed-form table for indices first_index(family)..i_max; eigen values
/// 0..n_max are filled for the A, B and C families.
CoefficientTable build_coefficient_table(Family family, const JacobiParams& params, unsigned i_max,
                                         unsigned n_max = 0);

/// Order of the equation within a finite probe window.
struct OrderReport {
  enum class Kind { Finite, ProbeExhausted } kind = Kind::Finite;
  unsigned value = 2;

  std::string to_string() const;
  friend bool operator==(const OrderReport&, const OrderReport&) = default;
};

/// Largest i <= probe_limit with a nonzero coefficient among the families
/// switched on by the masses (a for M > 0, b for N > 0, c for both), with the
/// classical order 2 as floor. Reports ProbeExhausted when the coefficient at
/// i = probe_limit is still nonzero.
OrderReport differential_order(const JacobiParams& params, const MassParams& masses,
                               unsigned probe_limit);

}  // namespace genjac
