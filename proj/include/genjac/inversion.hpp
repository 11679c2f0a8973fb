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

#include <functional>
#include <vector>

#include "genjac/coeffs.hpp"

namespace genjac {

/// Right-hand side j -> F_j(x) (or G_j(x)) of a triangular derivative system.
using RhsProvider = std::function<Poly(unsigned)>;

/// (a+b+2j+1) / (a+b+j+1)_{i+1} for 0 <= j <= i, with the factor
/// a+b+2j+1 cancelled against the Pochhammer before evaluation; finite at
/// a+b+1 = 0. Throws Error(ParamPole) if a remaining factor vanishes,
/// Error(ParamOutOfRange) if j > i.
Rational inversion_weight(unsigned i, unsigned j, const Rational& param_sum);

/// Solves sum_{i>=1} A_i D^i P_n^{(a,b)} = F_n for n = 1..i_max.
/// Result index i holds A_i; index 0 is the zero polynomial. The solution is
/// substituted back and Error(ResidualNonzero) is thrown if it fails.
std::vector<Poly> solve_inv1(const RhsProvider& rhs, unsigned i_max, const JacobiParams& params);

/// Solves sum_{i>=0} B_i D^i P_n^{(a,b)} = G_n for n = 0..i_max.
/// Result index i holds B_i.
std::vector<Poly> solve_inv2(const RhsProvider& rhs, unsigned i_max, const JacobiParams& params);

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix identity_matrix(unsigned n);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// n x n lower bidiagonal matrix with i on the diagonal and z below it.
PolyMatrix bidiagonal_matrix(unsigned n, const Poly& z);
/// Closed-form inverse of bidiagonal_matrix: (-1)^{i-j} (j-1)! z^{i-j} / i!.
PolyMatrix bidiagonal_inverse(unsigned n, const Poly& z);

/// n x n lower tridiagonal matrix with i(i+1), 2ix, x^2-1 on the diagonals.
PolyMatrix tridiagonal_matrix(unsigned n);
/// Closed-form inverse
/// (-1)^{i-j} (j-1)! [(x+1)^{i-j+1} - (x-1)^{i-j+1}] / (2 (i+1)!).
PolyMatrix tridiagonal_inverse(unsigned n);

/// Coefficient table computed by the inversion route: B_i (resp. A_i, C_i)
/// from the triangular system with shifted parameters, then b_i, a_i, c_i
/// by banded inversion. Independent of the hypergeometric closed forms in
/// coeffs.hpp apart from the eigenvalue constants.
CoefficientTable coeffs_via_inversion(Family family, unsigned i_max, const JacobiParams& params);

/// a_1..a_{i_max} from the first-kind system with parameters (a, b+1).
/// Result index i holds a_i.
std::vector<Poly> coeff_a_via_inv1(unsigned i_max, const JacobiParams& params);

/// Left side of the Jacobi delta identity
///   2^{i-j} sum_{k=j}^{i} (a+b+2k+1)/(a+b+j+k+1)_{i-j+1} [k(k+a+b+1)]^s
///                         P_{i-k}^{(-a-i-1,-b-i-1)} P_{k-j}^{(a+j,b+j)},
/// which equals (x^2-1)^s when i = j+2s and vanishes for larger i.
/// Refuses (Error(ParamOutOfRange)) parameters with -(a+b+2) in {0,1,2,...};
/// Error(ParamOutOfRange) also if i < j + 2s.
Poly bavinck_delta(unsigned i, unsigned j, unsigned s, const JacobiParams& params);

/// Laguerre polynomial L_n^{(a)}(x) from its terminating hypergeometric sum.
Poly laguerre_poly(unsigned n, const Rational& alpha);

/// Left side of the Laguerre delta identity
///   sum_{k=j}^{i} k^s L_{i-k}^{(-a-i-1)}(-x) L_{k-j}^{(a+j)}(x) = (-x)^s delta_{i,j+2s}.
Poly laguerre_delta(unsigned i, unsigned j, unsigned s, const Rational& alpha);

}  // namespace genjac
