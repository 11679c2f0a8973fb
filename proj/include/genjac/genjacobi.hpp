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

#include <tuple>

#include "genjac/jacobi.hpp"

namespace genjac {

/// Point masses M at x = -1 and N at x = +1.
struct MassParams {
  Rational m;
  Rational n;

  bool admissible() const { return m.sign() >= 0 && n.sign() >= 0; }
};

/// The generalized Jacobi polynomial kept in components,
///   P_n^{a,b,M,N} = p + M q + N r + M N s,
/// so identities can be checked as polynomials in M and N.
struct GenJacobi {
  unsigned n = 0;
  JacobiParams params;
  Poly p;
  Poly q;
  Poly r;
  Poly s;
};

/// Builds (P_n, Q_n, R_n, S_n). Q, R, S use the defining brackets
/// n(n+a+b+1) P - (b+1)(x-1) DP and the analogues; all three vanish for n = 0.
/// Throws Error(ParamOutOfRange) unless alpha, beta > -1.
GenJacobi gen_jacobi_components(unsigned n, const JacobiParams& params);

/// p + M q + N r + M N s.
Poly gen_jacobi_eval(const GenJacobi& g, const MassParams& masses);

/// Alternative representations of the components, used as cross-checks.
/// Each requires n >= 1.
namespace alt {
/// Q_n via n P_n + (b+1) P_{n-1}^{(a,b+1)}.
Poly q_from_contiguous(unsigned n, const JacobiParams& params);
/// Q_n via (x+1) D P_n^{(a-1,b+1)}.
Poly q_from_derivative(unsigned n, const JacobiParams& params);
/// R_n via n P_n - (a+1) P_{n-1}^{(a+1,b)}.
Poly r_from_contiguous(unsigned n, const JacobiParams& params);
/// R_n via (x-1) D P_n^{(a+1,b-1)}.
Poly r_from_derivative(unsigned n, const JacobiParams& params);
/// S_n via (x^2-1) D^2 P_n.
Poly s_from_second_derivative(unsigned n, const JacobiParams& params);
}  // namespace alt

/// Leading connection coefficients (q_{n,n}, r_{n,n}, s_{n,n}), n >= 1.
std::tuple<Rational, Rational, Rational> connection_leading_coeffs(unsigned n,
                                                                   const JacobiParams& params);

/// (Q_n(1), R_n(-1)) from their closed forms, n >= 1.
std::pair<Rational, Rational> boundary_values(unsigned n, const JacobiParams& params);

/// Normalized Jacobi integral plus the point-mass terms. Requires alpha and
/// beta to be nonnegative integers; throws Error(NonIntegerParams) otherwise.
Rational inner_product(const Poly& f, const Poly& g, const JacobiParams& params,
                       const MassParams& masses);

}  // namespace genjac
