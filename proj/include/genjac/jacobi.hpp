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

#include "genjac/poly.hpp"

namespace genjac {

/// Jacobi parameters (alpha, beta). Any rationals are accepted for the
/// polynomial constructors; operations tied to orthogonality check
/// alpha > -1 and beta > -1 themselves.
struct JacobiParams {
  Rational alpha;
  Rational beta;

  JacobiParams swapped() const { return {beta, alpha}; }
  JacobiParams shifted(const Rational& da, const Rational& db) const {
    return {alpha + da, beta + db};
  }
  Rational sum() const { return alpha + beta; }
  /// alpha > -1 and beta > -1.
  bool admissible() const { return alpha > Rational(-1) && beta > Rational(-1); }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// Throws Error(ParamOutOfRange) unless alpha > -1 and beta > -1.
void require_admissible(const JacobiParams& params, const char* where);

/// P_n^{(alpha,beta)} from the expansion in powers of (x-1)/2 with
/// coefficients (n+a+b+1)_k/k! * (a+k+1)_{n-k}/(n-k)!.
Poly jacobi_poly(unsigned n, const JacobiParams& params);

/// P_n^{(alpha,beta)} from the alternative expansion
/// (-1)^n sum_k (-n-k-a-b)_k/k! * (-n-a)_{n-k}/(n-k)! ((x-1)/2)^k.
Poly jacobi_poly_alt(unsigned n, const JacobiParams& params);

/// lambda_n = n (n + alpha + beta + 1).
Rational jacobi_eigenvalue(unsigned n, const JacobiParams& params);

/// The classical second-order Jacobi operator with eigenvalue parameter n.
struct ClassicalOperator {
  JacobiParams params;
  unsigned n = 0;

  Rational lambda() const { return jacobi_eigenvalue(n, params); }
};

/// (1-x^2) y'' + [beta - alpha - (alpha+beta+2) x] y' + lambda_n y.
Poly apply_classical_operator(const ClassicalOperator& op, const Poly& y);

}  // namespace genjac
