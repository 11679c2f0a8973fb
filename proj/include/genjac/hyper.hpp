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

#include <vector>

#include "genjac/rational.hpp"

namespace genjac {

/// Parameters of a generalized hypergeometric series pFq. At least one
/// numerator parameter must be a nonpositive integer so the series
/// terminates.
struct PfqSpec {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;
};

/// Index of the last possibly nonzero term: min(-a) over the nonpositive
/// integer numerator parameters a. Throws Error(NonTerminating) if none.
unsigned termination_index(const PfqSpec& spec);

/// Terminating pFq evaluated at an arbitrary rational argument. Terms are
/// accumulated with the running ratio prod(a+k)/prod(b+k)/(k+1).
/// Throws Error(NonTerminating) or Error(InvalidDenominator).
Rational pfq(const PfqSpec& spec, const Rational& z);

/// Terminating pFq at z = 1.
inline Rational pfq_unit(const PfqSpec& spec) { return pfq(spec, Rational(1)); }

/// F_n(a, b) = sum_{k=0}^n (a)_k (b)_k / ((b-a+1)_k k!) (b + 2k).
Rational f_sum(const Rational& a, const Rational& b, unsigned n);

/// Closed form (a+1)_n (b)_{n+1} / ((b-a+1)_n n!) of f_sum.
Rational f_sum_closed(const Rational& a, const Rational& b, unsigned n);

/// Very-well-poised sum
///   sum_{k=0}^n (-n)_k (a)_k (b)_k (c)_k / ((b+n+1)_k (b-a+1)_k (b-c+1)_k k!) (b + 2k).
Rational well_poised_sum(const Rational& a, const Rational& b, const Rational& c, unsigned n);

/// Closed form (b)_{n+1} (b-a-c+1)_n / ((b-a+1)_n (b-c+1)_n) of well_poised_sum.
Rational well_poised_closed(const Rational& a, const Rational& b, const Rational& c, unsigned n);

/// Right-hand side (b-a)_n / (b)_n of the Vandermonde sum 2F1(-n, a; b; 1).
Rational vandermonde_closed(const Rational& a, const Rational& b, unsigned n);

/// Right side of the 3F2 -> 2F1 expansion
///   sum_n (-1)^n (a)_n (b)_n (q-p)_n / ((c)_n (q)_n n!) z^n 2F1(n+a, n+b; n+c; z)
/// for a a nonpositive integer, which makes every sum finite.
Rational expand_3f2(const Rational& a, const Rational& b, const Rational& p,
                    const Rational& c, const Rational& q, const Rational& z);

/// Right side of the 4F3 -> 3F2 expansion
///   sum_n (-1)^n (a)_n (b)_n (c)_n (q-p)_n / ((d)_n (e)_n (q)_n n!) z^n
///         3F2(n+a, n+b, n+c; n+d, n+e; z)
/// for a a nonpositive integer.
Rational expand_4f3(const Rational& a, const Rational& b, const Rational& c, const Rational& p,
                    const Rational& d, const Rational& e, const Rational& q, const Rational& z);

}  // namespace genjac
