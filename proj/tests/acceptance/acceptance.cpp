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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"
#include "genjac/cli.hpp"
#include "genjac/coeffs.hpp"
#include "genjac/error.hpp"
#include "genjac/genjacobi.hpp"
#include "genjac/hyper.hpp"
#include "genjac/inversion.hpp"
#include "genjac/verify.hpp"

using namespace genjac;
using genjac::test::params;
using genjac::test::q;
using genjac::test::reflect;
using genjac::test::x_squared_minus_one;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (first.empty()) first = what;
  }
  void absorb(const Tally& o) {
    cases += o.cases;
    failures += o.failures;
    if (first.empty()) first = o.first;
  }
};

std::string str(const JacobiParams& p) {
  return "(" + p.alpha.to_string() + "," + p.beta.to_string() + ")";
}

Rational sign(unsigned n) { return Rational(n % 2 ? -1 : 1); }

Tally criterion_1() {
  std::vector<std::future<Tally>> jobs;
  for (const JacobiParams& p : test::main_grid()) {
    jobs.push_back(std::async(std::launch::async, [p] {
      Tally t;
      const DeCoefficients coeffs = DeCoefficients::closed_form(p, 12);
      for (unsigned n = 0; n <= 12; ++n)
        t.expect(de_residual(n, coeffs, n).is_zero(), str(p) + " n=" + std::to_string(n));
      return t;
    }));
  }
  Tally t;
  for (auto& j : jobs) t.absorb(j.get());
  return t;
}

std::string order_via_cli(const Rational& a, const Rational& b, const Rational& m, const Rational& n,
                          unsigned probe) {
  std::ostringstream out, err;
  const int code = run_command({"check-order", "--alpha", a.to_string(), "--beta", b.to_string(), "--m",
                                m.to_string(), "--n", n.to_string(), "--probe", std::to_string(probe)},
                               out, err);
  if (code != 0) return "exit " + std::to_string(code);
  std::string line = out.str();
  if (!line.empty() && line.back() == '\n') line.pop_back();
  return line;
}

Tally criterion_2() {
  Tally t;
  const Rational zero(0), one(1), half(1, 2);
  auto row = [&](const Rational& a, const Rational& b, const Rational& m, const Rational& n,
                 const std::string& expected) {
    const unsigned probe = static_cast<unsigned>((Rational(2) * (a + b) + Rational(20)).to_double() + 0.999);
    const std::string got = order_via_cli(a, b, m, n, probe);
    const std::string want = expected.empty() ? "ProbeExhausted(" + std::to_string(probe) + ")" : expected;
    t.expect(got == want, "alpha=" + a.to_string() + " beta=" + b.to_string() + " M=" + m.to_string() +
                              " N=" + n.to_string() + " got " + got + " want " + want);
  };
  for (const Rational& a : {zero, one, Rational(2), half})
    for (const Rational& b : {zero, one, Rational(2), half}) row(a, b, zero, zero, "Finite(2)");
  for (int k = 0; k <= 2; ++k) {
    const Rational v(k);
    for (const Rational& other : {zero, one, Rational(2), q("1/3")}) {
      row(other, v, one, zero, "Finite(" + std::to_string(2 * k + 4) + ")");
      row(v, other, zero, q("5/2"), "Finite(" + std::to_string(2 * k + 4) + ")");
    }
  }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      row(Rational(a), Rational(b), one, one, "Finite(" + std::to_string(2 * a + 2 * b + 6) + ")");
  for (const JacobiParams& p : {params("1/2", "1/2"), params("1/3", "5/2"), params("-1/2", "3/4")}) {
    row(p.alpha, p.beta, one, zero, "");
    row(p.alpha, p.beta, zero, one, "");
    row(p.alpha, p.beta, one, one, "");
  }
  return t;
}

Tally criterion_3() {
  Tally t;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const JacobiParams p{Rational(a), Rational(b)};
      const std::string w = str(p);
      t.expect(coeff_a(2 * b + 4, p) == top_coeff_a(p), "top a " + w);
      t.expect(coeff_b(2 * a + 4, p) == top_coeff_b(p), "top b " + w);
      const unsigned edge = 2 * a + 2 * b + 6;
      t.expect(coeff_c(edge, p) == top_coeff_c(p), "top c " + w);
      const auto [c1, c2] = coeff_c_parts(edge + 1, p);
      t.expect(!c1.is_zero() && (c1 + c2).is_zero(), "c cancellation " + w);
    }
  }
  return t;
}

Tally criterion_4() {
  std::vector<std::future<Tally>> jobs;
  for (const JacobiParams& p : test::main_grid()) {
    jobs.push_back(std::async(std::launch::async, [p] {
      Tally t;
      for (Family f : {Family::A, Family::B, Family::C, Family::BigC, Family::BigB}) {
        const CoefficientTable oracle = coeffs_via_inversion(f, 12, p);
        for (unsigned i = first_index(f); i <= 12; ++i)
          t.expect(oracle.entries.at(i) == family_coeff(f, i, p),
                   to_string(f) + "_" + std::to_string(i) + " " + str(p));
      }
      return t;
    }));
  }
  Tally t;
  for (auto& j : jobs) t.absorb(j.get());
  return t;
}

Tally criterion_5() {
  Tally van, closed, poised, four, three;
  test::RationalSource src(20260101);
  while (van.cases < 240) {
    const Rational a = src.next(), b = src.next_fraction();
    for (unsigned n = 0; n <= 12; ++n)
      van.expect(pfq_unit({{-Rational(n), a}, {b}}) == vandermonde_closed(a, b, n), "Chu-Vandermonde sum");
  }
  while (closed.cases < 240) {
    const Rational a = src.next_fraction(), b = src.next_fraction();
    if ((b - a).is_integer()) continue;
    for (unsigned n = 0; n <= 12; ++n) closed.expect(f_sum(a, b, n) == f_sum_closed(a, b, n), "F_n closed form");
  }
  while (poised.cases < 240) {
    const Rational a = src.next_fraction(), b = src.next_fraction(), c = src.next_fraction();
    if ((b - a).is_integer() || (b - c).is_integer()) continue;
    for (unsigned n = 0; n <= 10; ++n) {
      poised.expect(well_poised_sum(a, b, c, n) == well_poised_closed(a, b, c, n), "well-poised sum");
      poised.expect(well_poised_sum(a, b, b + Rational(n + 1), n) == f_sum_closed(a, b, n), "well-poised sum at c=b+n+1");
    }
  }
  while (four.cases < 240) {
    const Rational b = src.next(), c = src.next(), p = src.next();
    const Rational d = src.next_fraction(), e = src.next_fraction(), qq = src.next_fraction();
    for (unsigned n = 0; n <= 7; ++n) {
      for (const Rational& z : {q("1/4"), q("-1/3")}) {
        const Rational a = -Rational(n);
        three.expect(pfq({{a, b, p}, {d, qq}}, z) == expand_3f2(a, b, p, d, qq, z), "3F2 transformation");
        four.expect(pfq({{a, b, c, p}, {d, e, qq}}, z) == expand_4f3(a, b, c, p, d, e, qq, z), "4F3 transformation");
      }
    }
  }
  Tally all;
  for (const Tally* t : {&van, &closed, &poised, &four, &three}) {
    all.absorb(*t);
    all.expect(t->cases >= 200, "fewer than 200 cases");
  }
  return all;
}

Tally criterion_6() {
  Tally t;
  const std::vector<Poly> zs{Poly(Rational(1)), Poly(q("-3/2")), Poly::linear(Rational(1), Rational(-1)),
                             Poly::linear(Rational(1), Rational(1))};
  for (unsigned n = 1; n <= 12; ++n) {
    for (const Poly& z : zs) {
      const PolyMatrix a = bidiagonal_matrix(n, z), b = bidiagonal_inverse(n, z);
      t.expect(multiply(a, b) == identity_matrix(n) && multiply(b, a) == identity_matrix(n),
               "bidiagonal n=" + std::to_string(n) + " z=" + z.to_string());
    }
    const PolyMatrix a = tridiagonal_matrix(n), b = tridiagonal_inverse(n);
    t.expect(multiply(a, b) == identity_matrix(n) && multiply(b, a) == identity_matrix(n),
             "tridiagonal n=" + std::to_string(n));
  }
  t.expect(tridiagonal_inverse(2) == PolyMatrix{{Poly(q("1/2")), Poly()},
                                                {Poly({Rational(0), q("-1/3")}), Poly(q("1/6"))}},
           "explicit 2x2 tridiagonal inverse");
  return t;
}

Tally criterion_7() {
  Tally t;
  const std::vector<JacobiParams> grid{params("0", "0"), params("1/2", "1/3"), params("-1/2", "3/4"),
                                       params("2", "5"), params("1/2", "-3/2"), params("-7/3", "1/5")};
  for (unsigned i = 0; i <= 8; ++i) {
    for (unsigned j = 0; j <= 4; ++j) {
      for (unsigned s = 0; s <= 3 && j + 2 * s <= i; ++s) {
        const bool hit = i == j + 2 * s;
        const std::string w = " i=" + std::to_string(i) + " j=" + std::to_string(j) + " s=" + std::to_string(s);
        for (const JacobiParams& p : grid) {
          const Poly lhs = bavinck_delta(i, j, s, p);
          t.expect(hit ? lhs == pow(x_squared_minus_one(), s) : lhs.is_zero(), "Jacobi " + str(p) + w);
        }
        for (const JacobiParams& p : grid) {
          const Poly lhs = laguerre_delta(i, j, s, p.alpha);
          t.expect(hit ? lhs == pow(Poly({Rational(0), Rational(-1)}), s) : lhs.is_zero(),
                   "Laguerre alpha=" + p.alpha.to_string() + w);
        }
      }
    }
  }
  return t;
}

Tally criterion_8() {
  Tally t;
  for (const Rational& a : {Rational(0), Rational(1), Rational(2), q("1/2")}) {
    for (unsigned i = 1; i <= 8; ++i)
      t.expect(laguerre_limit_coeff(i, a) == laguerre_limit_closed(i, a),
               "limit alpha=" + a.to_string() + " i=" + std::to_string(i));
    for (unsigned n = 1; n <= 10; ++n)
      t.expect(eigen_limit(n, a) == binomial(Rational(n) + a + Rational(1), n - 1),
               "eigen alpha=" + a.to_string() + " n=" + std::to_string(n));
  }
  return t;
}

Tally criterion_9() {
  std::vector<std::future<Tally>> jobs;
  const std::vector<Rational> masses{Rational(0), Rational(1), q("7/2")};
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      jobs.push_back(std::async(std::launch::async, [a, b, &masses] {
        Tally t;
        const JacobiParams p{Rational(a), Rational(b)};
        std::vector<GenJacobi> comps;
        for (unsigned n = 0; n <= 8; ++n) comps.push_back(gen_jacobi_components(n, p));
        for (const Rational& m : masses) {
          for (const Rational& nm : masses) {
            const MassParams mp{m, nm};
            std::vector<Poly> polys;
            for (const auto& g : comps) polys.push_back(gen_jacobi_eval(g, mp));
            for (unsigned j = 1; j < polys.size(); ++j)
              for (unsigned i = 0; i < j; ++i)
                t.expect(inner_product(polys[i], polys[j], p, mp).is_zero(),
                         str(p) + " M=" + m.to_string() + " N=" + nm.to_string() + " m=" +
                             std::to_string(i) + " n=" + std::to_string(j));
          }
        }
        return t;
      }));
    }
  }
  Tally t;
  for (auto& j : jobs) t.absorb(j.get());
  return t;
}

Tally criterion_10() {
  Tally t;
  const Poly x = Poly::x();
  const Poly xm1 = Poly::linear(Rational(1), Rational(-1));
  const Poly xp1 = Poly::linear(Rational(1), Rational(1));
  const Rational one(1), two(2);
  for (const JacobiParams& p : test::wide_grid()) {
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    for (unsigned n = 0; n <= 12; ++n) {
      const std::string w = str(p) + " n=" + std::to_string(n);
      const Poly P = jacobi_poly(n, p);
      const Poly DP = derivative(P);
      const Rational nn(n);
      t.expect(P == sign(n) * reflect(jacobi_poly(n, p.swapped())), "reflection " + w);
      t.expect(P(one) == pochhammer(a + one, n) / factorial(n) &&
                   P(-one) == sign(n) * pochhammer(b + one, n) / factorial(n),
               "values at +-1 " + w);
      for (unsigned i = 0; i <= n; ++i)
        t.expect(derivative(P, i) == pochhammer(nn + p.sum() + one, i) / pow(two, i) *
                                         jacobi_poly(n - i, p.shifted(Rational(i), Rational(i))),
                 "diff " + w);
      t.expect(nn * (nn + p.sum() + one) * P - ((b + one) * xm1 + (a + one) * xp1) * DP ==
                   (x * x - one) * derivative(P, 2),
               "first-order form " + w);
      for (unsigned i = 0; i <= n; ++i) {
        const Rational ii(i);
        t.expect(((one - x * x) * derivative(P, i + 2) +
                  Poly::linear(-(p.sum() + Rational(2 * i + 2)), b - a) * derivative(P, i + 1) +
                  (nn - ii) * (nn + p.sum() + ii + one) * derivative(P, i))
                     .is_zero(),
                 "differentiated equation " + w);
      }
      if (n == 0) continue;
      t.expect(jacobi_poly(n, p.shifted(1, 0)) - jacobi_poly(n, p.shifted(0, 1)) ==
                   jacobi_poly(n - 1, p.shifted(1, 1)),
               "contiguous both " + w);
      t.expect(nn * P - (nn + a) * jacobi_poly(n - 1, p.shifted(0, 1)) == xm1 * DP, "x-1 derivative " + w);
      t.expect(nn * P + (nn + b) * jacobi_poly(n - 1, p.shifted(1, 0)) == xp1 * DP, "x+1 derivative " + w);
      t.expect((nn + a + one) * P - (a + one) * jacobi_poly(n, p.shifted(1, 0)) ==
                   (nn + b) * (xm1 / two) * jacobi_poly(n - 1, p.shifted(2, 0)),
               "alpha shift " + w);
      t.expect((nn + b + one) * P - (b + one) * jacobi_poly(n, p.shifted(0, 1)) ==
                   (nn + a) * (xp1 / two) * jacobi_poly(n - 1, p.shifted(0, 2)),
               "beta shift " + w);
    }
  }
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
      {"differential equation residual vanishes, n <= 12, seven parameter pairs", criterion_1},
      {"order table via check-order", criterion_2},
      {"leading coefficients and c cancellation, alpha, beta in 0..3", criterion_3},
      {"closed forms equal inversion tables, i <= 12", criterion_4},
      {"hypergeometric sums and transformations, >= 200 cases each", criterion_5},
      {"banded matrix inverses, sizes <= 12, explicit 2x2 case", criterion_6},
      {"Jacobi and Laguerre delta identities, i <= 8, j <= 4, s <= 3", criterion_7},
      {"Laguerre limit coefficients and eigenvalue limit", criterion_8},
      {"orthogonality with point masses, m < n <= 8", criterion_9},
      {"classical Jacobi identities, n <= 12, wide grid", criterion_10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[k].second();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0 && t.cases > 0;
    if (!ok) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " ["
         << t.cases << " cases, " << secs << "s]";
    if (!ok) line << " first failure: " << t.first;
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
