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

#include <functional>
#include <future>
#include <map>
#include <stdexcept>
#include <string>

#include "genjac/error.hpp"
#include "genjac/hyper.hpp"
#include "genjac/inversion.hpp"
#include "genjac/verify.hpp"

namespace genjac {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

Poly reflect(const Poly& p) { return affine_substitute(p, Rational(-1), Rational(0)); }
Rational sign(unsigned n) { return Rational(n % 2 ? -1 : 1); }

Rational linear_term_about(const Poly& p, const Rational& center) {
  const auto c = shifted_coeffs(p, center);
  return c.size() > 1 ? c[1] : Rational(0);
}

std::optional<unsigned> small_nonnegative(const Rational& v, long cap) {
  if (!v.is_nonnegative_integer()) return std::nullopt;
  const long k = *v.to_long();
  if (k > cap) return std::nullopt;
  return static_cast<unsigned>(k);
}

class Runner {
 public:
  void check(const std::string& label, const std::string& where,
             const std::function<bool()>& body) {
    IdentityReport::Entry& e = entry(label);
    ++e.cases;
    try {
      if (!body()) {
        ++e.failures;
        note(e, where + ": identity does not hold");
      }
    } catch (const Error& ex) {
      ++e.errors;
      note(e, where + ": " + ex.what());
    } catch (const std::domain_error& ex) {
      ++e.errors;
      note(e, where + ": " + ex.what());
    }
  }

  void merge_into(IdentityReport& out, std::map<std::string, std::size_t>& index) const {
    for (const auto& e : report_.entries) {
      auto it = index.find(e.label);
      if (it == index.end()) {
        index.emplace(e.label, out.entries.size());
        out.entries.push_back(e);
        continue;
      }
      auto& target = out.entries[it->second];
      target.cases += e.cases;
      target.failures += e.failures;
      target.errors += e.errors;
      if (target.first_problem.empty()) target.first_problem = e.first_problem;
    }
  }

 private:
  static void note(IdentityReport::Entry& e, const std::string& text) {
    if (e.first_problem.empty()) e.first_problem = text;
  }

  IdentityReport::Entry& entry(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return report_.entries[it->second];
    index_.emplace(label, report_.entries.size());
    report_.entries.push_back({label, 0, 0, 0, {}});
    return report_.entries.back();
  }

  IdentityReport report_;
  std::map<std::string, std::size_t> index_;
};

std::string at(const JacobiParams& p) {
  return "alpha=" + p.alpha.to_string() + " beta=" + p.beta.to_string();
}

std::string at(const JacobiParams& p, const char* name, unsigned v) {
  return at(p) + " " + name + "=" + std::to_string(v);
}

void hyper_suite(Runner& r, const JacobiParams& p, unsigned n_max) {
  const Rational a = p.alpha + Rational(1, 3);
  const Rational b = p.beta + Rational(2, 7);
  const Rational c = p.alpha / kTwo + Rational(3, 11);
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::string w = at(p, "n", n);
    r.check("Chu-Vandermonde sum", w, [&] {
      return pfq_unit(PfqSpec{{-Rational(n), a}, {b}}) == vandermonde_closed(a, b, n);
    });
    r.check("F_n closed form", w, [&] { return f_sum(a, b, n) == f_sum_closed(a, b, n); });
    r.check("well-poised sum", w, [&] { return well_poised_sum(a, b, c, n) == well_poised_closed(a, b, c, n); });
    r.check("well-poised sum at c=b+n+1", w, [&] {
      return well_poised_sum(a, b, b + Rational(n + 1), n) == f_sum_closed(a, b, n);
    });
  }
  const Rational q = p.beta + Rational(5, 3);
  const Rational d = p.alpha + Rational(9, 4);
  const Rational e = Rational(7, 5) - p.beta / kTwo;
  for (unsigned n = 0; n <= std::min(n_max, 6u); ++n) {
    const Rational top = -Rational(n);
    for (const Rational& z : {Rational(1, 4), Rational(-1, 3), Rational(1)}) {
      const std::string w = at(p, "n", n) + " z=" + z.to_string();
      r.check("3F2 transformation", w, [&] {
        return pfq(PfqSpec{{top, b, c}, {d, q}}, z) == expand_3f2(top, b, c, d, q, z);
      });
      r.check("4F3 transformation", w, [&] {
        return pfq(PfqSpec{{top, a, b, c}, {d, e, q}}, z) == expand_4f3(top, a, b, c, d, e, q, z);
      });
    }
  }
}

void jacobi_suite(Runner& r, const JacobiParams& p, unsigned n_max) {
  const Rational& al = p.alpha;
  const Rational& be = p.beta;
  const Poly x = Poly::x();
  const Poly xm1 = Poly::linear(kOne, -kOne);
  const Poly xp1 = Poly::linear(kOne, kOne);
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::string w = at(p, "n", n);
    const Poly P = jacobi_poly(n, p);
    const Rational nn(n);
    r.check("both Jacobi sums agree", w, [&] { return P == jacobi_poly_alt(n, p); });
    r.check("Jacobi reflection", w, [&] { return P == sign(n) * reflect(jacobi_poly(n, p.swapped())); });
    r.check("Jacobi values at +-1", w, [&] {
      return P(kOne) == pochhammer(al + kOne, n) / factorial(n) &&
             P(-kOne) == sign(n) * pochhammer(be + kOne, n) / factorial(n);
    });
    r.check("Jacobi derivatives", w, [&] {
      for (unsigned i = 0; i <= n; ++i) {
        const Poly rhs = pochhammer(nn + p.sum() + kOne, i) / pow(kTwo, i) *
                         jacobi_poly(n - i, p.shifted(Rational(i), Rational(i)));
        if (derivative(P, i) != rhs) return false;
      }
      return true;
    });
    r.check("Jacobi equation", w, [&] { return apply_classical_operator({p, n}, P).is_zero(); });
    const Poly DP = derivative(P);
    r.check("first-order form of the Jacobi equation", w, [&] {
      return nn * (nn + p.sum() + kOne) * P - ((be + kOne) * xm1 + (al + kOne) * xp1) * DP ==
             (x * x - kOne) * derivative(P, 2);
    });
    r.check("differentiated Jacobi equation", w, [&] {
      for (unsigned i = 0; i <= n; ++i) {
        const Rational ii(i);
        const Poly lhs = (kOne - x * x) * derivative(P, i + 2) +
                         Poly::linear(-(p.sum() + Rational(2 * i + 2)), be - al) *
                             derivative(P, i + 1) +
                         (nn - ii) * (nn + p.sum() + ii + kOne) * derivative(P, i);
        if (!lhs.is_zero()) return false;
      }
      return true;
    });
    if (n == 0) continue;
    r.check("contiguous relation in both parameters", w, [&] {
      return jacobi_poly(n, p.shifted(1, 0)) - jacobi_poly(n, p.shifted(0, 1)) ==
             jacobi_poly(n - 1, p.shifted(1, 1));
    });
    r.check("derivative times (x-1)", w, [&] {
      return nn * P - (nn + al) * jacobi_poly(n - 1, p.shifted(0, 1)) == xm1 * DP;
    });
    r.check("derivative times (x+1)", w, [&] {
      return nn * P + (nn + be) * jacobi_poly(n - 1, p.shifted(1, 0)) == xp1 * DP;
    });
    r.check("alpha shift with (x-1)/2 factor", w, [&] {
      return (nn + al + kOne) * P - (al + kOne) * jacobi_poly(n, p.shifted(1, 0)) ==
             (nn + be) * (xm1 / kTwo) * jacobi_poly(n - 1, p.shifted(2, 0));
    });
    r.check("beta shift with (x+1)/2 factor", w, [&] {
      return (nn + be + kOne) * P - (be + kOne) * jacobi_poly(n, p.shifted(0, 1)) ==
             (nn + al) * (xp1 / kTwo) * jacobi_poly(n - 1, p.shifted(0, 2));
    });
  }
}

void genjacobi_suite(Runner& r, const JacobiParams& p, unsigned n_max) {
  const std::vector<Rational> masses{Rational(0), Rational(1), Rational(7, 2)};
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::string w = at(p, "n", n);
    r.check("Q/R and S reflection", w, [&] {
      const GenJacobi g = gen_jacobi_components(n, p);
      const GenJacobi h = gen_jacobi_components(n, p.swapped());
      return g.q == sign(n) * reflect(h.r) && g.s == sign(n) * reflect(h.s);
    });
    r.check("reflection with swapped masses", w, [&] {
      const GenJacobi g = gen_jacobi_components(n, p);
      const GenJacobi h = gen_jacobi_components(n, p.swapped());
      const MassParams mn{Rational(1), Rational(7, 2)};
      const MassParams nm{Rational(7, 2), Rational(1)};
      return gen_jacobi_eval(g, mn) == sign(n) * reflect(gen_jacobi_eval(h, nm));
    });
    r.check("boundary values nonzero", w, [&] {
      const GenJacobi g = gen_jacobi_components(n, p);
      const Rational p1 = g.p(kOne), pm1 = g.p(-kOne);
      if (p1.is_zero() || pm1.is_zero()) return false;
      for (const Rational& m : masses) {
        if ((p1 + m * g.q(kOne)).is_zero()) return false;
        if ((pm1 + m * g.r(-kOne)).is_zero()) return false;
      }
      return true;
    });
    if (n == 0) continue;
    r.check("Q representations agree", w, [&] {
      const Poly q = gen_jacobi_components(n, p).q;
      return q == alt::q_from_contiguous(n, p) && q == alt::q_from_derivative(n, p);
    });
    r.check("R representations agree", w, [&] {
      const Poly rr = gen_jacobi_components(n, p).r;
      return rr == alt::r_from_contiguous(n, p) && rr == alt::r_from_derivative(n, p);
    });
    r.check("S representations agree", w, [&] {
      return gen_jacobi_components(n, p).s == alt::s_from_second_derivative(n, p);
    });
    r.check("q/r/s leading coefficients", w, [&] {
      const GenJacobi g = gen_jacobi_components(n, p);
      const auto [q, rr, s] = connection_leading_coeffs(n, p);
      const Rational lead = g.p.leading();
      return g.q.coeff(n) == q * lead && g.r.coeff(n) == rr * lead && g.s.coeff(n) == s * lead;
    });
    r.check("Q(1) and R(-1) closed forms", w, [&] {
      const GenJacobi g = gen_jacobi_components(n, p);
      const auto [q1, rm1] = boundary_values(n, p);
      return g.q(kOne) == q1 && g.r(-kOne) == rm1;
    });
  }

  const auto ia = small_nonnegative(p.alpha, 3);
  const auto ib = small_nonnegative(p.beta, 3);
  if (!ia || !ib) return;
  const unsigned top = std::min(n_max, 8u);
  std::vector<GenJacobi> comps;
  for (unsigned n = 0; n <= top; ++n) comps.push_back(gen_jacobi_components(n, p));
  for (const Rational& m : masses) {
    for (const Rational& nm : masses) {
      const MassParams mp{m, nm};
      const std::string w = at(p) + " M=" + m.to_string() + " N=" + nm.to_string();
      r.check("orthogonality", w, [&] {
        std::vector<Poly> polys;
        for (const auto& g : comps) polys.push_back(gen_jacobi_eval(g, mp));
        for (unsigned b = 1; b < polys.size(); ++b)
          for (unsigned a = 0; a < b; ++a)
            if (!inner_product(polys[a], polys[b], p, mp).is_zero()) return false;
        return true;
      });
    }
  }
}

void coeffs_suite(Runner& r, const JacobiParams& p, unsigned n_max, unsigned i_max) {
  for (unsigned n = 0; n <= n_max; ++n) {
    r.check("eigen coefficients via partial sums", at(p, "n", n),
            [&] { return eigen_coeffs(n, p) == eigen_coeffs_via_partial_sums(n, p); });
  }
  for (Family f : {Family::A, Family::B, Family::C, Family::BigC, Family::BigB}) {
    r.check("dual path " + to_string(f), at(p, "i_max", i_max), [&] {
      const CoefficientTable oracle = coeffs_via_inversion(f, i_max, p);
      for (unsigned i = first_index(f); i <= i_max; ++i)
        if (oracle.entries.at(i) != family_coeff(f, i, p)) return false;
      return true;
    });
  }
  r.check("a via first-kind inversion", at(p, "i_max", i_max), [&] {
    const auto via = coeff_a_via_inv1(i_max, p);
    for (unsigned i = 1; i <= i_max; ++i)
      if (via[i] != coeff_a(i, p)) return false;
    return true;
  });
  for (unsigned i = 1; i <= i_max; ++i) {
    r.check("k_{i,1}", at(p, "i", i), [&] {
      const Rational s = p.sum();
      const Rational ka = -(s + kTwo) * pow(kTwo, i - 1) * pochhammer(p.beta + Rational(3), i - 1) *
                          pochhammer(-p.beta - kTwo, i - 1) /
                          (pochhammer(p.alpha + kOne, i - 1) * factorial(i) * factorial(i - 1));
      const Rational kb = -(s + kTwo) * pow(Rational(-2), i - 1) *
                          pochhammer(p.alpha + Rational(3), i - 1) *
                          pochhammer(-p.alpha - kTwo, i - 1) /
                          (pochhammer(p.beta + kOne, i - 1) * factorial(i) * factorial(i - 1));
      return linear_term_about(coeff_a(i, p), -kOne) == ka && lowest_shift_coeff_a(i, p) == ka &&
             linear_term_about(coeff_b(i, p), kOne) == kb && lowest_shift_coeff_b(i, p) == kb;
    });
  }

  const auto ia = small_nonnegative(p.alpha, 3);
  const auto ib = small_nonnegative(p.beta, 3);
  if (ib) {
    r.check("a_i vanish past 2beta+4", at(p), [&] {
      for (unsigned i = 2 * *ib + 5; i <= 2 * *ib + 14; ++i)
        if (!coeff_a(i, p).is_zero()) return false;
      return true;
    });
    r.check("top a coefficient", at(p), [&] { return coeff_a(2 * *ib + 4, p) == top_coeff_a(p); });
  }
  if (ia) {
    r.check("b_i vanish past 2alpha+4", at(p), [&] {
      for (unsigned i = 2 * *ia + 5; i <= 2 * *ia + 14; ++i)
        if (!coeff_b(i, p).is_zero()) return false;
      return true;
    });
    r.check("top b coefficient", at(p), [&] { return coeff_b(2 * *ia + 4, p) == top_coeff_b(p); });
  }
  if (ia && ib && *ia <= 2 && *ib <= 2) {
    const unsigned edge = 2 * *ia + 2 * *ib + 6;
    r.check("c_i vanish past 2alpha+2beta+6", at(p), [&] {
      const auto [c1, c2] = coeff_c_parts(edge + 1, p);
      if (c1.is_zero() || !(c1 + c2).is_zero()) return false;
      for (unsigned i = edge + 1; i <= edge + 10; ++i)
        if (!coeff_c(i, p).is_zero()) return false;
      return true;
    });
    r.check("top c coefficient", at(p), [&] { return coeff_c(edge, p) == top_coeff_c(p); });
  }
}

void inversion_suite(Runner& r, const JacobiParams& p, unsigned i_max) {
  const unsigned top = std::min(i_max, 8u);
  const bool excluded = (-(p.sum() + kTwo)).is_nonnegative_integer();
  for (unsigned i = 0; i <= top; ++i) {
    for (unsigned j = 0; j <= std::min(i, 4u); ++j) {
      for (unsigned s = 0; s <= 3 && j + 2 * s <= i; ++s) {
        const std::string w = at(p) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                              " s=" + std::to_string(s);
        const bool hit = i == j + 2 * s;
        if (!excluded) {
          r.check("Jacobi delta", w, [&] {
            const Poly lhs = bavinck_delta(i, j, s, p);
            return hit ? lhs == pow(Poly({-kOne, Rational(0), kOne}), s) : lhs.is_zero();
          });
        }
        r.check("Laguerre delta", w, [&] {
          const Poly lhs = laguerre_delta(i, j, s, p.alpha);
          return hit ? lhs == pow(Poly({Rational(0), -kOne}), s) : lhs.is_zero();
        });
      }
    }
  }
}

void matrix_suite(Runner& r, unsigned i_max) {
  for (unsigned n = 1; n <= i_max; ++n) {
    const std::string w = "n=" + std::to_string(n);
    for (const Poly& z : {Poly(kOne), Poly(Rational(-3, 2)), Poly::linear(kOne, -kOne), Poly::linear(kOne, kOne)}) {
      r.check("bidiagonal inverse", w + " z=" + z.to_string(), [&] {
        const PolyMatrix a = bidiagonal_matrix(n, z);
        const PolyMatrix b = bidiagonal_inverse(n, z);
        return multiply(a, b) == identity_matrix(n) && multiply(b, a) == identity_matrix(n);
      });
    }
    r.check("tridiagonal inverse", w, [&] {
      const PolyMatrix a = tridiagonal_matrix(n);
      const PolyMatrix b = tridiagonal_inverse(n);
      return multiply(a, b) == identity_matrix(n) && multiply(b, a) == identity_matrix(n);
    });
  }
}

void symmetry_suite(Runner& r, const JacobiParams& p, unsigned i_max) {
  r.check("coefficient reflection", at(p, "i_max", i_max), [&] {
    return check_symmetry(i_max, p).empty();
  });
}

void de_suite(Runner& r, const JacobiParams& p, unsigned n_max) {
  std::optional<DeCoefficients> coeffs;
  for (unsigned n = 0; n <= n_max; ++n) {
    r.check("differential equation residual", at(p, "n", n), [&] {
      if (!coeffs) coeffs = DeCoefficients::closed_form(p, n_max);
      return de_residual(n, *coeffs, n).is_zero();
    });
  }
}

void limit_suite(Runner& r, const JacobiParams& p, unsigned n_max, unsigned i_max) {
  for (unsigned i = 1; i <= std::min(i_max, 8u); ++i) {
    r.check("Laguerre limit", "alpha=" + p.alpha.to_string() + " i=" + std::to_string(i), [&] {
      return laguerre_limit_coeff(i, p.alpha) == laguerre_limit_closed(i, p.alpha);
    });
  }
  for (unsigned n = 0; n <= std::min(n_max, 10u); ++n) {
    r.check("eigenvalue limit", "alpha=" + p.alpha.to_string() + " n=" + std::to_string(n), [&] {
      return eigen_limit(n, p.alpha) == eigen_limit_closed(n, p.alpha);
    });
  }
}

bool wants(Suite chosen, Suite s) { return chosen == Suite::All || chosen == s; }

Runner run_point(const JacobiParams& p, unsigned n_max, unsigned i_max, Suite suite) {
  Runner r;
  if (wants(suite, Suite::Hyper)) hyper_suite(r, p, n_max);
  if (wants(suite, Suite::Jacobi)) jacobi_suite(r, p, n_max);
  if (wants(suite, Suite::GenJacobi)) genjacobi_suite(r, p, n_max);
  if (wants(suite, Suite::Coeffs)) coeffs_suite(r, p, n_max, i_max);
  if (wants(suite, Suite::Inversion)) inversion_suite(r, p, i_max);
  if (wants(suite, Suite::Symmetry)) symmetry_suite(r, p, i_max);
  if (wants(suite, Suite::De)) de_suite(r, p, n_max);
  if (wants(suite, Suite::Limit)) limit_suite(r, p, n_max, i_max);
  return r;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  static const std::map<std::string, Suite> names{
      {"all", Suite::All},       {"hyper", Suite::Hyper},         {"jacobi", Suite::Jacobi},
      {"genjacobi", Suite::GenJacobi}, {"coeffs", Suite::Coeffs}, {"inversion", Suite::Inversion},
      {"symmetry", Suite::Symmetry},   {"de", Suite::De},         {"limit", Suite::Limit}};
  auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::Parse, "unknown suite '" + name + "'");
  return it->second;
}

bool IdentityReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed()) return false;
  return true;
}

IdentityReport check_identity_suite(const std::vector<JacobiParams>& grid, unsigned n_max,
                                    unsigned i_max, Suite suite) {
  IdentityReport report;
  if (grid.empty()) return report;
  std::vector<std::future<Runner>> jobs;
  for (const auto& p : grid)
    jobs.push_back(std::async(std::launch::async, run_point, p, n_max, i_max, suite));
  std::map<std::string, std::size_t> index;
  for (auto& job : jobs) job.get().merge_into(report, index);
  if (wants(suite, Suite::Inversion)) {
    Runner r;
    matrix_suite(r, i_max);
    r.merge_into(report, index);
  }
  return report;
}

}  // namespace genjac
