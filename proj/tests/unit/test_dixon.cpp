/*
   Copyright 2026 The hyprep Authors

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

#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include "hyprep/dixon.hpp"
#include "hyprep/error.hpp"
#include "hyprep/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace hyprep;

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS5 = std::sqrt(5.0);
const double kS6 = std::sqrt(6.0);
const InvariantForm kQuartic{4, {-26.0, 72.0}, -72.0, 0.0};
const InvariantForm kQuintic{5, {-12.5, 33.75}, 3 * kS3 * (1 + kS2), 3 * kS3 * (kS2 - 1)};
const InvariantForm kQuinticFlipped{5, {-12.5, 33.75}, -kQuintic.c0, -kQuintic.ct0};

TrivariatePoly mono(int i, int j, int k, Complex c) { return TrivariatePoly::monomial({i, j, k}, c); }

HermitianPencil pencil(const std::vector<double>& diag, const std::vector<Complex>& upper_v) {
  const int n = static_cast<int>(diag.size());
  HermitianPencil p;
  p.n = n;
  p.Mt = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd mv = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    p.Mt(j, j) = diag[j];
    mv(j, (j + 1) % n) = upper_v[j];
  }
  p.Mu = mv.adjoint();
  return p;
}

// Reference pencils with det = 1728 f and 10000 f. The corner entry sits at (n, 1) in the v part.
// The (2, 3) entry is 2 sqrt6 (1 - i) + 6 sqrt2 (1 + i). With the two radicals
// exchanged the weight phases no longer cancel and ct0 becomes 36.
HermitianPencil reference_quartic(bool swapped = false) {
  const Complex e23 = swapped ? 6 * kS2 * Complex(1, -1) + 2 * kS6 * Complex(1, 1)
                              : 2 * kS6 * Complex(1, -1) + 6 * kS2 * Complex(1, 1);
  return pencil({3, 12, 4, 12}, {12.0, e23, 6 * kS6 * Complex(1, 1), Complex(9, -9 * kS3)});
}

HermitianPencil reference_quintic() {
  return pencil({2, 10, 5, 10, 10}, {2 * kS5, Complex(15, 15) / kS2, 5 * kS3, 5.0 * Complex(kS2, 2), Complex(0, 4 * kS5)});
}

ProjPoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
}

}  // namespace

TEST_CASE("reference pencils have scaled determinants") {
  std::mt19937_64 rng(41);
  const TrivariatePoly f4 = expand(kQuartic);
  const TrivariatePoly f5 = expand(kQuinticFlipped);
  for (int k = 0; k < 10; ++k) {
    const ProjPoint p = random_point(rng);
    const Complex d4 = reference_quartic().at(p).determinant();
    const Complex d5 = reference_quintic().at(p).determinant();
    CHECK(std::abs(d4 - 1728.0 * f4(p)) < 1e-9 * (1 + std::abs(d4)));
    CHECK(std::abs(d5 - 10000.0 * f5(p)) < 1e-9 * (1 + std::abs(d5)));
  }
}

TEST_CASE("normalizing the reference pencils") {
  const HermitianPencil q = normalize_pencil(reference_quartic());
  CHECK((q.Mt - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
  const ShiftMatrix a = extract_shift(q);
  const double mods[] = {4, 4, 6, 6};
  for (int j = 0; j < 4; ++j) CHECK(std::abs(a.weights[j]) == doctest::Approx(mods[j]).epsilon(1e-12));
  CHECK(form_distance(forward_matching(a), kQuartic) < 1e-10);
  const InvariantForm off = forward_matching(extract_shift(normalize_pencil(reference_quartic(true))));
  CHECK(off.ct0 == doctest::Approx(36.0).epsilon(1e-12));

  const ShiftMatrix b = extract_shift(normalize_pencil(reference_quintic()));
  const Complex expect[] = {2.0, Complex(3, 3), kS6, Complex(kS2, 2), Complex(0, 4)};
  for (int j = 0; j < 5; ++j) CHECK(std::abs(b.weights[j] - expect[j]) < 1e-12);
  CHECK(form_distance(forward_matching(b), kQuinticFlipped) < 1e-10);

  HermitianPencil mixed = reference_quartic();
  mixed.Mt(2, 2) = -4.0;
  CHECK_THROWS_AS(normalize_pencil(mixed), Error);
  HermitianPencil negated = reference_quartic();
  negated.Mt = -negated.Mt;
  negated.Mu = -negated.Mu;
  CHECK(form_distance(forward_matching(extract_shift(normalize_pencil(negated))), kQuartic) < 1e-10);
}

TEST_CASE("a quartic g12 and its Noether cofactors") {
  const TrivariatePoly f = expand(kQuartic);
  const TrivariatePoly g11 = f.dt();
  const TrivariatePoly g12 = mono(2, 0, 1, -4.0) + mono(0, 3, 0, -36.0) + mono(0, 1, 2, 36.0);
  const NoetherResult r = noether_solve(f, g11, g12 * conj_involution(g12), 4, 0);
  CHECK(r.residual < 1e-12);
  CHECK(max_coeff_diff(r.a_hat, mono(2, 0, 0, -4.0) + mono(0, 1, 1, 36.0)) < 1e-10);
  CHECK(max_coeff_diff(r.b_hat, mono(3, 0, 0, 1.0) + mono(1, 1, 1, -18.0)) < 1e-10);

  // A form outside the ideal is rejected.
  CHECK_THROWS_AS(noether_solve(f, g11, mono(6, 0, 0, 1.0), 4, 0), Error);
}

TEST_CASE("a quintic g12 and its Noether cofactors") {
  const TrivariatePoly f = expand(kQuinticFlipped);
  const TrivariatePoly g11 = f.dt();
  const Complex k = -1.5 * kS3 * Complex(1, -1) * Complex(kS2, 1);
  const TrivariatePoly g12 = mono(3, 0, 1, -1.0) + mono(1, 1, 2, 3.0) + mono(0, 4, 0, k);
  const NoetherResult r = noether_solve(f, g11, g12 * conj_involution(g12), 5, 0);
  CHECK(r.residual < 1e-12);
  CHECK(max_coeff_diff(r.a_hat, mono(3, 0, 0, -1.0) + mono(1, 1, 1, 3.0)) < 1e-10);
  // g11 = df/dt carries a factor 5 relative to the cofactor below.
  const TrivariatePoly b = mono(4, 0, 0, 1.0) + mono(2, 1, 1, -7.0) + mono(0, 2, 2, 6.0);
  CHECK(max_coeff_diff(r.b_hat, 0.2 * b) < 1e-10);
}

TEST_CASE("vanishing forms") {
  for (const auto& form : {kQuartic, kQuintic}) {
    const int n = form.n;
    const IntersectionSet is = intersection_set(form);
    for (int ell = 0; ell < n; ++ell) {
      const TrivariatePoly h = vanishing_form(is, ell);
      CHECK(h.degree() == n - 1);
      for (const auto& [e, c] : h.terms()) CHECK(eigen_class(e, n) == ell);
      for (std::size_t i = 0; i < is.S.size(); ++i) {
        if (n % 2 == 0 && ell % 2 == 0 && std::abs(is.S[i].t) == 0.0) continue;
        CHECK(std::abs(h(is.S[i].normalized())) < 1e-9);
      }
    }
  }
}

TEST_CASE("G matrix structure") {
  const TrivariatePoly f = expand(kQuintic);
  const GMatrix g = assemble_G(f, intersection_set(kQuintic));
  CHECK(g.n == 5);
  CHECK(max_coeff_diff(g(0, 0), f.dt()) < 1e-12);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      CHECK(max_coeff_diff(g(j, i), conj_involution(g(i, j))) < 1e-9);
      for (const auto& [e, c] : g(i, j).terms()) CHECK(eigen_class(e, 5) == g.tag(i, j));
    }
  }
  CHECK(g.max_noether_residual < 1e-8);
}

TEST_CASE("adjugate") {
  Eigen::MatrixXcd m(3, 3);
  m << 1, 2, 3, 0, 1, 4, 5, 6, 0;
  CHECK((adjugate(m) * m - m.determinant() * Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
  Eigen::MatrixXcd s(3, 3);
  s << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  Eigen::MatrixXcd expect(3, 3);
  expect << 4, -2, 0, 4, -2, 0, -4, 2, 0;
  CHECK((adjugate(s) - expect).norm() < 1e-12);
}

TEST_CASE("smooth construction reproduces the form") {
  std::mt19937_64 rng(43);
  const TrivariatePoly f = expand(kQuintic);
  const HermitianPencil p = normalize_pencil(
      pencil_from_adjugate(assemble_G(f, intersection_set(kQuintic)), f, kQuintic.scale()));
  for (int k = 0; k < 10; ++k) {
    const ProjPoint x = random_point(rng);
    CHECK(std::abs(p.at(x).determinant() - f(x)) < 1e-8 * (1 + std::abs(f(x))));
  }
  const ShiftMatrix w = represent_smooth(kQuintic);
  CHECK(verify(kQuintic, w).max_abs_err < 1e-9);
}

TEST_CASE("represent") {
  const RepresentResult q = represent(kQuartic);
  CHECK(q.report.max_abs_err < 1e-9);
  const double mods[] = {4, 4, 6, 6};
  std::vector<double> got;
  for (const auto& a : q.shift.weights) got.push_back(std::abs(a));
  std::vector<double> want(mods, mods + 4);
  std::sort(got.begin(), got.end());
  for (int j = 0; j < 4; ++j) CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-8));

  const RepresentResult p = represent(kQuintic);
  CHECK(p.route == "smooth");
  CHECK(p.report.max_abs_err < 1e-9);

  const RepresentResult again = represent(kQuintic);
  for (int j = 0; j < 5; ++j) CHECK(again.shift.weights[j] == p.shift.weights[j]);

  CHECK_THROWS_AS(represent({3, {0.0}, 1.0, 0.0}), Error);
}

TEST_CASE("roundtrip from random shifts") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 5;
    const ShiftMatrix a = oracle::random_shift(rng, n, 0.5, 2.0);
    const InvariantForm f = forward_matching(a);
    const RepresentResult r = represent(f);
    CHECK(r.report.max_abs_err <= 1e-8 * f.scale());
  }
}

TEST_CASE("gauge distance") {
  const ShiftMatrix a({1.0, Complex(0, 2), 3.0});
  const ShiftMatrix rolled({Complex(0, 2), 3.0, 1.0});
  CHECK(gauge_distance(a, rolled) < 1e-15);
  const ShiftMatrix b({1.0, Complex(0, 2), 3.5});
  CHECK(gauge_distance(a, b) > 1.0);
}
