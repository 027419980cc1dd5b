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
#include <numbers>
#include <random>

#include "hyprep/error.hpp"
#include "hyprep/forward.hpp"
#include "oracles.hpp"

using namespace hyprep;

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS6 = std::sqrt(6.0);

}  // namespace

TEST_CASE("closed form on two known shifts") {
  const InvariantForm q = forward_matching(ShiftMatrix({4.0, 4.0, 6.0, 6.0}));
  REQUIRE(q.c.size() == 2);
  CHECK(q.c[0] == doctest::Approx(-26.0).epsilon(1e-15));
  CHECK(q.c[1] == doctest::Approx(72.0).epsilon(1e-15));
  CHECK(q.c0 == doctest::Approx(-72.0).epsilon(1e-15));
  CHECK(q.ct0 == 0.0);

  const InvariantForm p = forward_matching(ShiftMatrix({2.0, Complex(3, 3), kS6, Complex(kS2, 2), Complex(0, -4)}));
  CHECK(p.c[0] == doctest::Approx(-12.5).epsilon(1e-14));
  CHECK(p.c[1] == doctest::Approx(33.75).epsilon(1e-14));
  CHECK(p.c0 == doctest::Approx(3 * kS3 * (1 + kS2)).epsilon(1e-14));
  CHECK(p.ct0 == doctest::Approx(3 * kS3 * (kS2 - 1)).epsilon(1e-14));

  CHECK_THROWS_AS(ShiftMatrix({1.0, 2.0}), Error);
}

TEST_CASE("closed form matches a Leibniz expansion") {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 5;
    const ShiftMatrix w = oracle::random_shift(rng, n, 0.2, 2.5);
    const TrivariatePoly f = expand(forward_matching(w));
    for (int k = 0; k < 4; ++k) {
      const Complex t(g(rng), g(rng)), u(g(rng), g(rng)), v(g(rng), g(rng));
      const Complex d = oracle::shift_det(w.weights, t, u, v);
      CHECK(std::abs(f(t, u, v) - d) < 1e-10 * (1 + std::abs(d)));
      CHECK(std::abs(shift_determinant(w, {t, u, v}) - d) < 1e-10 * (1 + std::abs(d)));
    }
  }
}

TEST_CASE("interpolation agrees with the closed form") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 7;
    const ShiftMatrix w = oracle::random_shift(rng, n, 0.5, 2.0);
    CHECK(form_distance(forward_interpolate(w), forward_matching(w)) < 1e-9 * forward_matching(w).scale());
    CHECK_NOTHROW(forward_checked(w));
  }
}

TEST_CASE("real weights give ct0 = 0") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> x(-2.0, 2.0);
  for (int n = 3; n <= 8; ++n) {
    std::vector<Complex> w;
    for (int j = 0; j < n; ++j) w.push_back(x(rng));
    CHECK(forward_matching(ShiftMatrix(w)).ct0 == 0.0);
  }
}

TEST_CASE("diagonal unitary gauge leaves the form unchanged") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> ph(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 5;
    const ShiftMatrix a = oracle::random_shift(rng, n, 0.5, 2.0);
    std::vector<double> th(n);
    for (double& t : th) t = ph(rng);
    std::vector<Complex> b(n);
    for (int j = 0; j < n; ++j) b[j] = std::polar(1.0, th[j]) * a.weights[j] * std::polar(1.0, -th[(j + 1) % n]);
    CHECK(form_distance(forward_matching(a), forward_matching(ShiftMatrix(b))) < 1e-12);
  }
}

TEST_CASE("realizing a dihedral shift with real weights") {
  const ShiftMatrix a({4.0, std::polar(4.0, std::numbers::pi / 12), std::polar(6.0, std::numbers::pi / 4),
                       std::polar(6.0, -std::numbers::pi / 3)});
  const ShiftMatrix b = realize_real(a);
  const double want[] = {4, 4, 6, 6};
  for (int j = 0; j < 4; ++j) CHECK(std::abs(b.weights[j] - want[j]) < 1e-12);
  CHECK(form_distance(forward_matching(b), forward_matching(a)) < 1e-12);

  // B = U A U* with U = diag(e^{-i pi/3}, e^{-i pi/3}, e^{-i pi/4}, 1).
  Eigen::VectorXcd d(4);
  d << std::polar(1.0, -std::numbers::pi / 3), std::polar(1.0, -std::numbers::pi / 3),
      std::polar(1.0, -std::numbers::pi / 4), 1.0;
  const Eigen::MatrixXcd u = d.asDiagonal();
  CHECK((u * a.dense() * u.adjoint() - b.dense()).norm() < 1e-12);

  CHECK_THROWS_AS(realize_real(ShiftMatrix({1.0, 1.0, Complex(0, 1)})), Error);
}

TEST_CASE("verify reports") {
  const ShiftMatrix w({4.0, 4.0, 6.0, 6.0});
  const VerifyReport good = verify({4, {-26.0, 72.0}, -72.0, 0.0}, w);
  CHECK(good.ok(1e-12));
  CHECK(good.hyperbolic);
  CHECK(good.dihedral);
  CHECK_FALSE(good.zero_weight);
  CHECK(good.deltas.size() == 4);
  const VerifyReport bad = verify({4, {-26.0, 72.0}, -70.0, 0.0}, w);
  CHECK(bad.max_abs_err == doctest::Approx(2.0));
  CHECK_FALSE(bad.ok(1e-6));
  CHECK(verify({3, {-0.5}, 0.0, 0.0}, ShiftMatrix({1.0, 1.0, 0.0})).zero_weight);
}
