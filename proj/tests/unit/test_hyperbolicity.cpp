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
#include "hyprep/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace hyprep;

namespace {

const InvariantForm kQuartic{4, {-26.0, 72.0}, -72.0, 0.0};
const InvariantForm kQuintic{5, {-12.5, 33.75}, 3 * std::sqrt(3.0) * (1 + std::sqrt(2.0)),
                             3 * std::sqrt(3.0) * (std::sqrt(2.0) - 1)};

std::vector<double> poly_from_roots(const std::vector<double>& roots) {
  std::vector<double> p{1.0};
  for (double r : roots) {
    p.push_back(0.0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= r * p[i - 1];
  }
  return p;
}

std::vector<double> square(const std::vector<double>& p) {
  std::vector<double> q(2 * p.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) q[i + j] += p[i] * p[j];
  }
  return q;
}

}  // namespace

TEST_CASE("real root profiles") {
  const RootProfile a = real_roots({1, 0, -26, 0, 144});
  REQUIRE(a.roots.size() == 4);
  CHECK(a.roots[0].value == doctest::Approx(-std::sqrt(18.0)).epsilon(1e-12));
  CHECK(a.roots[1].value == doctest::Approx(-std::sqrt(8.0)).epsilon(1e-12));
  CHECK(a.roots[2].value == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  CHECK(a.roots[3].value == doctest::Approx(std::sqrt(18.0)).epsilon(1e-12));
  CHECK_FALSE(a.has_repeated());

  const RootProfile b = real_roots({1, 0, -26, 0, 0});
  REQUIRE(b.roots.size() == 3);
  CHECK(b.roots[1].value == 0.0);
  CHECK(b.roots[1].multiplicity == 2);
  CHECK(b.roots[2].value == doctest::Approx(std::sqrt(26.0)).epsilon(1e-12));

  const RootProfile c = real_roots({1, 0, 0, 0});
  REQUIRE(c.roots.size() == 1);
  CHECK(c.roots[0].multiplicity == 3);

  CHECK_THROWS_AS(real_roots({0.0, 0.0}), Error);
  CHECK_FALSE(real_roots({1, 0, 1}).all_real);
}

TEST_CASE("squaring a real-rooted polynomial doubles every multiplicity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> gap(0.3, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 5;
    std::vector<double> roots{-2.0 + gap(rng)};
    for (int i = 1; i < d; ++i) roots.push_back(roots.back() + gap(rng));
    const RootProfile prof = real_roots(square(poly_from_roots(roots)));
    REQUIRE(prof.roots.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(prof.roots[i].multiplicity == 2);
      CHECK(prof.roots[i].value == doctest::Approx(roots[i]).epsilon(1e-7));
    }
  }
}

TEST_CASE("quadratic solve snaps double roots") {
  const auto q = solve_quadratic(-36.0, 72.0, -36.0);
  CHECK(q.double_root);
  CHECK(q.r1 == Complex(1.0));
  const auto r = solve_quadratic(1.0, -3.0, 2.0);
  CHECK_FALSE(r.double_root);
  CHECK(std::abs((r.r1 - 2.0) * (r.r2 - 2.0)) + std::abs((r.r1 - 1.0) * (r.r2 - 1.0)) < 1e-14);
}

TEST_CASE("hyperbolicity of invariant forms") {
  CHECK(is_hyperbolic(kQuartic));
  CHECK(is_hyperbolic(kQuintic));
  CHECK_FALSE(is_hyperbolic({3, {0.0}, 1.0, 0.0}));
  CHECK(is_hyperbolic({3, {-3.0}, 0.0, 0.0}));

  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    const int n = 3 + k % 6;
    CHECK(is_hyperbolic(forward_matching(oracle::random_shift(rng, n, 0.1, 3.0))));
  }
}

TEST_CASE("classification") {
  const Classification q = classify(kQuartic);
  CHECK(q.kind == FormKind::Singular);
  CHECK(q.minus_repeated);
  CHECK_FALSE(q.plus_repeated);
  CHECK(q.borderline);
  CHECK(q.s == 72.0);

  const Classification p = classify(kQuintic);
  CHECK(p.kind == FormKind::Smooth);
  CHECK(p.plus.discriminant != 0.0);
  CHECK(p.minus.discriminant != 0.0);

  const Classification z = classify({4, {-2.0, 1.0}, 0.0, 0.0});
  CHECK(z.kind == FormKind::Singular);
  CHECK(z.zero_product);
  CHECK_FALSE(z.borderline);

  CHECK_THROWS_AS(classify({3, {0.0}, 1.0, 0.0}), Error);
}

TEST_CASE("smooth forms have separated roots on every line through (1,0,0)") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 12; ++k) {
    const int n = 3 + k % 5;
    const InvariantForm f = forward_matching(oracle::random_shift(rng, n, 0.5, 2.0));
    if (classify(f).kind != FormKind::Smooth) continue;
    double min_gap = INFINITY;
    for (int i = 0; i < 721; ++i) {
      const double th = 2.0 * std::numbers::pi * i / 720.0;
      auto p = f.p_coeffs();
      p.back() += f.c0 * std::cos(n * th) + f.ct0 * std::sin(n * th);
      const RootProfile prof = real_roots(p);
      REQUIRE(prof.all_real);
      for (std::size_t r = 1; r < prof.roots.size(); ++r) {
        min_gap = std::min(min_gap, prof.roots[r].value - prof.roots[r - 1].value);
      }
      for (const auto& r : prof.roots) {
        if (r.multiplicity > 1) min_gap = 0.0;
      }
    }
    CHECK(min_gap > 0.0);
  }
}

TEST_CASE("interlacing") {
  CHECK(interlace_check({1, 0, -26, 0, 72}, -72, 72, 0));
  CHECK(interlace_check({1, 0, -26, 0, 0}, 0, 144, 72));
  CHECK_THROWS_AS(interlace_check({1, 0, 0}, -1, 1, 0), Error);
  CHECK(interlace_check({1, 0, -3, 0}, -2, 2, 1));
}

TEST_CASE("perturbation of singular forms") {
  const InvariantForm q = perturb(kQuartic, 1e-2);
  CHECK(q.c0 == doctest::Approx(-71.99).epsilon(1e-15));
  CHECK(q.c == kQuartic.c);
  CHECK(q.ct0 == 0.0);
  const Classification cq = classify(q);
  CHECK(cq.kind == FormKind::Smooth);
  CHECK(cq.minus.roots.size() == 4);
  CHECK(std::abs(cq.minus.roots[1].value) < 0.1);

  const InvariantForm z = perturb({4, {-2.0, 1.0}, 0.0, 0.0}, 1e-3);
  CHECK(z.c0 == 1e-3);
  const RootProfile pz = real_roots(z.p_coeffs());
  CHECK(pz.roots.size() == 4);
  CHECK_FALSE(pz.has_repeated());
  CHECK(classify(z).kind == FormKind::Smooth);

  CHECK_THROWS_AS(perturb(kQuintic, 1e-3), Error);

  // The s > 0 branch moves the coefficients by exactly eps.
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const InvariantForm e = perturb(kQuartic, eps);
    CHECK(std::abs(e.c0 - kQuartic.c0) == doctest::Approx(eps).epsilon(1e-9));
  }
}
