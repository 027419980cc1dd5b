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

// Test-only reference computations, kept independent of the library code.
#ifndef HYPREP_TESTS_ORACLES_HPP
#define HYPREP_TESTS_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "hyprep/forward.hpp"

namespace oracle {

using C = std::complex<double>;

// Leibniz expansion over all permutations.
inline C leibniz_det(const std::vector<std::vector<C>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  C total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    C term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det(t I + (u/2) A* + (v/2) A) for A = S(a_1..a_n), written out entrywise.
inline C shift_det(const std::vector<C>& a, C t, C u, C v) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<C>> m(n, std::vector<C>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    m[j][j] += t;
    m[j][(j + 1) % n] += a[j] * v / 2.0;
    m[(j + 1) % n][j] += std::conj(a[j]) * u / 2.0;
  }
  return leibniz_det(m);
}

// Number of degree-k monomials t^i u^j v^l with j - l = ell (mod n).
inline int count_class(int n, int k, int ell) {
  int c = 0;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      if ((((j - (k - i - j)) % n) + n) % n == ell) ++c;
    }
  }
  return c;
}

inline hyprep::ShiftMatrix random_shift(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> mod(lo, hi), ph(0.0, 2.0 * std::numbers::pi);
  std::vector<C> w;
  for (int j = 0; j < n; ++j) w.push_back(std::polar(mod(rng), ph(rng)));
  return hyprep::ShiftMatrix(w);
}

}  // namespace oracle

#endif  // HYPREP_TESTS_ORACLES_HPP
