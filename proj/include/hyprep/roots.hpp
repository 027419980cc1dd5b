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

#ifndef HYPREP_ROOTS_HPP
#define HYPREP_ROOTS_HPP

#include <vector>

#include "hyprep/poly.hpp"

namespace hyprep {

/// Horner evaluation; coefficients are ordered highest degree first.
Complex eval_univariate(const std::vector<Complex>& coeffs, Complex z);

/// All complex roots of a univariate polynomial (highest degree first) from
/// the eigenvalues of a balanced companion matrix. Leading coefficients below
/// 1e-14 of the largest one are trimmed. Trailing zero coefficients give
/// exact zero roots. Throws DegenerateInput for the zero polynomial and
/// SolveFailed if the eigenvalue iteration does not converge.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);
std::vector<Complex> poly_roots(const std::vector<double>& coeffs);

struct RootCluster {
  double value = 0.0;
  int multiplicity = 1;
};

struct RootProfile {
  std::vector<RootCluster> roots;  // real roots, ascending
  std::vector<Complex> nonreal;    // cluster means that failed the realness test
  bool all_real = true;
  double residual = 0.0;           // max |p(root)| over reported real roots
  double discriminant = 0.0;       // lead^(2d-2) prod_{i<j} (r_i - r_j)^2, diagnostic only

  bool has_repeated() const noexcept;
  int degree() const noexcept;
};

struct RootOptions {
  double tol_root = 1e-8;     // |Im z| <= tol_root (1 + |z|) counts as real
  double cluster_rad = 1e-6;  // single-linkage radius, relative to 1 + |z|
};

RootProfile real_roots(const std::vector<double>& coeffs, const RootOptions& opt = {});

/// Roots of a z^2 + b z + c with a != 0. A discriminant that is tiny next to
/// |b|^2 + |4ac| is snapped to zero so that double roots come back exact.
struct QuadraticRoots {
  Complex r1, r2;
  bool double_root = false;
};
QuadraticRoots solve_quadratic(Complex a, Complex b, Complex c, double snap = 1e-10);

}  // namespace hyprep

#endif  // HYPREP_ROOTS_HPP
