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

#ifndef HYPREP_INVARIANT_HPP
#define HYPREP_INVARIANT_HPP

#include <vector>

#include "hyprep/poly.hpp"

namespace hyprep {

/// A monic real form of degree n fixed by the rotation t -> t, u -> wu, v -> v/w:
///
///   f = t^n + sum_r c_r t^(n-2r) (uv)^r + c0 (u^n + v^n)/2 + ct0 (u^n - v^n)/(2i)
struct InvariantForm {
  int n = 3;
  std::vector<double> c;  // c_1 .. c_{n/2}
  double c0 = 0.0;
  double ct0 = 0.0;

  /// Throws InvalidArgument unless n >= 3, |c| = n/2 and every field is finite.
  void validate() const;

  /// sqrt(c0^2 + ct0^2).
  double s() const noexcept;

  /// Coefficients of p(t) = t^n + sum c_r t^(n-2r), highest degree first.
  std::vector<double> p_coeffs() const;

  /// Largest absolute coefficient, at least 1 because the form is monic.
  double scale() const noexcept;
};

TrivariatePoly expand(const InvariantForm& form);

/// Change of coordinates between (t, x, y) and (t, u, v) with u = x + iy, v = x - iy.
TrivariatePoly xy_to_uv(const TrivariatePoly& p);
TrivariatePoly uv_to_xy(const TrivariatePoly& p);

/// Primitive n-th root of unity raised to k, taken from an exact table so that
/// k = 0 (mod n) gives exactly 1.
Complex root_of_unity(int n, int k);

/// h(t, u, v) -> h(t, w^ell u, w^-ell v) with w = exp(2 pi i / n).
TrivariatePoly rotate(const TrivariatePoly& p, int n, int ell);

/// Coefficient of (i,j,k) becomes the conjugate of the coefficient of (i,k,j).
TrivariatePoly conj_involution(const TrivariatePoly& p);

/// u <-> v.
TrivariatePoly reflect_swap(const TrivariatePoly& p);

struct MonomialBasis {
  int n = 0;
  int degree = 0;
  int ell = 0;
  std::vector<Exponent> monomials;
};

/// Eigenspace class of t^i u^j v^k under the rotation: (j - k) mod n.
int eigen_class(const Exponent& e, int n) noexcept;

MonomialBasis eigenspace_basis(int n, int degree, int ell);

/// Closed-form size of eigenspace_basis(n, n - 1, ell).
int eigenspace_dim_formula(int n, int ell);

int invariant_dim(int n);

}  // namespace hyprep

#endif  // HYPREP_INVARIANT_HPP
