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

#ifndef HYPREP_FORWARD_HPP
#define HYPREP_FORWARD_HPP

#include <Eigen/Dense>
#include <vector>

#include "hyprep/invariant.hpp"

namespace hyprep {

/// S(a_1, ..., a_n): a_j at (j, j+1) and a_n in the corner (n, 1).
struct ShiftMatrix {
  int n = 0;
  std::vector<Complex> weights;

  ShiftMatrix() = default;
  explicit ShiftMatrix(std::vector<Complex> w);

  Eigen::MatrixXcd dense() const;
  Complex product() const;
};

/// det(t I + (u/2) A* + (v/2) A) at one point.
Complex shift_determinant(const ShiftMatrix& w, const ProjPoint& p);

/// Closed form through matchings of the n-cycle:
///   c_r = (-1/4)^r sum over r-matchings of prod |a_e|^2
///   c0 + i ct0 = (-1)^(n-1) 2^(1-n) prod a_j
InvariantForm forward_matching(const ShiftMatrix& w);

/// Least-squares fit of the invariant coefficients to the determinant sampled
/// on real points (t, rho e^{i theta}, rho e^{-i theta}). Holdout points that
/// miss the fit raise OracleDisagreement.
InvariantForm forward_interpolate(const ShiftMatrix& w);

/// Both forward maps; throws OracleDisagreement if they differ by more than
/// rel_tol relative to the coefficient scale.
InvariantForm forward_checked(const ShiftMatrix& w, double rel_tol = 1e-9);

/// max |x - y| over the invariant coefficients (c, c0, ct0).
double form_distance(const InvariantForm& a, const InvariantForm& b);

struct VerifyReport {
  double max_abs_err = 0.0;
  std::vector<double> deltas;  // c_1 .. c_{n/2}, c0, ct0
  bool hyperbolic = false;
  bool dihedral = false;       // ct0 of the shift form vanishes
  bool zero_weight = false;
  InvariantForm computed;

  bool ok(double tol) const noexcept { return max_abs_err <= tol; }
};

VerifyReport verify(const InvariantForm& form, const ShiftMatrix& w);

/// Diagonal unitary gauge U = diag(e^{i theta_j}) that makes every weight
/// real, with |b_j| = |a_j|. Throws NotDihedral if prod a_j is not real.
ShiftMatrix realize_real(const ShiftMatrix& w, double tol = 1e-9);

}  // namespace hyprep

#endif  // HYPREP_FORWARD_HPP
