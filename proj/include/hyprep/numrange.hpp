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

#ifndef HYPREP_NUMRANGE_HPP
#define HYPREP_NUMRANGE_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "hyprep/forward.hpp"
#include "hyprep/roots.hpp"

namespace hyprep {

struct SupportPoint {
  double h = 0.0;          // largest eigenvalue of cos(theta) Re A + sin(theta) Im A
  double x = 0.0, y = 0.0; // x*Ax for the top unit eigenvector
};

/// The eigenvector is fixed by making its first nonzero component real
/// positive, so the touch point is deterministic when the top eigenvalue is
/// simple.
SupportPoint support(const Eigen::MatrixXcd& a, double theta);
SupportPoint support(const ShiftMatrix& w, double theta);

struct BoundarySample {
  std::vector<double> angles;
  std::vector<double> support;
  std::vector<double> x, y;
};

/// m uniform angles in [0, 2 pi). Throws InvalidArgument for m < 8.
BoundarySample boundary_sample(const Eigen::MatrixXcd& a, int m, unsigned threads = 1);
BoundarySample boundary_sample(const ShiftMatrix& w, int m, unsigned threads = 1);

/// max |h_1 - h_2| over the grid is at most tol.
bool range_equal(const ShiftMatrix& a, const ShiftMatrix& b, int m, double tol, double* max_diff = nullptr,
                 unsigned threads = 1);

struct CurvePoint {
  double theta, rho, x, y;
};

/// Real points of f(1, x + iy, x - iy) = 0 along lines through the origin,
/// theta in [0, pi) and signed rho.
std::vector<CurvePoint> curve_sample(const InvariantForm& form, int m, const RootOptions& opt = {});

/// CSV with header theta,h,x,y and LF line endings.
void write_boundary_csv(std::ostream& os, const BoundarySample& b);
/// CSV with header theta,rho,x,y.
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& pts);
/// Closed polyline through the boundary points.
void write_boundary_svg(std::ostream& os, const BoundarySample& b);

}  // namespace hyprep

#endif  // HYPREP_NUMRANGE_HPP
