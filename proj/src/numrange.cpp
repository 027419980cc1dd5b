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

#include "hyprep/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "hyprep/error.hpp"
#include "hyprep/parallel.hpp"

namespace hyprep {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SupportPoint support(const Eigen::MatrixXcd& a, double theta) {
  const Eigen::MatrixXcd re = 0.5 * (a + a.adjoint());
  const Eigen::MatrixXcd im = Complex(0.0, -0.5) * (a - a.adjoint());
  const Eigen::MatrixXcd h = std::cos(theta) * re + std::sin(theta) * im;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::Index top = h.rows() - 1;  // eigenvalues ascend
  Eigen::VectorXcd x = es.eigenvectors().col(top);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x(i)) > 1e-12) {
      x *= std::conj(x(i)) / std::abs(x(i));
      break;
    }
  }
  const Complex z = x.dot(a * x);  // dot conjugates its first argument
  return {es.eigenvalues()(top), z.real(), z.imag()};
}

SupportPoint support(const ShiftMatrix& w, double theta) { return support(w.dense(), theta); }

BoundarySample boundary_sample(const Eigen::MatrixXcd& a, int m, unsigned threads) {
  if (m < 8) throw Error(ErrorKind::InvalidArgument, "need at least 8 angles");
  BoundarySample b;
  b.angles.resize(m);
  b.support.resize(m);
  b.x.resize(m);
  b.y.resize(m);
  parallel_for(static_cast<std::size_t>(m), threads, [&](std::size_t i) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    const SupportPoint s = support(a, th);
    b.angles[i] = th;
    b.support[i] = s.h;
    b.x[i] = s.x;
    b.y[i] = s.y;
  });
  return b;
}

BoundarySample boundary_sample(const ShiftMatrix& w, int m, unsigned threads) {
  return boundary_sample(w.dense(), m, threads);
}

bool range_equal(const ShiftMatrix& a, const ShiftMatrix& b, int m, double tol, double* max_diff, unsigned threads) {
  const BoundarySample sa = boundary_sample(a, m, threads);
  const BoundarySample sb = boundary_sample(b, m, threads);
  double d = 0.0;
  for (int i = 0; i < m; ++i) d = std::max(d, std::abs(sa.support[i] - sb.support[i]));
  if (max_diff) *max_diff = d;
  return d <= tol;
}

std::vector<CurvePoint> curve_sample(const InvariantForm& form, int m, const RootOptions& opt) {
  form.validate();
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "need at least one angle");
  const int n = form.n;
  std::vector<CurvePoint> out;
  for (int i = 0; i < m; ++i) {
    const double th = std::numbers::pi * static_cast<double>(i) / m;
    // f(1, rho e^{i th}, rho e^{-i th}) as a real polynomial in rho, highest first.
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    p[n] = 1.0;
    for (int r = 1; r <= n / 2; ++r) p[n - 2 * r] += form.c[r - 1];
    p[0] += form.c0 * std::cos(n * th) + form.ct0 * std::sin(n * th);
    for (const auto& r : real_roots(p, opt).roots) {
      out.push_back({th, r.value, r.value * std::cos(th), r.value * std::sin(th)});
    }
  }
  return out;
}

void write_boundary_csv(std::ostream& os, const BoundarySample& b) {
  os << "theta,h,x,y\n";
  for (std::size_t i = 0; i < b.angles.size(); ++i) {
    os << num(b.angles[i]) << ',' << num(b.support[i]) << ',' << num(b.x[i]) << ',' << num(b.y[i]) << '\n';
  }
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& pts) {
  os << "theta,rho,x,y\n";
  for (const auto& p : pts) os << num(p.theta) << ',' << num(p.rho) << ',' << num(p.x) << ',' << num(p.y) << '\n';
}

void write_boundary_svg(std::ostream& os, const BoundarySample& b) {
  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  if (!b.x.empty()) {
    lo_x = *std::min_element(b.x.begin(), b.x.end());
    hi_x = *std::max_element(b.x.begin(), b.x.end());
    lo_y = *std::min_element(b.y.begin(), b.y.end());
    hi_y = *std::max_element(b.y.begin(), b.y.end());
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double pad = 0.05 * span;
  const double size = 512.0;
  const double k = size / (span + 2.0 * pad);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < b.x.size(); ++i) {
    char buf[64];
    // SVG y grows downwards.
    std::snprintf(buf, sizeof buf, "%.3f,%.3f ", (b.x[i] - lo_x + pad) * k, (hi_y - b.y[i] + pad) * k);
    os << buf;
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace hyprep
