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

#include "hyprep/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyprep/error.hpp"

namespace hyprep {

Complex eval_univariate(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc{};
  for (const auto& c : coeffs) acc = acc * z + c;
  return acc;
}

namespace {

// Parlett-Reinsch balancing by powers of two; similarity, so eigenvalues are
// unchanged up to rounding while their condition improves.
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Newton refinement; a step is kept only if it lowers the residual, so roots
// near multiple roots are left alone rather than thrown off.
Complex polish(const std::vector<Complex>& p, Complex z) {
  std::vector<Complex> dp;
  const std::size_t d = p.size() - 1;
  for (std::size_t i = 0; i < d; ++i) dp.push_back(p[i] * static_cast<double>(d - i));
  double res = std::abs(eval_univariate(p, z));
  for (int it = 0; it < 3 && res > 0.0; ++it) {
    const Complex der = eval_univariate(dp, z);
    if (der == Complex{}) break;
    const Complex next = z - eval_univariate(p, z) / der;
    const double nres = std::abs(eval_univariate(p, next));
    if (!(nres < res)) break;
    z = next;
    res = nres;
  }
  return z;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
  double big = 0.0;
  for (const auto& c : coeffs) big = std::max(big, std::abs(c));
  if (big == 0.0 || !std::isfinite(big)) {
    throw Error(ErrorKind::DegenerateInput, "zero polynomial has no root profile");
  }
  std::size_t lead = 0;
  while (lead < coeffs.size() && std::abs(coeffs[lead]) <= 1e-14 * big) ++lead;
  std::vector<Complex> p(coeffs.begin() + static_cast<std::ptrdiff_t>(lead), coeffs.end());

  std::vector<Complex> roots;
  while (p.size() > 1 && p.back() == Complex{}) {
    roots.emplace_back(0.0);
    p.pop_back();
  }
  const Eigen::Index d = static_cast<Eigen::Index>(p.size()) - 1;
  if (d == 1) {
    roots.push_back(-p[1] / p[0]);
  } else if (d > 1) {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) comp(0, j) = -p[j + 1] / p[0];
    for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    balance(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::SolveFailed, "companion eigensolve");
    for (Eigen::Index i = 0; i < d; ++i) roots.push_back(polish(p, es.eigenvalues()(i)));
  }
  return roots;
}

std::vector<Complex> poly_roots(const std::vector<double>& coeffs) {
  return poly_roots(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

bool RootProfile::has_repeated() const noexcept {
  return std::any_of(roots.begin(), roots.end(), [](const RootCluster& r) { return r.multiplicity > 1; });
}

int RootProfile::degree() const noexcept {
  int d = static_cast<int>(nonreal.size());
  for (const auto& r : roots) d += r.multiplicity;
  return d;
}

RootProfile real_roots(const std::vector<double>& coeffs, const RootOptions& opt) {
  const auto raw = poly_roots(coeffs);
  // The eigensolver and the polish step do not keep conjugate pairs exact, so
  // a double real root can come back as two nearby roots whose imaginary
  // parts do not cancel. Clustering the roots together with their mirror
  // images restores the symmetry; every cluster then counts twice.
  std::vector<Complex> sym(raw);
  for (const auto& z : raw) sym.push_back(std::conj(z));
  const std::size_t m = sym.size();

  // Single-linkage clustering by union-find.
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double rad = opt.cluster_rad * (1.0 + std::max(std::abs(sym[i]), std::abs(sym[j])));
      if (std::abs(sym[i] - sym[j]) <= rad) parent[find(i)] = find(j);
    }
  }

  RootProfile prof;
  std::vector<Complex> cp(coeffs.begin(), coeffs.end());
  for (std::size_t i = 0; i < m; ++i) {
    if (find(i) != i) continue;
    Complex sum{};
    int count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (find(j) == i) {
        sum += sym[j];
        ++count;
      }
    }
    const Complex mean = sum / static_cast<double>(count);
    const int mult = std::max(1, count / 2);
    if (std::abs(mean.imag()) <= opt.tol_root * (1.0 + std::abs(mean))) {
      prof.roots.push_back({mean.real(), mult});
      prof.residual = std::max(prof.residual, std::abs(eval_univariate(cp, mean.real())));
    } else {
      for (int k = 0; k < mult; ++k) prof.nonreal.push_back(mean);
      prof.all_real = false;
    }
  }
  std::sort(prof.roots.begin(), prof.roots.end(),
            [](const RootCluster& a, const RootCluster& b) { return a.value < b.value; });

  std::size_t lead = 0;
  double big = 0.0;
  for (double c : coeffs) big = std::max(big, std::abs(c));
  while (lead < coeffs.size() && std::abs(coeffs[lead]) <= 1e-14 * big) ++lead;
  const std::size_t d = raw.size();
  double disc = std::pow(coeffs[lead], 2.0 * static_cast<double>(d) - 2.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) disc *= std::norm(raw[i] - raw[j]);
  }
  // prod over unordered pairs of (r_i - r_j)^2 is real for real polynomials;
  // its sign is (-1)^(number of nonreal pairs).
  if ((prof.nonreal.size() / 2) % 2 == 1) disc = -disc;
  prof.discriminant = disc;
  return prof;
}

QuadraticRoots solve_quadratic(Complex a, Complex b, Complex c, double snap) {
  if (a == Complex{}) throw Error(ErrorKind::DegenerateInput, "quadratic with zero leading term");
  Complex disc = b * b - 4.0 * a * c;
  QuadraticRoots out;
  if (std::abs(disc) <= snap * (std::norm(b) + std::abs(4.0 * a * c))) {
    out.r1 = out.r2 = -b / (2.0 * a);
    out.double_root = true;
    return out;
  }
  const Complex sq = std::sqrt(disc);
  // Avoid cancellation: q = -(b + sign * sqrt(disc)) / 2 with the sign that
  // makes |q| large, then r1 = q / a and r2 = c / q.
  const Complex q = (std::real(std::conj(b) * sq) >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
  out.r1 = q / a;
  out.r2 = (q == Complex{}) ? -out.r1 : c / q;
  return out;
}

}  // namespace hyprep
