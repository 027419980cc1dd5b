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

#include "hyprep/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hyprep/error.hpp"
#include "hyprep/hyperbolicity.hpp"

namespace hyprep {

ShiftMatrix::ShiftMatrix(std::vector<Complex> w)
    : n(static_cast<int>(w.size())), weights(std::move(w)) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "shift matrix needs n >= 3");
}

Eigen::MatrixXcd ShiftMatrix::dense() const {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) a(j, (j + 1) % n) = weights[j];
  return a;
}

Complex ShiftMatrix::product() const {
  Complex p = 1.0;
  for (const auto& a : weights) p *= a;
  return p;
}

Complex shift_determinant(const ShiftMatrix& w, const ProjPoint& p) {
  const Eigen::MatrixXcd a = w.dense();
  const Eigen::MatrixXcd m = p.t * Eigen::MatrixXcd::Identity(w.n, w.n) + (p.u / 2.0) * a.adjoint() +
                             (p.v / 2.0) * a;
  return m.partialPivLu().determinant();
}

namespace {

// Adds prod |a_e|^2 over every matching of the cycle edges e..n-1 into
// sums[r], where edge e joins vertices e and e+1 (mod n).
void matchings(const std::vector<double>& w2, int e, bool first_used, double prod, int r,
               std::vector<double>& sums) {
  const int n = static_cast<int>(w2.size());
  if (e >= n) {
    sums[r] += prod;
    return;
  }
  matchings(w2, e + 1, first_used, prod, r, sums);
  // The last edge touches vertex 0, shared with edge 0.
  if (e == n - 1 && first_used) return;
  matchings(w2, e + 2, first_used || e == 0, prod * w2[e], r + 1, sums);
}

}  // namespace

InvariantForm forward_matching(const ShiftMatrix& w) {
  const int n = w.n;
  if (n < 3 || static_cast<int>(w.weights.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "shift matrix needs n >= 3");
  }
  if (n > 20) throw Error(ErrorKind::InvalidArgument, "matching enumeration is limited to n <= 20");
  std::vector<double> w2;
  for (const auto& a : w.weights) w2.push_back(std::norm(a));
  std::vector<double> sums(static_cast<std::size_t>(n / 2) + 1, 0.0);
  matchings(w2, 0, false, 1.0, 0, sums);

  InvariantForm f;
  f.n = n;
  double q = 1.0;
  for (int r = 1; r <= n / 2; ++r) {
    q *= -0.25;
    f.c.push_back(q * sums[r]);
  }
  const Complex z = ((n - 1) % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, 1 - n) * w.product();
  f.c0 = z.real();
  f.ct0 = z.imag();
  return f;
}

InvariantForm forward_interpolate(const ShiftMatrix& w) {
  const int n = w.n;
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "shift matrix needs n >= 3");
  double radius = 0.0;
  for (const auto& a : w.weights) radius = std::max(radius, std::abs(a));
  if (radius == 0.0) radius = 1.0;

  // Unknowns: t^n coefficient, c_1..c_{n/2}, c0, ct0.
  const int k = n / 2 + 3;
  const int fit = k + 4, holdout = 3;
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> ut(-1.0, 1.0), ur(0.5, 1.5), uth(0.0, 2.0 * std::numbers::pi);
  auto row = [&](double t, double rho, double th) {
    Eigen::VectorXd r(k);
    r(0) = std::pow(t, n);
    for (int j = 1; j <= n / 2; ++j) r(j) = std::pow(t, n - 2 * j) * std::pow(rho, 2 * j);
    r(k - 2) = std::pow(rho, n) * std::cos(n * th);
    r(k - 1) = std::pow(rho, n) * std::sin(n * th);
    return r;
  };
  auto value = [&](double t, double rho, double th) {
    // f is real on these points; the imaginary part is rounding.
    return shift_determinant(w, {t, std::polar(rho, th), std::polar(rho, -th)}).real();
  };

  Eigen::MatrixXd a(fit, k);
  Eigen::VectorXd b(fit);
  std::vector<std::array<double, 3>> hold;
  for (int i = 0; i < fit + holdout; ++i) {
    const double t = radius * ut(rng), rho = radius * ur(rng), th = uth(rng);
    if (i < fit) {
      a.row(i) = row(t, rho, th).transpose();
      b(i) = value(t, rho, th);
    } else {
      hold.push_back({t, rho, th});
    }
  }
  // Columns scale like radius^n; divide it out to keep the system balanced.
  const double sc = std::pow(radius, n);
  const Eigen::VectorXd x = (a / sc).colPivHouseholderQr().solve(b / sc);

  double vmax = 1.0;
  for (int i = 0; i < k; ++i) vmax = std::max(vmax, std::abs(x(i)));
  for (const auto& h : hold) {
    const double pred = row(h[0], h[1], h[2]).dot(x);
    const double got = value(h[0], h[1], h[2]);
    if (std::abs(pred - got) > 1e-8 * sc * vmax) {
      throw Error(ErrorKind::OracleDisagreement, "determinant sample off the fitted form");
    }
  }
  if (std::abs(x(0) - 1.0) > 1e-8) {
    throw Error(ErrorKind::OracleDisagreement, "leading coefficient of the shift form is not 1");
  }

  InvariantForm f;
  f.n = n;
  for (int j = 1; j <= n / 2; ++j) f.c.push_back(x(j));
  f.c0 = x(k - 2);
  f.ct0 = x(k - 1);
  return f;
}

double form_distance(const InvariantForm& a, const InvariantForm& b) {
  if (a.n != b.n || a.c.size() != b.c.size()) {
    throw Error(ErrorKind::InvalidArgument, "comparing forms of different degree");
  }
  double m = std::max(std::abs(a.c0 - b.c0), std::abs(a.ct0 - b.ct0));
  for (std::size_t i = 0; i < a.c.size(); ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
  return m;
}

InvariantForm forward_checked(const ShiftMatrix& w, double rel_tol) {
  const InvariantForm m = forward_matching(w);
  const InvariantForm i = forward_interpolate(w);
  const double d = form_distance(m, i);
  if (d > rel_tol * m.scale()) {
    throw Error(ErrorKind::OracleDisagreement, "matching and interpolation differ by " + std::to_string(d));
  }
  return m;
}

VerifyReport verify(const InvariantForm& form, const ShiftMatrix& w) {
  form.validate();
  VerifyReport rep;
  rep.computed = forward_matching(w);
  if (rep.computed.n != form.n) throw Error(ErrorKind::InvalidArgument, "degree mismatch");
  for (std::size_t i = 0; i < form.c.size(); ++i) rep.deltas.push_back(rep.computed.c[i] - form.c[i]);
  rep.deltas.push_back(rep.computed.c0 - form.c0);
  rep.deltas.push_back(rep.computed.ct0 - form.ct0);
  for (double d : rep.deltas) rep.max_abs_err = std::max(rep.max_abs_err, std::abs(d));
  rep.hyperbolic = is_hyperbolic(form);
  rep.dihedral = std::abs(rep.computed.ct0) <= 1e-9 * rep.computed.scale();
  rep.zero_weight = std::any_of(w.weights.begin(), w.weights.end(), [](Complex a) { return a == Complex{}; });
  return rep;
}

ShiftMatrix realize_real(const ShiftMatrix& w, double tol) {
  const int n = w.n;
  const Complex prod = w.product();
  if (std::abs(prod.imag()) > tol * std::abs(prod)) {
    throw Error(ErrorKind::NotDihedral, "product of weights is not real");
  }
  // a_j = r_j e^{i alpha_j} with alpha_n = -(alpha_1 + ... + alpha_{n-1}), so
  // a negative product leaves a signed r_n. A zero weight has alpha = 0.
  std::vector<double> alpha(n, 0.0);
  for (int j = 0; j + 1 < n; ++j) alpha[j] = w.weights[j] == Complex{} ? 0.0 : std::arg(w.weights[j]);

  // theta_j = -(alpha_j + ... + alpha_{n-1}), theta_n = 0.
  std::vector<double> theta(n, 0.0);
  for (int j = n - 2; j >= 0; --j) theta[j] = theta[j + 1] - alpha[j];
  Eigen::VectorXcd d(n);
  for (int j = 0; j < n; ++j) d(j) = std::polar(1.0, theta[j]);
  const Eigen::MatrixXcd b = d.asDiagonal() * w.dense() * d.conjugate().asDiagonal();

  std::vector<Complex> out;
  for (int j = 0; j < n; ++j) {
    const Complex bj = b(j, (j + 1) % n);
    if (std::abs(bj.imag()) > 1e-8 * (1.0 + std::abs(bj))) {
      throw Error(ErrorKind::NotDihedral, "dephased weight is not real");
    }
    out.emplace_back(bj.real(), 0.0);
  }
  return ShiftMatrix(std::move(out));
}

}  // namespace hyprep
