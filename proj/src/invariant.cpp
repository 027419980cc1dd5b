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

#include "hyprep/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyprep/error.hpp"

namespace hyprep {

void InvariantForm::validate() const {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "degree must be at least 3");
  if (static_cast<int>(c.size()) != n / 2) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(n / 2) + " values in c, got " + std::to_string(c.size()));
  }
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(c.begin(), c.end(), finite) || !finite(c0) || !finite(ct0)) {
    throw Error(ErrorKind::InvalidArgument, "non-finite coefficient");
  }
}

double InvariantForm::s() const noexcept { return std::hypot(c0, ct0); }

std::vector<double> InvariantForm::p_coeffs() const {
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  p[0] = 1.0;
  for (std::size_t r = 1; r <= c.size(); ++r) p[2 * r] = c[r - 1];
  return p;
}

double InvariantForm::scale() const noexcept {
  double m = std::max({1.0, std::abs(c0), std::abs(ct0)});
  for (double x : c) m = std::max(m, std::abs(x));
  return m;
}

TrivariatePoly expand(const InvariantForm& form) {
  form.validate();
  const int n = form.n;
  TrivariatePoly::Terms terms;
  terms[{n, 0, 0}] = 1.0;
  for (int r = 1; r <= n / 2; ++r) terms[{n - 2 * r, r, r}] += form.c[r - 1];
  terms[{0, n, 0}] += Complex(form.c0, -form.ct0) / 2.0;
  terms[{0, 0, n}] += Complex(form.c0, form.ct0) / 2.0;
  return TrivariatePoly(n, std::move(terms));
}

TrivariatePoly xy_to_uv(const TrivariatePoly& p) {
  using T = TrivariatePoly;
  const T t = T::monomial({1, 0, 0});
  const T u = T::monomial({0, 1, 0});
  const T v = T::monomial({0, 0, 1});
  const T x = Complex(0.5) * (u + v);
  const T y = Complex(0.0, -0.5) * (u - v);
  return substitute_linear(p, t, x, y);
}

TrivariatePoly uv_to_xy(const TrivariatePoly& p) {
  using T = TrivariatePoly;
  const T t = T::monomial({1, 0, 0});
  const T x = T::monomial({0, 1, 0});
  const T y = T::monomial({0, 0, 1});
  return substitute_linear(p, t, x + Complex(0.0, 1.0) * y, x - Complex(0.0, 1.0) * y);
}

Complex root_of_unity(int n, int k) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return 1.0;
  // Exact values at the quarter turns keep the common cases free of rounding.
  if (4 * k == n) return {0.0, 1.0};
  if (2 * k == n) return -1.0;
  if (4 * k == 3 * n) return {0.0, -1.0};
  const double a = 2.0 * std::numbers::pi * k / n;
  return {std::cos(a), std::sin(a)};
}

int eigen_class(const Exponent& e, int n) noexcept {
  int r = (e[1] - e[2]) % n;
  return r < 0 ? r + n : r;
}

TrivariatePoly rotate(const TrivariatePoly& p, int n, int ell) {
  TrivariatePoly::Terms out;
  for (const auto& [e, c] : p.terms()) {
    const long long k = static_cast<long long>(ell) * (e[1] - e[2]);
    out.emplace(e, c * root_of_unity(n, static_cast<int>(((k % n) + n) % n)));
  }
  return TrivariatePoly(p.degree(), std::move(out));
}

TrivariatePoly conj_involution(const TrivariatePoly& p) {
  TrivariatePoly::Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace(Exponent{e[0], e[2], e[1]}, std::conj(c));
  return TrivariatePoly(p.degree(), std::move(out));
}

TrivariatePoly reflect_swap(const TrivariatePoly& p) {
  TrivariatePoly::Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace(Exponent{e[0], e[2], e[1]}, c);
  return TrivariatePoly(p.degree(), std::move(out));
}

MonomialBasis eigenspace_basis(int n, int degree, int ell) {
  if (n < 1 || ell < 0 || ell >= n) throw Error(ErrorKind::InvalidArgument, "ell out of range");
  MonomialBasis b{n, degree, ell, {}};
  for (const auto& e : monomials_of_degree(degree)) {
    if (eigen_class(e, n) == ell) b.monomials.push_back(e);
  }
  return b;
}

int eigenspace_dim_formula(int n, int ell) {
  if (n < 3 || ell < 0 || ell >= n) throw Error(ErrorKind::InvalidArgument, "bad (n, ell)");
  if (n % 2 == 1) return (n + 1) / 2;
  return ell % 2 == 0 ? n / 2 : n / 2 + 1;
}

int invariant_dim(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "degree must be at least 3");
  return n / 2 + 3;
}

}  // namespace hyprep
