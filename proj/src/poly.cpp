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

#include "hyprep/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyprep/error.hpp"

namespace hyprep {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::PerturbationFailed: return "PerturbationFailed";
    case ErrorKind::NonrealCircle: return "NonrealCircle";
    case ErrorKind::SolveFailed: return "SolveFailed";
    case ErrorKind::LeadingZero: return "LeadingZero";
    case ErrorKind::RealSimplePoint: return "RealSimplePoint";
    case ErrorKind::AmbiguousOrbits: return "AmbiguousOrbits";
    case ErrorKind::NoVanishingForm: return "NoVanishingForm";
    case ErrorKind::NoetherResidual: return "NoetherResidual";
    case ErrorKind::AdjugateMismatch: return "AdjugateMismatch";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::IndefiniteDiagonal: return "IndefiniteDiagonal";
    case ErrorKind::ConvergenceFailed: return "ConvergenceFailed";
    case ErrorKind::NotDihedral: return "NotDihedral";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

double ProjPoint::norm() const noexcept {
  return std::sqrt(std::norm(t) + std::norm(u) + std::norm(v));
}

ProjPoint ProjPoint::normalized() const noexcept {
  const double r = norm();
  if (r == 0.0) return *this;
  return {t / r, u / r, v / r};
}

TrivariatePoly::TrivariatePoly(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
}

TrivariatePoly::TrivariatePoly(int degree, Terms terms) : degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  for (auto& [e, c] : terms) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree) {
      throw Error(ErrorKind::InvalidArgument,
                  "exponent does not match degree " + std::to_string(degree));
    }
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::InvalidArgument, "non-finite coefficient");
    }
    if (c != Complex{}) terms_.emplace(e, c);
  }
}

TrivariatePoly TrivariatePoly::monomial(const Exponent& e, Complex c) {
  return TrivariatePoly(e[0] + e[1] + e[2], Terms{{e, c}});
}

TrivariatePoly TrivariatePoly::constant(Complex c) { return monomial({0, 0, 0}, c); }

Complex TrivariatePoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex{} : it->second;
}

double TrivariatePoly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double TrivariatePoly::coeff_norm() const noexcept {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

namespace {

// Small power table so evaluation does not call std::pow per term.
std::vector<Complex> powers(Complex z, int k) {
  std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
  out[0] = 1.0;
  for (int i = 1; i <= k; ++i) out[i] = out[i - 1] * z;
  return out;
}

}  // namespace

Complex TrivariatePoly::operator()(Complex t, Complex u, Complex v) const {
  const auto pt = powers(t, degree_);
  const auto pu = powers(u, degree_);
  const auto pv = powers(v, degree_);
  Complex acc{};
  for (const auto& [e, c] : terms_) acc += c * pt[e[0]] * pu[e[1]] * pv[e[2]];
  return acc;
}

TrivariatePoly TrivariatePoly::dt() const {
  if (degree_ == 0) return TrivariatePoly(0);
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e[0] > 0) out[{e[0] - 1, e[1], e[2]}] = c * static_cast<double>(e[0]);
  }
  return TrivariatePoly(degree_ - 1, std::move(out));
}

TrivariatePoly TrivariatePoly::pruned(double rel_tol) const {
  const double cut = rel_tol * max_abs_coeff();
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (std::abs(c) > cut) out.emplace(e, c);
  }
  return TrivariatePoly(degree_, std::move(out));
}

TrivariatePoly TrivariatePoly::operator-() const { return Complex(-1.0) * *this; }

TrivariatePoly operator+(const TrivariatePoly& a, const TrivariatePoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_ != b.degree_) {
    throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
  }
  TrivariatePoly::Terms out = a.terms_;
  for (const auto& [e, c] : b.terms_) out[e] += c;
  return TrivariatePoly(a.degree_, std::move(out));
}

TrivariatePoly operator-(const TrivariatePoly& a, const TrivariatePoly& b) { return a + (-b); }

TrivariatePoly operator*(const TrivariatePoly& a, const TrivariatePoly& b) {
  TrivariatePoly::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
    }
  }
  return TrivariatePoly(a.degree_ + b.degree_, std::move(out));
}

TrivariatePoly operator*(Complex s, const TrivariatePoly& a) {
  TrivariatePoly::Terms out;
  for (const auto& [e, c] : a.terms_) out.emplace(e, s * c);
  return TrivariatePoly(a.degree_, std::move(out));
}

double max_coeff_diff(const TrivariatePoly& a, const TrivariatePoly& b) {
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(e)));
  for (const auto& [e, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(e)));
  return m;
}

std::vector<Exponent> monomials_of_degree(int k) {
  std::vector<Exponent> out;
  for (int i = k; i >= 0; --i) {
    for (int j = k - i; j >= 0; --j) out.push_back({i, j, k - i - j});
  }
  return out;
}

TrivariatePoly substitute_linear(const TrivariatePoly& p, const TrivariatePoly& t_image,
                                 const TrivariatePoly& u_image, const TrivariatePoly& v_image) {
  const int d = p.degree();
  std::vector<TrivariatePoly> pt{TrivariatePoly::constant(1.0)}, pu = pt, pv = pt;
  for (int i = 1; i <= d; ++i) {
    pt.push_back(pt.back() * t_image);
    pu.push_back(pu.back() * u_image);
    pv.push_back(pv.back() * v_image);
  }
  TrivariatePoly acc(d);
  for (const auto& [e, c] : p.terms()) acc = acc + c * (pt[e[0]] * pu[e[1]] * pv[e[2]]);
  return acc.pruned();
}

}  // namespace hyprep
