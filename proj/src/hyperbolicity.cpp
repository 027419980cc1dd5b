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

#include "hyprep/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>

#include "hyprep/error.hpp"

namespace hyprep {

namespace {

std::vector<double> shifted(std::vector<double> p, double c) {
  p.back() += c;
  return p;
}

double sign0(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Coefficients (highest first) of prod (t - r).
std::vector<double> from_roots(const std::vector<double>& roots) {
  std::vector<double> p{1.0};
  for (double r : roots) {
    p.push_back(0.0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= r * p[i - 1];
  }
  return p;
}

double eval_real(const std::vector<double>& p, double t) {
  double acc = 0.0;
  for (double c : p) acc = acc * t + c;
  return acc;
}

std::vector<double> derivative(const std::vector<double>& p) {
  std::vector<double> d;
  const std::size_t deg = p.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) d.push_back(p[i] * static_cast<double>(deg - i));
  return d;
}

}  // namespace

bool is_hyperbolic(const InvariantForm& form, const RootOptions& opt) {
  form.validate();
  const auto p = form.p_coeffs();
  const double s = form.s();
  return real_roots(shifted(p, s), opt).all_real && real_roots(shifted(p, -s), opt).all_real;
}

Classification classify(const InvariantForm& form, const RootOptions& opt) {
  form.validate();
  Classification cl;
  const auto p = form.p_coeffs();
  cl.s = form.s();
  cl.plus = real_roots(shifted(p, cl.s), opt);
  cl.minus = real_roots(shifted(p, -cl.s), opt);
  if (!cl.plus.all_real || !cl.minus.all_real) {
    throw Error(ErrorKind::NotHyperbolic, "p(t) +/- s has nonreal roots");
  }
  cl.plus_repeated = cl.plus.has_repeated();
  cl.minus_repeated = cl.minus.has_repeated();
  cl.zero_product = cl.s <= 1e-12 * form.scale();
  if (cl.plus_repeated || cl.minus_repeated || cl.zero_product) cl.kind = FormKind::Singular;

  if (form.n % 2 == 0 && !cl.zero_product && cl.kind == FormKind::Singular) {
    const double zero_rad = opt.cluster_rad;
    auto only_double_zero = [&](const RootProfile& prof) {
      for (const auto& r : prof.roots) {
        if (r.multiplicity == 1) continue;
        if (r.multiplicity != 2 || std::abs(r.value) > zero_rad) return false;
      }
      return true;
    };
    cl.borderline = only_double_zero(cl.plus) && only_double_zero(cl.minus);
  }
  return cl;
}

bool interlace_check(const std::vector<double>& p, double a, double b, double c,
                     const RootOptions& opt) {
  if (!(a < c && c < b)) throw Error(ErrorKind::PreconditionViolated, "need a < c < b");
  if (!real_roots(shifted(p, a), opt).all_real || !real_roots(shifted(p, b), opt).all_real) {
    throw Error(ErrorKind::HypothesisViolated, "p + a or p + b is not real-rooted");
  }
  const auto prof = real_roots(shifted(p, c), opt);
  return prof.all_real && !prof.has_repeated();
}

InvariantForm perturb(const InvariantForm& form, double eps, const RootOptions& opt, bool require_singular) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const auto cl = classify(form, opt);
  if (require_singular && cl.kind == FormKind::Smooth) {
    throw Error(ErrorKind::PreconditionViolated, "perturb called on a smooth form");
  }

  InvariantForm out = form;
  if (!cl.zero_product) {
    out.c0 -= sign0(form.c0) * eps;
    out.ct0 -= sign0(form.ct0) * eps;
  } else {
    // p itself is real-rooted here. Spread every cluster symmetrically about
    // its centre; mirrored clusters get mirrored offsets, so the new root set
    // is still symmetric under t -> -t and p keeps its parity.
    const auto prof = real_roots(form.p_coeffs(), opt);
    if (!prof.all_real) throw Error(ErrorKind::NotHyperbolic, "p(t) has nonreal roots");
    std::vector<double> old_roots;
    for (const auto& r : prof.roots) old_roots.insert(old_roots.end(), r.multiplicity, r.value);
    const auto p_old = from_roots(old_roots);
    const auto p_form = form.p_coeffs();

    double radius = 1.0;
    for (double r : old_roots) radius = std::max(radius, 1.0 + std::abs(r));
    double delta = std::sqrt(eps);
    std::vector<double> p_new;
    bool ok = false;
    for (int attempt = 0; attempt < 40 && !ok; ++attempt, delta *= 2.0) {
      std::vector<double> roots;
      for (const auto& r : prof.roots) {
        for (int k = 0; k < r.multiplicity; ++k) {
          const double off = (k - 0.5 * (r.multiplicity - 1)) * delta;
          roots.push_back(r.value + (r.value < 0.0 ? -off : off));
        }
      }
      const auto p_spread = from_roots(roots);
      p_new = p_form;
      for (std::size_t i = 0; i < p_new.size(); ++i) p_new[i] += p_spread[i] - p_old[i];
      // Strict interlacing needs every critical value of p beyond +/- eps.
      const auto crit = real_roots(derivative(p_new), opt);
      ok = crit.all_real;
      for (const auto& r : crit.roots) {
        if (std::abs(eval_real(p_new, r.value)) <= 1.5 * eps) ok = false;
      }
      if (delta > radius) break;
    }
    if (!ok) throw Error(ErrorKind::PerturbationFailed, "could not separate the roots of p");
    for (int r = 1; r <= form.n / 2; ++r) out.c[r - 1] = p_new[2 * r];
    out.c0 = eps;
    out.ct0 = 0.0;
  }

  if (!is_hyperbolic(out, opt) || classify(out, opt).kind != FormKind::Smooth) {
    throw Error(ErrorKind::PerturbationFailed, "perturbed form is not smooth");
  }
  return out;
}

}  // namespace hyprep
