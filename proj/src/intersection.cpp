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

#include "hyprep/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "hyprep/error.hpp"

namespace hyprep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kChartTiny = 1e-12;

double arg_2pi(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a > kTwoPi - 1e-12) a = 0.0;
  return a;
}

// The k-th branch of z^(1/m).
Complex branch_root(Complex z, int m, int k) {
  const double r = std::pow(std::abs(z), 1.0 / m);
  return std::polar(r, (std::arg(z) + kTwoPi * k) / m);
}

bool is_affine(const ProjPoint& p) { return std::abs(p.normalized().t) > kChartTiny; }

auto lex_key(const ProjPoint& p) {
  return std::make_tuple(p.u.real(), p.u.imag(), p.v.real(), p.v.imag());
}

}  // namespace

CircleFactorization circle_factors(const InvariantForm& form, const RootOptions& opt) {
  form.validate();
  const int n = form.n;
  CircleFactorization cf;
  cf.n = n;
  cf.k = n % 2 == 0 ? 1 : 0;
  const int m = (n - 1 - cf.k) / 2;
  std::vector<double> coeffs{static_cast<double>(n)};
  for (int r = 1; r <= m; ++r) coeffs.push_back((n - 2 * r) * form.c[r - 1]);
  for (const auto& z : poly_roots(coeffs)) {
    const double tol = opt.tol_root * (1.0 + std::abs(z));
    if (std::abs(z.imag()) > tol || z.real() < -tol) {
      throw Error(ErrorKind::NonrealCircle, "circle parameter is not a nonnegative real");
    }
    cf.s.push_back(std::max(0.0, z.real()));
  }
  std::sort(cf.s.begin(), cf.s.end());
  return cf;
}

TrivariatePoly circle_product(const CircleFactorization& cf) {
  TrivariatePoly acc = TrivariatePoly::monomial({cf.k, 0, 0}, static_cast<double>(cf.n));
  for (double s : cf.s) {
    acc = acc * TrivariatePoly(2, {{{2, 0, 0}, 1.0}, {{0, 1, 1}, -s}});
  }
  return acc;
}

std::vector<WeightedPoint> circle_intersect(const InvariantForm& form, double s) {
  form.validate();
  if (!(s > 0.0)) throw Error(ErrorKind::PreconditionViolated, "circle parameter must be positive");
  const int n = form.n;
  const Complex alpha(form.c0 / 2.0, -form.ct0 / 2.0);
  if (alpha == Complex{}) throw Error(ErrorKind::LeadingZero, "c0 = ct0 = 0");
  double pval = 1.0;
  for (int r = 1; r <= n / 2; ++r) pval += form.c[r - 1] * std::pow(s, -r);
  const Complex beta = std::conj(alpha) * std::pow(s, -n);
  const auto q = solve_quadratic(alpha, pval, beta);

  std::vector<WeightedPoint> out;
  auto emit = [&](Complex w, int mult) {
    for (int k = 0; k < n; ++k) {
      const Complex u = branch_root(w, n, k);
      out.push_back({{1.0, u, 1.0 / (s * u)}, mult});
    }
  };
  if (q.double_root) {
    emit(q.r1, 2);
  } else {
    emit(q.r1, 1);
    emit(q.r2, 1);
  }
  return out;
}

std::vector<WeightedPoint> infinity_points(const InvariantForm& form) {
  form.validate();
  const int n = form.n;
  if (n % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "no intersection at infinity for odd n");
  const Complex alpha(form.c0 / 2.0, -form.ct0 / 2.0);
  if (alpha == Complex{}) throw Error(ErrorKind::LeadingZero, "c0 = ct0 = 0");
  // f(0, u, 1) = alpha u^n + c_{n/2} u^{n/2} + conj(alpha), quadratic in w = u^{n/2}.
  const auto q = solve_quadratic(alpha, form.c[n / 2 - 1], std::conj(alpha));
  std::vector<WeightedPoint> out;
  auto emit = [&](Complex w, int mult) {
    for (int k = 0; k < n / 2; ++k) {
      const Complex u = branch_root(w, n / 2, k);
      out.push_back({{0.0, 1.0, 1.0 / u}, mult});
    }
  };
  if (q.double_root) {
    emit(q.r1, 2);
  } else {
    emit(q.r1, 1);
    emit(q.r2, 1);
  }
  return out;
}

ProjPoint to_chart(const ProjPoint& p) {
  const ProjPoint h = p.normalized();
  if (std::abs(h.t) > kChartTiny) return {1.0, p.u / p.t, p.v / p.t};
  if (std::abs(h.u) > kChartTiny) return {0.0, 1.0, p.v / p.u};
  return {0.0, 0.0, 1.0};
}

ProjPoint rotate_point(const ProjPoint& p, int n, int k) {
  return to_chart({p.t, root_of_unity(n, k) * p.u, root_of_unity(n, -k) * p.v});
}

ProjPoint conj_point(const ProjPoint& p) {
  return to_chart({std::conj(p.t), std::conj(p.v), std::conj(p.u)});
}

double chordal_distance(const ProjPoint& p, const ProjPoint& q) {
  const ProjPoint a = p.normalized();
  const ProjPoint b = q.normalized();
  // Length of the part of b orthogonal to a. Equal to sqrt(1 - |<a, b>|^2)
  // but without the cancellation for nearby points.
  const Complex ip = std::conj(a.t) * b.t + std::conj(a.u) * b.u + std::conj(a.v) * b.v;
  return std::sqrt(std::norm(b.t - ip * a.t) + std::norm(b.u - ip * a.u) + std::norm(b.v - ip * a.v));
}

int IntersectionSet::total_count() const noexcept {
  return static_cast<int>(S.size() + Sbar.size());
}

namespace {

// Index of the orbit containing some rotation of p, -1 if none.
int find_orbit(const std::vector<Orbit>& orbits, const ProjPoint& p, double tol) {
  int found = -1;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    bool hit = false;
    for (const auto& q : orbits[o].points) {
      if (chordal_distance(p, q) <= tol) hit = true;
    }
    if (!hit) continue;
    if (found >= 0) throw Error(ErrorKind::AmbiguousOrbits, "point close to two orbits");
    found = static_cast<int>(o);
  }
  return found;
}

}  // namespace

IntersectionSet split_conjugate(int n, const std::vector<WeightedPoint>& points,
                                const IntersectionOptions& opt) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "degree must be at least 3");

  // Merge exact repeats first; anything closer than tol_sep that is not a
  // repeat is left for validate_distinct to flag.
  std::vector<WeightedPoint> pts;
  for (const auto& wp : points) {
    const ProjPoint c = to_chart(wp.p);
    auto it = std::find_if(pts.begin(), pts.end(), [&](const WeightedPoint& q) {
      return chordal_distance(q.p, c) <= 1e-3 * opt.tol_sep;
    });
    if (it != pts.end()) {
      it->multiplicity += wp.multiplicity;
    } else {
      pts.push_back({c, wp.multiplicity});
    }
  }

  IntersectionSet iset;
  iset.n = n;
  std::vector<std::vector<int>> mults;
  for (const auto& wp : pts) {
    // Compare every rotation of the point against the stored orbit members.
    int hit = -1;
    for (int k = 0; k < n && hit < 0; ++k) {
      hit = find_orbit(iset.orbits, rotate_point(wp.p, n, k), opt.tol_sep);
    }
    if (hit < 0) {
      Orbit o;
      o.at_infinity = !is_affine(wp.p);
      o.points.push_back(wp.p);
      iset.orbits.push_back(o);
      mults.push_back({wp.multiplicity});
    } else {
      iset.orbits[hit].points.push_back(wp.p);
      mults[hit].push_back(wp.multiplicity);
    }
  }

  for (std::size_t o = 0; o < iset.orbits.size(); ++o) {
    Orbit& orb = iset.orbits[o];
    const std::size_t expected = orb.at_infinity ? static_cast<std::size_t>(n / 2) : static_cast<std::size_t>(n);
    if (orb.points.size() != expected) {
      throw Error(ErrorKind::AmbiguousOrbits, "orbit of size " + std::to_string(orb.points.size()) +
                                                  ", expected " + std::to_string(expected));
    }
    if (std::adjacent_find(mults[o].begin(), mults[o].end(), std::not_equal_to<>()) != mults[o].end()) {
      throw Error(ErrorKind::AmbiguousOrbits, "multiplicity varies along an orbit");
    }
    orb.multiplicity = mults[o].front();
    // Canonical member: smallest argument of u (affine) or v (at infinity).
    auto key = [&](const ProjPoint& p) { return arg_2pi(orb.at_infinity ? p.v : p.u); };
    orb.rep = *std::min_element(orb.points.begin(), orb.points.end(),
                                [&](const ProjPoint& a, const ProjPoint& b) { return key(a) < key(b); });
  }

  for (std::size_t o = 0; o < iset.orbits.size(); ++o) {
    const int partner = find_orbit(iset.orbits, conj_point(iset.orbits[o].rep), opt.tol_sep);
    if (partner < 0) throw Error(ErrorKind::AmbiguousOrbits, "orbit has no conjugate partner");
    iset.orbits[o].partner = partner;
  }

  auto add_to_S = [&](const Orbit& orb, int copies) {
    iset.reps.push_back(orb.rep);
    iset.orbit_mult.push_back(copies);
    iset.at_infinity.push_back(orb.at_infinity);
    for (int c = 0; c < copies; ++c) {
      for (const auto& p : orb.points) {
        iset.S.push_back(p);
        iset.Sbar.push_back(conj_point(p));
      }
    }
  };

  for (std::size_t o = 0; o < iset.orbits.size(); ++o) {
    const Orbit& orb = iset.orbits[o];
    const auto partner = static_cast<std::size_t>(orb.partner);
    if (partner == o) {
      if (orb.multiplicity % 2 != 0) {
        throw Error(ErrorKind::RealSimplePoint, "self-conjugate orbit of odd multiplicity");
      }
      add_to_S(orb, orb.multiplicity / 2);
      continue;
    }
    if (iset.orbits[partner].partner != static_cast<int>(o)) {
      throw Error(ErrorKind::AmbiguousOrbits, "conjugate pairing is not an involution");
    }
    if (partner < o) continue;  // pair already handled
    const Orbit& other = iset.orbits[partner];
    const bool first_larger = lex_key(orb.rep) > lex_key(other.rep);
    const bool take_first = (opt.rule == SplitRule::LexLarger) == first_larger;
    const Orbit& chosen = take_first ? orb : other;
    add_to_S(chosen, chosen.multiplicity);
  }
  return iset;
}

IntersectionSet intersection_set(const InvariantForm& form, const IntersectionOptions& opt) {
  form.validate();
  const int n = form.n;
  if (form.s() == 0.0) throw Error(ErrorKind::LeadingZero, "c0 = ct0 = 0");
  const auto cf = circle_factors(form, opt.roots);
  std::vector<WeightedPoint> pts;
  for (double s : cf.s) {
    if (s <= 1e-12 * form.scale()) {
      throw Error(ErrorKind::SolveFailed, "circle degenerates to a double line at infinity");
    }
    const auto c = circle_intersect(form, s);
    pts.insert(pts.end(), c.begin(), c.end());
  }
  if (n % 2 == 0) {
    const auto c = infinity_points(form);
    pts.insert(pts.end(), c.begin(), c.end());
  }

  const TrivariatePoly f = expand(form);
  const TrivariatePoly g = f.dt();
  const double scale = 1.0 + form.scale();
  double res = 0.0;
  int count = 0;
  for (const auto& wp : pts) {
    const ProjPoint h = wp.p.normalized();
    res = std::max({res, std::abs(f(h)) / scale, std::abs(g(h)) / (n * scale)});
    count += wp.multiplicity;
  }
  if (count != n * (n - 1)) throw Error(ErrorKind::SolveFailed, "wrong intersection count");
  if (res > opt.tol_pt) {
    throw Error(ErrorKind::SolveFailed, "intersection residual " + std::to_string(res));
  }
  IntersectionSet iset = split_conjugate(n, pts, opt);
  iset.max_residual = res;
  return iset;
}

bool validate_distinct(const IntersectionSet& iset, double tol_sep) {
  std::vector<ProjPoint> all;
  for (const auto& orb : iset.orbits) {
    if (orb.multiplicity != 1) return false;
    all.insert(all.end(), orb.points.begin(), orb.points.end());
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (is_affine(all[i]) && chordal_distance(all[i], conj_point(all[i])) <= tol_sep) return false;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (chordal_distance(all[i], all[j]) <= tol_sep) return false;
    }
  }
  return true;
}

}  // namespace hyprep
