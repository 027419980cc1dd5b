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

#include "hyprep/dixon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "hyprep/error.hpp"
#include "hyprep/hyperbolicity.hpp"
#include "hyprep/parallel.hpp"

namespace hyprep {

namespace {

bool retryable(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoVanishingForm:
    case ErrorKind::NoetherResidual:
    case ErrorKind::AdjugateMismatch:
    case ErrorKind::PatternViolation:
    case ErrorKind::IndefiniteDiagonal:
      return true;
    default:
      return false;
  }
}

// Failures that mean the intersection points are real or repeated, so the
// form has to be treated as singular.
bool reroutes(ErrorKind k) {
  return k == ErrorKind::RealSimplePoint || k == ErrorKind::AmbiguousOrbits || k == ErrorKind::SolveFailed;
}

IntersectionOptions intersection_options(const Config& cfg) {
  IntersectionOptions o;
  o.roots.tol_root = cfg.tol_root;
  o.roots.cluster_rad = cfg.cluster_rad;
  o.tol_pt = cfg.tol_pt;
  o.tol_sep = cfg.tol_sep;
  return o;
}

RootOptions root_options(const Config& cfg) { return {cfg.tol_root, cfg.cluster_rad}; }

TrivariatePoly from_basis(int degree, const std::vector<Exponent>& basis, const Eigen::VectorXcd& x,
                          Eigen::Index offset = 0) {
  TrivariatePoly::Terms terms;
  for (std::size_t i = 0; i < basis.size(); ++i) terms.emplace(basis[i], x(offset + static_cast<Eigen::Index>(i)));
  return TrivariatePoly(degree, std::move(terms)).pruned();
}

}  // namespace

Eigen::MatrixXcd GMatrix::at(const ProjPoint& p) const {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = (*this)(i, j)(p);
  }
  return m;
}

TrivariatePoly vanishing_form(const IntersectionSet& iset, int ell, const Config& cfg, int attempt) {
  const int n = iset.n;
  const auto basis = eigenspace_basis(n, n - 1, ell).monomials;
  const auto d = static_cast<Eigen::Index>(basis.size());

  std::vector<ProjPoint> rows;
  for (std::size_t r = 0; r < iset.reps.size(); ++r) {
    if (iset.at_infinity[r] && n % 2 == 0 && ell % 2 == 0) continue;
    rows.push_back(iset.reps[r].normalized());
  }
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(std::max<Eigen::Index>(1, static_cast<Eigen::Index>(rows.size())), d);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto& e = basis[static_cast<std::size_t>(c)];
      a(static_cast<Eigen::Index>(r), c) = std::pow(rows[r].t, e[0]) * std::pow(rows[r].u, e[1]) * std::pow(rows[r].v, e[2]);
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  // Columns of V past the last singular value are exact null directions.
  Eigen::Index null_start = sv.size();
  while (null_start > 0 && sv(null_start - 1) <= cfg.tol_van * smax) --null_start;
  if (null_start == d) {
    throw Error(ErrorKind::NoVanishingForm, "class " + std::to_string(ell) + ": smallest relative singular value " +
                                                std::to_string(sv(sv.size() - 1) / smax));
  }
  const Eigen::MatrixXcd& v = svd.matrixV();
  Eigen::VectorXcd x = v.col(d - 1);
  const Eigen::Index null_dim = d - null_start;
  if (attempt > 0 && null_dim > 1) {
    std::mt19937_64 rng(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(attempt) * 7919ULL +
                        static_cast<std::uint64_t>(ell));
    std::normal_distribution<double> g;
    x.setZero();
    for (Eigen::Index k = null_start; k < d; ++k) x += Complex(g(rng), g(rng)) * v.col(k);
    x.normalize();
  }

  const double big = x.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(x(i)) > 1e-6 * big) {
      x /= x(i);
      break;
    }
  }
  return from_basis(n - 1, basis, x);
}

NoetherResult noether_solve(const TrivariatePoly& f, const TrivariatePoly& g11, const TrivariatePoly& h, int n,
                            int ell, double tol_noether) {
  const auto ba = eigenspace_basis(n, n - 2, ell).monomials;
  const auto bb = eigenspace_basis(n, n - 1, ell).monomials;
  const auto bh = eigenspace_basis(n, 2 * n - 2, ell).monomials;
  std::map<Exponent, Eigen::Index, MonomialOrder> row;
  for (std::size_t i = 0; i < bh.size(); ++i) row.emplace(bh[i], static_cast<Eigen::Index>(i));

  const auto na = static_cast<Eigen::Index>(ba.size());
  const auto nb = static_cast<Eigen::Index>(bb.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(bh.size()), na + nb);
  auto fill = [&](const std::vector<Exponent>& basis, const TrivariatePoly& q, Eigen::Index offset) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      for (const auto& [e, coef] : q.terms()) {
        const Exponent m{basis[c][0] + e[0], basis[c][1] + e[1], basis[c][2] + e[2]};
        auto it = row.find(m);
        // f and g11 are invariant, so products stay in class ell.
        if (it != row.end()) a(it->second, offset + static_cast<Eigen::Index>(c)) += coef;
      }
    }
  };
  fill(ba, f, 0);
  fill(bb, g11, na);

  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(bh.size()));
  double off_class = 0.0;
  for (const auto& [e, coef] : h.terms()) {
    auto it = row.find(e);
    if (it == row.end()) {
      off_class += std::norm(coef);
    } else {
      rhs(it->second) = coef;
    }
  }
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(rhs);
  const double hnorm = h.coeff_norm();
  const double res = std::sqrt((a * x - rhs).squaredNorm() + off_class) / (hnorm > 0.0 ? hnorm : 1.0);
  if (!(res <= tol_noether)) {
    throw Error(ErrorKind::NoetherResidual, "class " + std::to_string(ell) + ": residual " + std::to_string(res));
  }
  return {from_basis(n - 2, ba, x), from_basis(n - 1, bb, x, na), res};
}

GMatrix assemble_G(const TrivariatePoly& f, const IntersectionSet& iset, const Config& cfg, int attempt) {
  const int n = iset.n;
  const TrivariatePoly g11 = f.dt();
  std::vector<TrivariatePoly> first(static_cast<std::size_t>(n));
  first[0] = g11;
  for (int j = 1; j < n; ++j) first[j] = vanishing_form(iset, (n - j) % n, cfg, attempt);

  std::vector<std::pair<int, int>> tasks;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) tasks.emplace_back(i, j);
  }
  std::vector<NoetherResult> solved(tasks.size());
  parallel_for(tasks.size(), cfg.effective_threads(), [&](std::size_t k) {
    const auto [i, j] = tasks[k];
    const TrivariatePoly h = conj_involution(first[i]) * first[j];
    solved[k] = noether_solve(f, g11, h, n, ((i - j) % n + n) % n, cfg.tol_noether);
  });

  GMatrix g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n * n), TrivariatePoly(n - 1));
  auto put = [&](int i, int j, const TrivariatePoly& p) { g.entries[static_cast<std::size_t>(i * n + j)] = p; };
  for (int j = 0; j < n; ++j) {
    put(0, j, first[j]);
    if (j > 0) put(j, 0, conj_involution(first[j]));
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const auto [i, j] = tasks[k];
    TrivariatePoly b = solved[k].b_hat;
    g.max_noether_residual = std::max(g.max_noether_residual, solved[k].residual);
    if (i == j) {
      // The target is conj-fixed, so averaging keeps the residual.
      put(i, i, Complex(0.5) * (b + conj_involution(b)));
    } else {
      put(i, j, b);
      put(j, i, conj_involution(b));
    }
  }
  if (g11.is_zero()) throw Error(ErrorKind::DegenerateInput, "df/dt vanishes");
  return g;
}

Eigen::MatrixXcd adjugate(const Eigen::MatrixXcd& g) {
  const Eigen::Index n = g.rows();
  const Eigen::VectorXd sv = g.jacobiSvd().singularValues();
  const double cond = sv(n - 1) > 0.0 ? sv(0) / sv(n - 1) : INFINITY;
  if (cond < 1e8) {
    const auto lu = g.partialPivLu();
    return lu.determinant() * lu.inverse();
  }
  Eigen::MatrixXcd adj(n, n);
  Eigen::MatrixXcd minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // adj(i, j) is the (j, i) cofactor.
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = g(r, c);
        }
        ++mr;
      }
      const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
      adj(i, j) = sign * (n == 1 ? Complex(1.0) : minor.partialPivLu().determinant());
    }
  }
  return adj;
}

HermitianPencil pencil_from_adjugate(const GMatrix& g, const TrivariatePoly& f, double scale, const Config& cfg,
                                     int attempt) {
  const int n = g.n;
  constexpr int kFit = 12, kHoldout = 3;
  std::mt19937_64 rng(cfg.seed * 2654435761ULL + static_cast<std::uint64_t>(attempt) * 104729ULL);
  std::normal_distribution<double> gauss;

  std::vector<ProjPoint> pts{{1.0, 0.0, 0.0}};
  for (int tries = 0; static_cast<int>(pts.size()) < kFit + kHoldout; ++tries) {
    if (tries > 100000) throw Error(ErrorKind::AdjugateMismatch, "no sample points away from the curve");
    const double t = gauss(rng), x = gauss(rng), y = gauss(rng);
    const ProjPoint p{t, Complex(x, y), Complex(x, -y)};
    if (std::abs(f(p)) >= 0.1 * scale) pts.push_back(p);
  }

  const int nn = n * n;
  Eigen::MatrixXcd xs(kFit + kHoldout, 3);
  Eigen::MatrixXcd ys(kFit + kHoldout, nn);
  for (int s = 0; s < kFit + kHoldout; ++s) {
    const ProjPoint& p = pts[static_cast<std::size_t>(s)];
    const Eigen::MatrixXcd adj = adjugate(g.at(p)) / std::pow(f(p), n - 2);
    xs.row(s) << p.t, p.u, p.v;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) ys(s, i * n + j) = adj(i, j);
    }
  }
  const Eigen::MatrixXcd coef = xs.topRows(kFit).colPivHouseholderQr().solve(ys.topRows(kFit));

  HermitianPencil pen;
  pen.n = n;
  pen.fit_residual = (xs.topRows(kFit) * coef - ys.topRows(kFit)).norm() / ys.topRows(kFit).norm();
  for (int s = kFit; s < kFit + kHoldout; ++s) {
    const double err = (xs.row(s) * coef - ys.row(s)).norm() / ys.row(s).norm();
    if (!(err <= cfg.tol_pencil)) {
      throw Error(ErrorKind::AdjugateMismatch, "holdout residual " + std::to_string(err));
    }
  }

  Eigen::MatrixXcd mt(n, n), mu(n, n), mv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      mt(i, j) = coef(0, i * n + j);
      mu(i, j) = coef(1, i * n + j);
      mv(i, j) = coef(2, i * n + j);
    }
  }
  const double mag = std::max({mt.cwiseAbs().maxCoeff(), mu.cwiseAbs().maxCoeff(), mv.cwiseAbs().maxCoeff()});
  const double cut = cfg.tol_pattern * mag;
  // Entry (i, j) has class (i - j) mod n: t for 0, u for 1, v for n - 1.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int d = ((i - j) % n + n) % n;
      auto kill = [&](Eigen::MatrixXcd& m) {
        if (std::abs(m(i, j)) > cut) {
          throw Error(ErrorKind::PatternViolation,
                      "entry (" + std::to_string(i) + "," + std::to_string(j) + ") off the shift pattern");
        }
        m(i, j) = 0.0;
      };
      if (d != 0) kill(mt);
      if (d != 1) kill(mu);
      if (d != n - 1) kill(mv);
    }
  }
  if ((mv - mu.adjoint()).cwiseAbs().maxCoeff() > cut || (mt - mt.adjoint()).cwiseAbs().maxCoeff() > cut) {
    throw Error(ErrorKind::PatternViolation, "pencil is not Hermitian");
  }
  pen.Mt = 0.5 * (mt + mt.adjoint());
  pen.Mu = 0.5 * (mu + mv.adjoint());
  return pen;
}

HermitianPencil normalize_pencil(const HermitianPencil& p, double tol_pattern) {
  const int n = p.n;
  HermitianPencil out = p;
  Eigen::VectorXd c = p.Mt.diagonal().real();
  if ((c.array() < 0.0).all()) {
    out.Mt = -p.Mt;
    out.Mu = -p.Mu;
    c = -c;
  }
  if (!(c.array() > 0.0).all()) throw Error(ErrorKind::IndefiniteDiagonal, "diagonal of M_t has mixed signs");
  const Eigen::VectorXd d = c.cwiseSqrt().cwiseInverse();
  out.Mt = d.asDiagonal() * out.Mt * d.asDiagonal();
  out.Mu = d.asDiagonal() * out.Mu * d.asDiagonal();
  if ((out.Mt - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > tol_pattern) {
    throw Error(ErrorKind::PatternViolation, "normalized M_t is not the identity");
  }
  out.Mt = Eigen::MatrixXcd::Identity(n, n);
  return out;
}

ShiftMatrix extract_shift(const HermitianPencil& p, double tol_pattern) {
  const int n = p.n;
  if ((p.Mt - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > tol_pattern) {
    throw Error(ErrorKind::PatternViolation, "M_t is not the identity");
  }
  const Eigen::MatrixXcd mv = p.Mv();
  std::vector<Complex> w;
  for (int j = 0; j < n; ++j) {
    const Complex a = 2.0 * mv(j, (j + 1) % n);
    if (std::abs(p.Mu((j + 1) % n, j) - std::conj(a) / 2.0) > tol_pattern * (1.0 + std::abs(a))) {
      throw Error(ErrorKind::PatternViolation, "M_u does not carry the conjugate weights");
    }
    w.push_back(a);
  }
  return ShiftMatrix(std::move(w));
}

ShiftMatrix represent_smooth(const InvariantForm& form, const Config& cfg, bool allow_repeated, int* retries_used) {
  const TrivariatePoly f = expand(form);
  const double scale = form.scale();
  const IntersectionSet iset = intersection_set(form, intersection_options(cfg));
  if (!allow_repeated && !validate_distinct(iset, cfg.tol_sep)) {
    throw Error(ErrorKind::RealSimplePoint, "intersection points are real or repeated");
  }
  std::string last = "no attempt";
  ErrorKind last_kind = ErrorKind::AdjugateMismatch;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    if (retries_used) *retries_used = attempt;
    try {
      const GMatrix g = assemble_G(f, iset, cfg, attempt);
      const HermitianPencil pen = normalize_pencil(pencil_from_adjugate(g, f, scale, cfg, attempt), cfg.tol_pattern);
      ShiftMatrix w = extract_shift(pen, cfg.tol_pattern);
      const double err = verify(form, w).max_abs_err;
      if (err <= cfg.tol_final * scale) return w;
      throw Error(ErrorKind::AdjugateMismatch, "shift form misses the target by " + std::to_string(err));
    } catch (const Error& e) {
      if (!retryable(e.kind())) throw;
      last = e.what();
      last_kind = e.kind();
    }
  }
  throw Error(last_kind, "retries exhausted; last failure: " + last);
}

double gauge_distance(const ShiftMatrix& a, const ShiftMatrix& b) {
  const int n = a.n;
  if (b.n != n) throw Error(ErrorKind::InvalidArgument, "comparing shift matrices of different size");
  double best = INFINITY;
  for (int rev = 0; rev < 2; ++rev) {
    for (int s = 0; s < n; ++s) {
      double m = 0.0;
      for (int j = 0; j < n; ++j) {
        const int k = rev == 0 ? (j + s) % n : ((s - j - 1) % n + n) % n;
        m = std::max(m, std::abs(std::norm(a.weights[j]) - std::norm(b.weights[k])));
      }
      best = std::min(best, m);
    }
  }
  return std::max(best, std::abs(a.product() - b.product()));
}

RepresentResult represent(const InvariantForm& form, const Config& cfg) {
  cfg.validate();
  form.validate();
  const RootOptions ropt = root_options(cfg);
  const Classification cl = classify(form, ropt);
  const double scale = form.scale();

  RepresentResult res;
  auto finish = [&](ShiftMatrix w, const char* route) {
    res.shift = std::move(w);
    res.report = verify(form, res.shift);
    res.route = route;
    return res;
  };

  bool force_singular = false;
  if (cl.kind == FormKind::Smooth || cl.borderline) {
    try {
      return finish(represent_smooth(form, cfg, cl.borderline, &res.retries),
                    cl.kind == FormKind::Smooth ? "smooth" : "borderline");
    } catch (const Error& e) {
      if (cl.kind == FormKind::Smooth && !reroutes(e.kind())) throw;
      force_singular = cl.kind == FormKind::Smooth;
    }
  }

  std::optional<ShiftMatrix> prev;
  std::string last = "successive steps kept moving";
  for (int k = 0; k < cfg.eps_steps; ++k) {
    double eps = cfg.eps0 * std::pow(10.0, -0.5 * k);
    std::optional<InvariantForm> fe;
    for (int halving = 0; halving < 8 && !fe; ++halving) {
      try {
        fe = perturb(form, eps, ropt, !force_singular);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PerturbationFailed) throw;
        eps /= 2.0;
        ++res.retries;
      }
    }
    res.steps = k + 1;
    if (!fe) continue;
    ShiftMatrix w;
    try {
      int used = 0;
      w = represent_smooth(*fe, cfg, false, &used);
      res.retries += used;
    } catch (const Error& e) {
      last = e.what();
      prev.reset();
      continue;
    }
    res.eps_final = eps;
    if (prev && gauge_distance(w, *prev) < cfg.converge_tol && verify(form, w).max_abs_err <= cfg.tol_final * scale) {
      return finish(std::move(w), "perturbation");
    }
    prev = std::move(w);
  }
  throw Error(ErrorKind::ConvergenceFailed, "perturbation schedule did not settle (" + last + ")");
}

}  // namespace hyprep
