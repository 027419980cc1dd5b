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

#ifndef HYPREP_DIXON_HPP
#define HYPREP_DIXON_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hyprep/config.hpp"
#include "hyprep/forward.hpp"
#include "hyprep/intersection.hpp"

namespace hyprep {

/// n x n grid of degree n-1 forms; entry (i, j) lies in eigenspace class
/// (i - j) mod n and the grid is Hermitian under conj_involution.
struct GMatrix {
  int n = 0;
  std::vector<TrivariatePoly> entries;  // row-major
  double max_noether_residual = 0.0;

  const TrivariatePoly& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
  int tag(int i, int j) const noexcept { return ((i - j) % n + n) % n; }
  Eigen::MatrixXcd at(const ProjPoint& p) const;
};

/// M(t, u, v) = t M_t + u M_u + v M_u^*.
struct HermitianPencil {
  int n = 0;
  Eigen::MatrixXcd Mt, Mu;
  double fit_residual = 0.0;

  Eigen::MatrixXcd Mv() const { return Mu.adjoint(); }
  Eigen::MatrixXcd at(const ProjPoint& p) const { return p.t * Mt + p.u * Mu + p.v * Mv(); }
};

/// Nonzero element of the class-ell eigenspace of degree n-1 forms vanishing
/// on the representatives (points at infinity are skipped when n and ell are
/// both even, since every such monomial has a factor t). Attempt 0 takes the
/// last right singular vector; later attempts take seeded random unit
/// combinations of the numerical nullspace. The first coefficient above 1e-6
/// of the largest, in monomial order, is scaled to 1.
TrivariatePoly vanishing_form(const IntersectionSet& iset, int ell, const Config& cfg = {}, int attempt = 0);

struct NoetherResult {
  TrivariatePoly a_hat, b_hat;
  double residual = 0.0;  // relative to |h|
};

/// h = a_hat f + b_hat g11 with both cofactors restricted to class-ell
/// monomials, solved as one least-squares system. Throws NoetherResidual.
NoetherResult noether_solve(const TrivariatePoly& f, const TrivariatePoly& g11, const TrivariatePoly& h,
                            int n, int ell, double tol_noether = 1e-8);

/// First row from vanishing forms, the rest from Noether solves, Hermitian fill.
GMatrix assemble_G(const TrivariatePoly& f, const IntersectionSet& iset, const Config& cfg = {}, int attempt = 0);

/// adj(G(p)) at one point: det times inverse when well conditioned, cofactors otherwise.
Eigen::MatrixXcd adjugate(const Eigen::MatrixXcd& g);

/// Fits the linear pencil adj(G)/f^(n-2) from point samples and enforces the
/// shift pattern. Throws AdjugateMismatch or PatternViolation.
HermitianPencil pencil_from_adjugate(const GMatrix& g, const TrivariatePoly& f, double scale, const Config& cfg = {},
                                     int attempt = 0);

/// D P D with D = diag(1 / sqrt(c_i)) after flipping the sign if every c_i is
/// negative. Throws IndefiniteDiagonal on mixed signs.
HermitianPencil normalize_pencil(const HermitianPencil& p, double tol_pattern = 1e-6);

/// a_j = 2 M_v(j, j+1). Throws PatternViolation if M_t is not the identity or
/// M_u disagrees with the conjugate weights.
ShiftMatrix extract_shift(const HermitianPencil& p, double tol_pattern = 1e-6);

/// One pass of the smooth construction with retries. `allow_repeated` admits
/// intersection sets with doubled points (the borderline case).
ShiftMatrix represent_smooth(const InvariantForm& form, const Config& cfg = {}, bool allow_repeated = false,
                             int* retries_used = nullptr);

struct RepresentResult {
  ShiftMatrix shift;
  VerifyReport report;
  std::string route;  // "smooth", "borderline" or "perturbation"
  double eps_final = 0.0;
  int steps = 0;
  int retries = 0;
};

/// Shift matrix with f_A = form. Smooth forms are built directly, singular
/// ones as the limit of perturbed smooth forms. Throws ConvergenceFailed if
/// the limit does not settle or does not verify.
RepresentResult represent(const InvariantForm& form, const Config& cfg = {});

/// Sup-norm distance between the gauge invariants of two shift matrices: the
/// squared moduli, up to cyclic relabeling and reversal, and prod a_j.
double gauge_distance(const ShiftMatrix& a, const ShiftMatrix& b);

}  // namespace hyprep

#endif  // HYPREP_DIXON_HPP
