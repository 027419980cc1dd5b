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

#ifndef HYPREP_POLY_HPP
#define HYPREP_POLY_HPP

#include <array>
#include <complex>
#include <map>
#include <vector>

namespace hyprep {

using Complex = std::complex<double>;

/// Exponent triple (i, j, k) of the monomial t^i u^j v^k.
using Exponent = std::array<int, 3>;

/// Graded lexicographic order with t > u > v. Iterating a map keyed with this
/// comparator visits the leading monomial first.
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept {
    const int da = a[0] + a[1] + a[2];
    const int db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    if (a[0] != b[0]) return a[0] > b[0];
    if (a[1] != b[1]) return a[1] > b[1];
    return a[2] > b[2];
  }
};

/// A point of the complex projective plane in (t, u, v) coordinates.
struct ProjPoint {
  Complex t, u, v;

  double norm() const noexcept;
  ProjPoint normalized() const noexcept;  // unit Euclidean norm
};

inline constexpr double kDropTolerance = 1e-12;

/// Sparse homogeneous polynomial in C[t,u,v].
class TrivariatePoly {
 public:
  using Terms = std::map<Exponent, Complex, MonomialOrder>;

  TrivariatePoly() = default;
  explicit TrivariatePoly(int degree);
  /// Throws InvalidArgument if some exponent does not sum to `degree`.
  /// Exact zeros are dropped.
  TrivariatePoly(int degree, Terms terms);

  static TrivariatePoly monomial(const Exponent& e, Complex c = 1.0);
  static TrivariatePoly constant(Complex c);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex coeff(const Exponent& e) const;
  double max_abs_coeff() const noexcept;
  /// Euclidean norm of the coefficient vector.
  double coeff_norm() const noexcept;

  Complex operator()(Complex t, Complex u, Complex v) const;
  Complex operator()(const ProjPoint& p) const { return (*this)(p.t, p.u, p.v); }

  /// Partial derivative in t.
  TrivariatePoly dt() const;

  /// Drops coefficients below `rel_tol` times the largest magnitude.
  TrivariatePoly pruned(double rel_tol = kDropTolerance) const;

  TrivariatePoly operator-() const;
  friend TrivariatePoly operator+(const TrivariatePoly& a, const TrivariatePoly& b);
  friend TrivariatePoly operator-(const TrivariatePoly& a, const TrivariatePoly& b);
  friend TrivariatePoly operator*(const TrivariatePoly& a, const TrivariatePoly& b);
  friend TrivariatePoly operator*(Complex s, const TrivariatePoly& a);
  friend TrivariatePoly operator*(const TrivariatePoly& a, Complex s) { return s * a; }

 private:
  int degree_ = 0;
  Terms terms_;
};

/// Largest coefficient difference, treating missing terms as zero.
double max_coeff_diff(const TrivariatePoly& a, const TrivariatePoly& b);

/// All exponent triples of total degree k in the global monomial order.
std::vector<Exponent> monomials_of_degree(int k);

/// Substitutes t, u, v by the given linear forms.
TrivariatePoly substitute_linear(const TrivariatePoly& p, const TrivariatePoly& t_image,
                                 const TrivariatePoly& u_image, const TrivariatePoly& v_image);

}  // namespace hyprep

#endif  // HYPREP_POLY_HPP
