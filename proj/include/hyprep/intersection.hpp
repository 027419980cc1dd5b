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

#ifndef HYPREP_INTERSECTION_HPP
#define HYPREP_INTERSECTION_HPP

#include <vector>

#include "hyprep/invariant.hpp"
#include "hyprep/roots.hpp"

namespace hyprep {

/// df/dt = n t^k prod_j (t^2 - s_j uv), with k = 1 for n even and 0 for n odd.
struct CircleFactorization {
  int n = 0;
  int k = 0;
  std::vector<double> s;  // ascending, clamped to >= 0
};

CircleFactorization circle_factors(const InvariantForm& form, const RootOptions& opt = {});

/// n t^k prod (t^2 - s_j uv), for comparison against df/dt.
TrivariatePoly circle_product(const CircleFactorization& cf);

struct WeightedPoint {
  ProjPoint p;
  int multiplicity = 1;
};

/// The 2n points of V(f, t^2 - s uv) for s > 0, as [1 : u : 1/(s u)]. With
/// w = u^n the restriction is the quadratic alpha w^2 + P w + beta s^-n.
/// A double w gives points of multiplicity 2.
std::vector<WeightedPoint> circle_intersect(const InvariantForm& form, double s);

/// The n points of V(f, t) for n even, as [0 : 1 : v]. Throws LeadingZero if
/// c0 = ct0 = 0 and PreconditionViolated for odd n.
std::vector<WeightedPoint> infinity_points(const InvariantForm& form);

/// Affine points go to the chart t = 1, points at infinity to u = 1 (or v = 1
/// when u vanishes too).
ProjPoint to_chart(const ProjPoint& p);

/// [t : w^k u : w^-k v] in chart form.
ProjPoint rotate_point(const ProjPoint& p, int n, int k);

/// [conj t : conj v : conj u] in chart form.
ProjPoint conj_point(const ProjPoint& p);

/// sqrt(1 - |<p, q>|^2) for unit representatives; zero iff p and q agree.
double chordal_distance(const ProjPoint& p, const ProjPoint& q);

struct Orbit {
  ProjPoint rep;                 // canonical representative
  std::vector<ProjPoint> points; // distinct points of the orbit
  int multiplicity = 1;
  bool at_infinity = false;
  int partner = -1;              // index of the conjugate orbit
};

struct IntersectionSet {
  int n = 0;
  std::vector<Orbit> orbits;        // every orbit of V(f, df/dt)
  std::vector<ProjPoint> reps;      // one representative per orbit of S
  std::vector<int> orbit_mult;      // copies of that orbit in S
  std::vector<bool> at_infinity;
  std::vector<ProjPoint> S, Sbar;   // listed with multiplicity
  double max_residual = 0.0;        // of f and df/dt at unit representatives

  int total_count() const noexcept;  // |S| + |Sbar|
};

enum class SplitRule { LexLarger, LexSmaller };

struct IntersectionOptions {
  RootOptions roots;
  double tol_pt = 1e-8;   // multiplied by 1 + coefficient scale
  double tol_sep = 1e-6;
  SplitRule rule = SplitRule::LexLarger;
};

/// Groups the points into rotation orbits and splits them into conjugate
/// halves. Of each pair of conjugate orbits, the one whose canonical
/// representative is larger (or smaller, per `rule`) in (Re u, Im u, Re v,
/// Im v) goes to S. A self-conjugate orbit of multiplicity 2m puts m copies
/// into each half. Throws RealSimplePoint for odd self-conjugate orbits and
/// AmbiguousOrbits when orbit membership is not clear-cut.
IntersectionSet split_conjugate(int n, const std::vector<WeightedPoint>& points,
                                const IntersectionOptions& opt = {});

/// All of V(f, df/dt), checked against the residual tolerance (SolveFailed).
IntersectionSet intersection_set(const InvariantForm& form, const IntersectionOptions& opt = {});

/// Points pairwise separated by more than tol_sep, all simple, and no real
/// affine point.
bool validate_distinct(const IntersectionSet& iset, double tol_sep = 1e-6);

}  // namespace hyprep

#endif  // HYPREP_INTERSECTION_HPP
