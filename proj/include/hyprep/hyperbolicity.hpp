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

#ifndef HYPREP_HYPERBOLICITY_HPP
#define HYPREP_HYPERBOLICITY_HPP

#include <vector>

#include "hyprep/invariant.hpp"
#include "hyprep/roots.hpp"

namespace hyprep {

/// True iff p(t) + s and p(t) - s are both real-rooted, where
/// p(t) = t^n + sum c_r t^(n-2r) and s = sqrt(c0^2 + ct0^2). Restricted to the
/// real line through (1,0,0) in direction (0, e^{i theta}, e^{-i theta}) the
/// form is p(t) + s cos(n theta - phase), so these two are the extreme cases.
bool is_hyperbolic(const InvariantForm& form, const RootOptions& opt = {});

enum class FormKind { Smooth, Singular };

struct Classification {
  FormKind kind = FormKind::Smooth;
  double s = 0.0;
  bool plus_repeated = false;   // p + s has a repeated root
  bool minus_repeated = false;  // p - s has a repeated root
  bool zero_product = false;    // c0 = ct0 = 0
  // n even and the only repeated root is a double root at t = 0. Such forms
  // meet their t-derivative in a doubled real point at infinity and are first
  // tried through the smooth construction.
  bool borderline = false;
  RootProfile plus, minus;
};

/// Throws NotHyperbolic if the form fails is_hyperbolic.
Classification classify(const InvariantForm& form, const RootOptions& opt = {});

/// Checks that p + c has distinct real roots given that p + a and p + b are
/// real-rooted and a < c < b. Throws HypothesisViolated when p + a or p + b
/// is not real-rooted and PreconditionViolated unless a < c < b.
bool interlace_check(const std::vector<double>& p, double a, double b, double c,
                     const RootOptions& opt = {});

/// Nearby smooth hyperbolic form. If s > 0 the invariant part shrinks:
/// c0 -= sign(c0) eps and ct0 -= sign(ct0) eps. If s = 0 the repeated roots of
/// p are pulled apart symmetrically and c0 = eps. Throws PreconditionViolated
/// on smooth input (unless `require_singular` is false, for forms whose
/// intersection points turned out real or repeated) and PerturbationFailed if
/// the result is not smooth.
InvariantForm perturb(const InvariantForm& form, double eps, const RootOptions& opt = {},
                      bool require_singular = true);

}  // namespace hyprep

#endif  // HYPREP_HYPERBOLICITY_HPP
