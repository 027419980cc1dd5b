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

#ifndef HYPREP_CONFIG_HPP
#define HYPREP_CONFIG_HPP

#include <cstdint>
#include <string>

namespace hyprep {

struct Config {
  std::uint64_t seed = 1;

  double tol_root = 1e-8;
  double cluster_rad = 1e-6;
  double tol_pt = 1e-8;
  double tol_sep = 1e-6;
  double tol_van = 1e-7;
  double tol_noether = 1e-8;
  double tol_pencil = 1e-7;
  double tol_pattern = 1e-6;
  double tol_final = 1e-6;

  // Perturbation schedule eps_k = eps0 * 10^(-k/2), k < eps_steps.
  double eps0 = 0.1;
  int eps_steps = 12;
  double converge_tol = 1e-5;

  int max_retries = 5;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws InvalidArgument unless every tolerance is positive and the
  /// counters are sane.
  void validate() const;

  unsigned effective_threads() const noexcept;
};

/// Reads a JSON object whose keys are Config field names. Unknown keys are
/// rejected so typos do not silently fall back to defaults.
Config load_config(const std::string& path, Config base = {});

}  // namespace hyprep

#endif  // HYPREP_CONFIG_HPP
