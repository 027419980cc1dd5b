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

#include "hyprep/config.hpp"

#include <fstream>
#include <json.hpp>
#include <thread>

#include "hyprep/error.hpp"

namespace hyprep {

void Config::validate() const {
  for (double t : {tol_root, cluster_rad, tol_pt, tol_sep, tol_van, tol_noether, tol_pencil, tol_pattern,
                   tol_final, eps0, converge_tol}) {
    if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
  if (eps_steps < 1) throw Error(ErrorKind::InvalidArgument, "eps_steps must be at least 1");
  if (max_retries < 0) throw Error(ErrorKind::InvalidArgument, "max_retries must be nonnegative");
}

unsigned Config::effective_threads() const noexcept {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config must be a JSON object");

  Config c = base;
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "seed") c.seed = val.get<std::uint64_t>();
      else if (key == "tol_root") c.tol_root = val.get<double>();
      else if (key == "cluster_rad") c.cluster_rad = val.get<double>();
      else if (key == "tol_pt") c.tol_pt = val.get<double>();
      else if (key == "tol_sep") c.tol_sep = val.get<double>();
      else if (key == "tol_van") c.tol_van = val.get<double>();
      else if (key == "tol_noether") c.tol_noether = val.get<double>();
      else if (key == "tol_pencil") c.tol_pencil = val.get<double>();
      else if (key == "tol_pattern") c.tol_pattern = val.get<double>();
      else if (key == "tol_final") c.tol_final = val.get<double>();
      else if (key == "eps0") c.eps0 = val.get<double>();
      else if (key == "eps_steps") c.eps_steps = val.get<int>();
      else if (key == "converge_tol") c.converge_tol = val.get<double>();
      else if (key == "max_retries") c.max_retries = val.get<int>();
      else if (key == "threads") c.threads = val.get<unsigned>();
      else throw Error(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace hyprep
