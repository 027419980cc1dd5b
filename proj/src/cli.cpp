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

#include "hyprep/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyprep/error.hpp"
#include "hyprep/io.hpp"
#include "hyprep/numrange.hpp"

namespace hyprep {

namespace {

struct Common {
  std::string config_path;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double tol = 1e-6;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
  CLI::Option* tol_opt = nullptr;

  // Defaults, then the config file, then flags given on the command line.
  Config resolve() const {
    Config c;
    if (!config_path.empty()) c = load_config(config_path, c);
    if (seed_opt->count() > 0) c.seed = seed;
    if (threads_opt->count() > 0) c.threads = threads;
    if (tol_opt->count() > 0) c.tol_final = tol;
    c.validate();
    return c;
  }
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--config", common.config_path, "JSON file with configuration overrides");
  common.seed_opt = sub->add_option("--seed", common.seed, "random seed for sampling and retries");
  common.threads_opt = sub->add_option("--threads", common.threads, "worker threads (0: all cores)");
  common.tol_opt = sub->add_option("--tol", common.tol, "final verification tolerance");
}

RootOptions root_options(const Config& c) { return {c.tol_root, c.cluster_rad}; }

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::PreconditionViolated:
      return kExitInputError;
    case ErrorKind::NotHyperbolic:
    case ErrorKind::NotDihedral:
      return kExitVerifyFailed;
    default:
      return kExitNumericalFailure;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic weighted shift representations of rotation-invariant hyperbolic curves", "hyprep"};
  app.require_subcommand(1);
  Common common;

  std::string input, output, form_path, shift_path, csv, svg;
  int n = 0;
  int angles = 720;

  auto* check = app.add_subcommand("check", "hyperbolicity and smooth/singular classification");
  check->add_option("--input", input, "form JSON")->required();
  add_common(check, common);

  auto* represent_cmd = app.add_subcommand("represent", "construct a shift matrix for a form");
  represent_cmd->add_option("--input", input, "form JSON")->required();
  represent_cmd->add_option("--output", output, "write the shift matrix JSON here");
  add_common(represent_cmd, common);

  auto* forward_cmd = app.add_subcommand("forward", "invariant form of a shift matrix");
  forward_cmd->add_option("--input", input, "shift JSON")->required();
  add_common(forward_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "compare a form with the form of a shift matrix");
  verify_cmd->add_option("--form", form_path, "form JSON")->required();
  verify_cmd->add_option("--shift", shift_path, "shift JSON")->required();
  add_common(verify_cmd, common);

  auto* realize_cmd = app.add_subcommand("realize", "gauge a shift matrix with real product to real weights");
  realize_cmd->add_option("--input", input, "shift JSON")->required();
  add_common(realize_cmd, common);

  auto* points_cmd = app.add_subcommand("points", "intersection of the curve with its t-derivative");
  points_cmd->add_option("--input", input, "form JSON")->required();
  add_common(points_cmd, common);

  auto* numrange_cmd = app.add_subcommand("numrange", "sample the numerical range boundary");
  numrange_cmd->add_option("--input", input, "shift JSON")->required();
  numrange_cmd->add_option("--angles", angles, "number of angles")->check(CLI::Range(8, 1 << 20));
  numrange_cmd->add_option("--csv", csv, "CSV output path");
  numrange_cmd->add_option("--svg", svg, "SVG output path");
  add_common(numrange_cmd, common);

  auto* curve_cmd = app.add_subcommand("curve", "sample the real curve in the chart t = 1");
  curve_cmd->add_option("--input", input, "form JSON")->required();
  curve_cmd->add_option("--angles", angles, "number of angles in [0, pi)")->check(CLI::Range(1, 1 << 20));
  curve_cmd->add_option("--csv", csv, "CSV output path");
  add_common(curve_cmd, common);

  auto* dims_cmd = app.add_subcommand("dims", "dimension counts for degree n");
  dims_cmd->add_option("--n", n, "degree")->required()->check(CLI::Range(3, 4096));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hyprep: " << e.what() << '\n';
    return kExitInputError;
  }

  auto emit = [&](const Json& j) { out << dump_json(j) << '\n'; };

  try {
    if (dims_cmd->parsed()) {
      Json dims = Json::array();
      for (int ell = 0; ell < n; ++ell) dims.push_back(eigenspace_dim_formula(n, ell));
      emit({{"invariant_dim", invariant_dim(n)}, {"eigenspace_dims", dims}});
      return kExitOk;
    }
    const Config cfg = common.resolve();

    if (check->parsed()) {
      const InvariantForm f = form_from_json(read_json_file(input));
      const bool hyp = is_hyperbolic(f, root_options(cfg));
      Json j{{"hyperbolic", hyp}};
      if (hyp) j["classification"] = to_json(classify(f, root_options(cfg)));
      emit(j);
      return hyp ? kExitOk : kExitVerifyFailed;
    }
    if (represent_cmd->parsed()) {
      const InvariantForm f = form_from_json(read_json_file(input));
      if (!is_hyperbolic(f, root_options(cfg))) {
        err << "hyprep: form is not hyperbolic\n";
        emit({{"hyperbolic", false}});
        return kExitVerifyFailed;
      }
      const RepresentResult r = represent(f, cfg);
      if (!output.empty()) write_text_file(output, dump_json(to_json(r.shift)) + "\n");
      const bool ok = r.report.ok(cfg.tol_final * f.scale());
      emit({{"shift", to_json(r.shift)},
            {"verify", to_json(r.report)},
            {"route", r.route},
            {"eps_final", r.eps_final},
            {"steps", r.steps},
            {"retries", r.retries},
            {"ok", ok}});
      return ok ? kExitOk : kExitVerifyFailed;
    }
    if (forward_cmd->parsed()) {
      emit(to_json(forward_checked(shift_from_json(read_json_file(input)))));
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const InvariantForm f = form_from_json(read_json_file(form_path));
      const ShiftMatrix w = shift_from_json(read_json_file(shift_path));
      if (w.n != f.n) throw Error(ErrorKind::InvalidArgument, "form and shift matrix differ in size");
      const VerifyReport r = verify(f, w);
      Json j = to_json(r);
      j["ok"] = r.ok(cfg.tol_final);
      emit(j);
      return r.ok(cfg.tol_final) ? kExitOk : kExitVerifyFailed;
    }
    if (realize_cmd->parsed()) {
      const ShiftMatrix w = shift_from_json(read_json_file(input));
      const ShiftMatrix b = realize_real(w);
      const double d = form_distance(forward_matching(w), forward_matching(b));
      emit({{"shift", to_json(b)}, {"form_change", d}});
      return d <= 1e-9 * forward_matching(w).scale() ? kExitOk : kExitVerifyFailed;
    }
    if (points_cmd->parsed()) {
      const InvariantForm f = form_from_json(read_json_file(input));
      IntersectionOptions o;
      o.roots = root_options(cfg);
      o.tol_pt = cfg.tol_pt;
      o.tol_sep = cfg.tol_sep;
      const IntersectionSet iset = intersection_set(f, o);
      Json j = to_json(iset);
      j["distinct"] = validate_distinct(iset, cfg.tol_sep);
      emit(j);
      return kExitOk;
    }
    if (numrange_cmd->parsed()) {
      const ShiftMatrix w = shift_from_json(read_json_file(input));
      const BoundarySample b = boundary_sample(w, angles, cfg.effective_threads());
      if (!csv.empty()) {
        std::ostringstream s;
        write_boundary_csv(s, b);
        write_text_file(csv, s.str());
      }
      if (!svg.empty()) {
        std::ostringstream s;
        write_boundary_svg(s, b);
        write_text_file(svg, s.str());
      }
      emit({{"angles", angles},
            {"support_min", *std::min_element(b.support.begin(), b.support.end())},
            {"support_max", *std::max_element(b.support.begin(), b.support.end())}});
      return kExitOk;
    }
    if (curve_cmd->parsed()) {
      const InvariantForm f = form_from_json(read_json_file(input));
      const auto pts = curve_sample(f, angles, root_options(cfg));
      if (!csv.empty()) {
        std::ostringstream s;
        write_curve_csv(s, pts);
        write_text_file(csv, s.str());
      }
      emit({{"angles", angles}, {"points", pts.size()}});
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "hyprep: " << e.what() << '\n';
    return exit_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "hyprep: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace hyprep
