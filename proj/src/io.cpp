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

#include "hyprep/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyprep/error.hpp"

namespace hyprep {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Json point_json(const ProjPoint& p) {
  return Json::array({complex_pair(p.t), complex_pair(p.u), complex_pair(p.v)});
}

Json roots_json(const RootProfile& prof) {
  Json out = Json::array();
  for (const auto& r : prof.roots) out.push_back({{"value", r.value}, {"multiplicity", r.multiplicity}});
  return out;
}

double get_real(const Json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a number");
  return j.get<double>();
}

void dump(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += pad + Json(it.key()).dump() + (indent > 0 ? ": " : ":");
        dump(it.value(), indent, depth + 1, out);
      }
      out += close + '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += flat ? ", " : ",";
        if (!flat) out += pad;
        dump(j[i], indent, depth + 1, out);
      }
      out += (flat ? "" : close) + ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(const InvariantForm& f) { return {{"n", f.n}, {"c", f.c}, {"c0", f.c0}, {"ct0", f.ct0}}; }

Json to_json(const ShiftMatrix& w) {
  Json ws = Json::array();
  for (const auto& a : w.weights) ws.push_back(complex_pair(a));
  return {{"n", w.n}, {"weights", ws}};
}

Json to_json(const TrivariatePoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"e", {e[0], e[1], e[2]}}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"degree", p.degree()}, {"terms", terms}};
}

Json to_json(const IntersectionSet& iset) {
  Json orbits = Json::array();
  for (const auto& o : iset.orbits) {
    Json pts = Json::array();
    for (const auto& p : o.points) pts.push_back(point_json(p));
    orbits.push_back({{"rep", point_json(o.rep)},
                      {"multiplicity", o.multiplicity},
                      {"at_infinity", o.at_infinity},
                      {"partner", o.partner},
                      {"points", pts}});
  }
  Json reps = Json::array();
  for (std::size_t i = 0; i < iset.reps.size(); ++i) {
    reps.push_back({{"point", point_json(iset.reps[i])},
                    {"copies", iset.orbit_mult[i]},
                    {"at_infinity", static_cast<bool>(iset.at_infinity[i])}});
  }
  Json s = Json::array(), sbar = Json::array();
  for (const auto& p : iset.S) s.push_back(point_json(p));
  for (const auto& p : iset.Sbar) sbar.push_back(point_json(p));
  return {{"n", iset.n},          {"count", iset.total_count()}, {"max_residual", iset.max_residual},
          {"reps", reps},         {"orbits", orbits},            {"S", s},
          {"Sbar", sbar}};
}

Json to_json(const VerifyReport& r) {
  return {{"max_abs_err", r.max_abs_err}, {"deltas", r.deltas},       {"hyperbolic", r.hyperbolic},
          {"dihedral", r.dihedral},       {"zero_weight", r.zero_weight}, {"computed", to_json(r.computed)}};
}

Json to_json(const Classification& c) {
  return {{"kind", c.kind == FormKind::Smooth ? "smooth" : "singular"},
          {"s", c.s},
          {"plus_repeated", c.plus_repeated},
          {"minus_repeated", c.minus_repeated},
          {"zero_product", c.zero_product},
          {"borderline", c.borderline},
          {"plus_roots", roots_json(c.plus)},
          {"minus_roots", roots_json(c.minus)},
          {"discriminant_plus", c.plus.discriminant},
          {"discriminant_minus", c.minus.discriminant}};
}

InvariantForm form_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "form must be a JSON object");
  for (const char* key : {"n", "c", "c0", "ct0"}) {
    if (!j.contains(key)) throw Error(ErrorKind::InvalidArgument, std::string("form is missing '") + key + "'");
  }
  if (!j["n"].is_number_integer()) throw Error(ErrorKind::InvalidArgument, "n must be an integer");
  if (!j["c"].is_array()) throw Error(ErrorKind::InvalidArgument, "c must be an array");
  InvariantForm f;
  f.n = j["n"].get<int>();
  for (const auto& x : j["c"]) f.c.push_back(get_real(x, "c entry"));
  f.c0 = get_real(j["c0"], "c0");
  f.ct0 = get_real(j["ct0"], "ct0");
  f.validate();
  return f;
}

ShiftMatrix shift_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array()) {
    throw Error(ErrorKind::InvalidArgument, "shift matrix needs a 'weights' array");
  }
  std::vector<Complex> w;
  for (const auto& a : j["weights"]) {
    if (a.is_number()) {
      w.emplace_back(a.get<double>(), 0.0);
    } else if (a.is_array() && a.size() == 2) {
      w.emplace_back(get_real(a[0], "weight"), get_real(a[1], "weight"));
    } else {
      throw Error(ErrorKind::InvalidArgument, "weights are numbers or [re, im] pairs");
    }
  }
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != static_cast<int>(w.size()))) {
    throw Error(ErrorKind::InvalidArgument, "n does not match the number of weights");
  }
  return ShiftMatrix(std::move(w));
}

TrivariatePoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorKind::InvalidArgument, "polynomial needs 'degree' and 'terms'");
  }
  TrivariatePoly::Terms terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("e") || !t["e"].is_array() || t["e"].size() != 3) {
      throw Error(ErrorKind::InvalidArgument, "term exponent must be [i, j, k]");
    }
    const Exponent e{t["e"][0].get<int>(), t["e"][1].get<int>(), t["e"][2].get<int>()};
    const double re = t.contains("re") ? get_real(t["re"], "re") : 0.0;
    const double im = t.contains("im") ? get_real(t["im"], "im") : 0.0;
    terms[e] += Complex(re, im);
  }
  return TrivariatePoly(j["degree"].get<int>(), std::move(terms));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump(j, indent, 0, out);
  return out;
}

}  // namespace hyprep
