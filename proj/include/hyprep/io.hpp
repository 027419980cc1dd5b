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

#ifndef HYPREP_IO_HPP
#define HYPREP_IO_HPP

#include <json.hpp>
#include <string>

#include "hyprep/dixon.hpp"
#include "hyprep/hyperbolicity.hpp"

namespace hyprep {

using Json = nlohmann::json;

Json to_json(const InvariantForm& f);
Json to_json(const ShiftMatrix& w);
Json to_json(const TrivariatePoly& p);
Json to_json(const IntersectionSet& iset);
Json to_json(const VerifyReport& r);
Json to_json(const Classification& c);

/// Parsers throw InvalidArgument on malformed documents.
InvariantForm form_from_json(const Json& j);
ShiftMatrix shift_from_json(const Json& j);
TrivariatePoly poly_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Serializer with floating-point numbers printed to 17 significant digits.
/// Non-finite numbers become null.
std::string dump_json(const Json& j, int indent = 2);

}  // namespace hyprep

#endif  // HYPREP_IO_HPP
