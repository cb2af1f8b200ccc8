/*
   Copyright 2026 The exthecke Authors

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


#ifndef HECKE_TOOLS_FORMAT_HPP
#define HECKE_TOOLS_FORMAT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/coeff.hpp"
#include "hecke/extweyl.hpp"
#include "hecke/module.hpp"

namespace hecke::tools {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"lo": e, "coeffs": [c_e, c_{e+1}, ...]}; zero is {"lo": 0, "coeffs": []}.
Json laurent_json(const LaurentPoly& p);
/// ["p/q", ...] with every coordinate reduced into [0, 1).
Json point_json(const TorusLattice& lattice, PointId p);
/// 1-based generator indices of the canonical reduced word.
Json word_json(const WeylGroup& g, ElemId w);
/// "s1.s2" or "e".
std::string word_text(const WeylGroup& g, ElemId w);
/// "<word>@<coords>", e.g. "s1@0/1" or "e@1/3,0/1"; the key used for canonical tables.
std::string index_key(const InvolutionSet& basis, BasisIndex x);
Json involution_json(const InvolutionSet& basis, BasisIndex x);
/// [{"index": key, "coeff": laurent}, ...] in basis order.
Json vector_json(const InvolutionSet& basis, const ModuleVector& v);

/// Flattened output for csv/text: a header and rows of cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& t);
std::string render_text(const Table& t);

/// Writes to a temporary file next to path, then renames over it. Throws std::system_error.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace hecke::tools

#endif  // HECKE_TOOLS_FORMAT_HPP
