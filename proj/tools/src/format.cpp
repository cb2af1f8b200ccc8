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


#include "format.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <fstream>
#include <system_error>
#include <unistd.h>

namespace hecke::tools {

Json laurent_json(const LaurentPoly& p) {
    Json j;
    j["lo"] = p.is_zero() ? 0 : p.lo();
    j["coeffs"] = p.coeffs();
    return j;
}

Json point_json(const TorusLattice& lattice, PointId p) {
    Json j = Json::array();
    const TorusPoint point = lattice.point(p);
    for (const auto& c : point.coords()) j.push_back(c.to_string());
    return j;
}

Json word_json(const WeylGroup& g, ElemId w) {
    Json j = Json::array();
    for (int s : g.reduced_word(w)) j.push_back(s + 1);
    return j;
}

std::string word_text(const WeylGroup& g, ElemId w) {
    const auto word = g.reduced_word(w);
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? ".s" : "s") + std::to_string(word[i] + 1);
    return s;
}

std::string index_key(const InvolutionSet& basis, BasisIndex x) {
    const TwistedInvolution& ti = basis[x];
    std::string s = word_text(basis.group(), ti.w) + "@";
    const TorusPoint point = basis.lattice().point(ti.lambda);
    const auto& coords = point.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + coords[i].to_string();
    return s;
}

Json involution_json(const InvolutionSet& basis, BasisIndex x) {
    const TwistedInvolution& ti = basis[x];
    const WeylGroup& g = basis.group();
    Json j;
    j["index"] = index_key(basis, x);
    j["w"] = word_json(g, ti.w);
    j["lambda"] = point_json(basis.lattice(), ti.lambda);
    j["z"] = word_json(g, ti.z);
    j["u"] = word_json(g, ti.u);
    j["sign"] = ti.sign;
    j["u_length"] = ti.u_length;
    return j;
}

Json vector_json(const InvolutionSet& basis, const ModuleVector& v) {
    Json j = Json::array();
    for (const auto& [x, c] : v.terms()) j.push_back(Json{{"index", index_key(basis, x)}, {"coeff", laurent_json(c)}});
    return j;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render_csv(const Table& t) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
        out += '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out;
}

std::string render_text(const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    measure(t.header);
    for (const auto& r : t.rows) measure(r);
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string l;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            l += cells[i];
            if (i + 1 < cells.size()) l += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out += l + '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out;
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp);
        f << content;
        f.flush();
        if (!f) {
            std::remove(tmp.c_str());
            throw std::system_error(errno, std::generic_category(), "cannot write " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        const int err = errno;
        std::remove(tmp.c_str());
        throw std::system_error(err, std::generic_category(), "cannot rename onto " + path);
    }
}

}  // namespace hecke::tools
