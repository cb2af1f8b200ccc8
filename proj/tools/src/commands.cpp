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


#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hecke/finite_field.hpp"
#include "hecke/parallel.hpp"

namespace hecke::tools {

namespace {

Json header(const std::string& command, const JobConfig& cfg) {
    Json j;
    j["schema"] = "hecke." + command;
    j["version"] = kSchemaVersion;
    if (command != "ffcheck") {
        j["type"] = CartanType::parse(cfg.type).to_string();
        j["m"] = cfg.m;
        j["denominator"] = cfg.denominator;
    }
    return j;
}

char case_letter(ActionCase c) {
    switch (c) {
        case ActionCase::NonCommutingUp: return 'a';
        case ActionCase::NonCommutingDown: return 'b';
        case ActionCase::CommutingUp: return 'c';
        case ActionCase::CommutingDown: return 'd';
    }
    return '?';
}

std::string expansion_text(const InvolutionSet& basis, const ModuleVector& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [x, c] : v.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*a[" + index_key(basis, x) + "]";
    }
    return s;
}

int parse_generator(const std::string& name, int rank) {
    std::size_t used = 0;
    int s = -1;
    try {
        if (name.size() >= 2 && name[0] == 's') s = std::stoi(name.substr(1), &used);
    } catch (const std::exception&) {
        s = -1;
    }
    if (s < 1 || s > rank || used + 1 != name.size())
        throw UsageError("unknown generator '" + name + "' (expected s1..s" + std::to_string(rank) + ")");
    return s - 1;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"braid", "quadratic", "oracle", "bar", "canonical", "v1", "bijection", "signs", "lv"};
}

std::unique_ptr<Instance> build_instance(const JobConfig& cfg) {
    if (cfg.type.empty()) throw UsageError("--type is required");
    if (cfg.m < 1) throw UsageError("--m must be >= 1");
    if (cfg.denominator < 1) throw UsageError("--denominator must be >= 1");
    CartanType type;
    try {
        type = CartanType::parse(cfg.type);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid --type: ") + e.what());
    }
    std::size_t order = 0;
    try {
        RootDatum datum(type);
        order = WeylGroup(datum).size();
    } catch (const std::exception& e) {
        throw UsageError(std::string("unsupported root datum: ") + e.what());
    }
    const double size = static_cast<double>(order) * std::pow(static_cast<double>(cfg.denominator), type.rank());
    if (size > cfg.cap)
        throw UsageError("|W| * N^rank = " + std::to_string(static_cast<long long>(size)) + " exceeds the cap " +
                         std::to_string(static_cast<long long>(cfg.cap)) + " (raise it with --cap)");
    return std::make_unique<Instance>(type, cfg.m, cfg.denominator);
}

CommandOutput cmd_enumerate(const JobConfig& cfg) {
    auto in = build_instance(cfg);
    const InvolutionSet& basis = in->basis;
    const WeylGroup& g = in->group;
    CommandOutput out;
    out.json = header("enumerate", cfg);
    out.table.header = {"index", "w", "lambda", "z", "u", "sign", "u_length"};
    Json rows = Json::array();
    for (BasisIndex x = 0; x < basis.size(); ++x) {
        const TwistedInvolution& ti = basis[x];
        rows.push_back(involution_json(basis, x));
        out.table.rows.push_back({index_key(basis, x), word_text(g, ti.w), in->lattice.point(ti.lambda).to_string(),
                                  word_text(g, ti.z), word_text(g, ti.u), std::to_string(ti.sign), std::to_string(ti.u_length)});
    }
    out.json["rows"] = rows;
    Json blocks = Json::array();
    std::size_t block_sum = 0;
    for (const Block& b : basis.blocks()) {
        Json members = Json::array();
        for (ElemId u : b.members) members.push_back(word_json(g, u));
        blocks.push_back(Json{{"z", word_json(g, b.z)}, {"lambda", point_json(in->lattice, b.lambda)},
                              {"size", b.members.size()}, {"members", members}});
        block_sum += b.members.size();
    }
    out.json["blocks"] = blocks;
    const SuiteResult bij = check_bijection(*in);
    out.json["count"] = Json{{"xtilde", basis.size()}, {"block_sum", block_sum}, {"consistent", bij.passed}};
    out.passed = bij.passed;
    out.message = bij.failure;
    return out;
}

CommandOutput cmd_act(const JobConfig& cfg) {
    auto in = build_instance(cfg);
    const HeckeModule& mod = in->module;
    std::vector<int> gens;
    for (const auto& name : cfg.gens) gens.push_back(parse_generator(name, mod.rank()));
    if (gens.empty())
        for (int s = 0; s < mod.rank(); ++s) gens.push_back(s);

    CommandOutput out;
    out.json = header("act", cfg);
    out.json["inverse"] = cfg.inverse;
    out.table.header = {"gen", "source", "case", "image"};
    Json tables = Json::array();
    for (int s : gens) {
        Json rows = Json::array();
        const std::string name = "s" + std::to_string(s + 1);
        for (BasisIndex x = 0; x < mod.dim(); ++x) {
            const ModuleVector img = cfg.inverse ? mod.ts_inv_act(s, ModuleVector::basis(x)) : mod.ts_act(s, ModuleVector::basis(x));
            const std::string letter(1, case_letter(mod.action_case(s, x)));
            Json image = Json::array();
            for (const auto& [y, c] : img.terms())
                image.push_back(Json{{"target", index_key(in->basis, y)}, {"coeff", laurent_json(c)}});
            rows.push_back(Json{{"source", index_key(in->basis, x)}, {"case", letter}, {"delta", mod.delta(s, in->basis[x].lambda) ? 1 : 0},
                                {"image", image}});
            out.table.rows.push_back({name, index_key(in->basis, x), letter, expansion_text(in->basis, img)});
        }
        tables.push_back(Json{{"gen", name}, {"rows", rows}});
    }
    out.json["tables"] = tables;
    return out;
}

CommandOutput cmd_verify(const JobConfig& cfg) {
    std::vector<std::string> selected = cfg.suites.empty() ? suite_names() : cfg.suites;
    const auto names = suite_names();
    for (const auto& s : selected)
        if (std::find(names.begin(), names.end(), s) == names.end()) throw UsageError("unknown suite '" + s + "'");
    auto in = build_instance(cfg);
    const unsigned threads = resolve_threads(cfg.threads);
    std::unique_ptr<BarOperator> bar;
    auto need_bar = [&]() -> const BarOperator& {
        if (!bar) bar = std::make_unique<BarOperator>(in->module, threads);
        return *bar;
    };

    CommandOutput out;
    out.json = header("verify", cfg);
    out.table.header = {"suite", "result", "checks", "failure"};
    Json suites = Json::array();
    for (const auto& name : names) {
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
        SuiteResult r;
        if (name == "braid") r = check_braid(*in, threads);
        else if (name == "quadratic") r = check_quadratic(*in, threads);
        else if (name == "oracle") r = check_oracle(*in, threads);
        else if (name == "bar") r = check_bar(*in, need_bar(), threads);
        else if (name == "canonical") r = check_canonical_suite(*in, need_bar());
        else if (name == "v1") r = check_v1(*in, threads);
        else if (name == "bijection") r = check_bijection(*in);
        else if (name == "signs") r = check_signs(*in);
        else r = check_lv_sector(*in);
        suites.push_back(Json{{"name", name}, {"passed", r.passed}, {"checks", r.checks}, {"failure", r.failure}});
        out.table.rows.push_back({name, r.passed ? "pass" : "FAIL", std::to_string(r.checks), r.failure});
        if (!r.passed && out.passed) {
            out.passed = false;
            out.message = name + ": " + r.failure;
        }
    }
    out.json["suites"] = suites;
    out.json["passed"] = out.passed;
    return out;
}

CommandOutput cmd_canonical(const JobConfig& cfg) {
    auto in = build_instance(cfg);
    std::vector<std::vector<PointId>> orbits = in->xbar_orbits();
    if (!cfg.orbit.empty()) {
        PointId base = 0;
        try {
            const TorusPoint p = TorusPoint::parse(cfg.orbit);
            if (p.rank() != in->lattice.rank()) throw std::invalid_argument("rank mismatch");
            base = in->lattice.id(p);
        } catch (const std::exception& e) {
            throw UsageError("invalid --orbit '" + cfg.orbit + "': " + e.what());
        }
        if (!in->lattice.in_xbar_m(base, cfg.m)) throw UsageError("--orbit base point is not in Xbar_m");
        std::erase_if(orbits, [&](const auto& o) { return std::find(o.begin(), o.end(), base) == o.end(); });
    }
    const BarOperator bar(in->module, resolve_threads(cfg.threads));

    CommandOutput out;
    out.json = header("canonical", cfg);
    out.table.header = {"index", "canonical"};
    Json jorbits = Json::array();
    for (const auto& orbit : orbits) {
        Json points = Json::array();
        for (PointId p : orbit) points.push_back(point_json(in->lattice, p));
        Json elements = Json::object();
        try {
            const CanonicalBasisTable table = canonical_basis(bar, orbit);
            const CanonicalBasisTable again = canonical_basis(bar, orbit, CanonicalOrder::LengthThenReverseIndex);
            std::string err = check_canonical(bar, table);
            if (err.empty() && !(table == again)) err = "canonical basis depends on the processing order";
            if (!err.empty() && out.passed) {
                out.passed = false;
                out.message = err;
            }
            for (const auto& [x, hat] : table.elements) {
                elements[index_key(in->basis, x)] = vector_json(in->basis, hat);
                out.table.rows.push_back({index_key(in->basis, x), expansion_text(in->basis, hat)});
            }
        } catch (const TriangularityError& e) {
            out.passed = false;
            out.message = std::string("triangularity failure: ") + e.what();
        }
        jorbits.push_back(Json{{"points", points}, {"elements", elements}});
    }
    out.json["orbits"] = jorbits;
    out.json["passed"] = out.passed;
    return out;
}

CommandOutput cmd_ffcheck(const JobConfig& cfg) {
    CommandOutput out;
    out.json = header("ffcheck", cfg);
    out.table.header = {"q", "identity", "role", "pairs", "failures", "result", "first_failure"};
    Json fields = Json::array();
    for (int q : cfg.q) {
        std::unique_ptr<GaloisField> f;
        try {
            f = std::make_unique<GaloisField>(q);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("invalid --q: ") + e.what());
        }
        Json ids = Json::array();
        auto emit = [&](const IdentitySweep& s, bool diagnostic) {
            const std::string role = diagnostic ? "diagnostic" : "check";
            ids.push_back(Json{{"identity", s.identity}, {"role", role}, {"pairs", s.pairs}, {"failures", s.failures},
                               {"passed", s.passed()}, {"first_failure", s.first_failure}});
            out.table.rows.push_back({std::to_string(q), s.identity, role, std::to_string(s.pairs), std::to_string(s.failures),
                                      s.passed() ? "pass" : "FAIL", s.first_failure});
            if (!diagnostic && !s.passed() && out.passed) {
                out.passed = false;
                out.message = "q=" + std::to_string(q) + " identity " + s.identity + ": " + s.first_failure;
            }
        };
        emit(sweep_identity_e(*f), false);
        emit(sweep_identity_f(*f), false);
        emit(sweep_identity_e_norm_form(*f), true);
        fields.push_back(Json{{"q", q}, {"nonresidue", f->nonresidue()}, {"identities", ids}});
    }
    out.json["fields"] = fields;
    out.json["passed"] = out.passed;
    return out;
}

}  // namespace hecke::tools
