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


#include <iostream>
#include <system_error>

#include <CLI11.hpp>

#include "commands.hpp"

using hecke::tools::CommandOutput;
using hecke::tools::JobConfig;

namespace {

enum ExitCode { kPass = 0, kInvariantFailure = 1, kUsage = 2, kIo = 3 };

std::string render(const CommandOutput& out, const std::string& format) {
    if (format == "json") return out.json.dump(2) + "\n";
    if (format == "csv") return hecke::tools::render_csv(out.table);
    return hecke::tools::render_text(out.table);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke modules on twisted involutions of extended Weyl groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a key = value file; flags take precedence");

    JobConfig cfg;
    app.add_option("--type", cfg.type, "Cartan type, e.g. A2, B3, A1xA1");
    app.add_option("--m", cfg.m, "Twist m >= 1")->capture_default_str();
    app.add_option("-N,--denominator", cfg.denominator, "Torsion denominator N >= 1")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    app.add_option("--out", cfg.out, "Output file (written atomically); stdout if omitted");
    app.add_option("--gen", cfg.gens, "act: generators s1..sr (repeatable); default all");
    app.add_flag("--inverse", cfg.inverse, "act: tabulate T_s^-1");
    app.add_option("--orbit", cfg.orbit, "canonical: base point of the orbit, e.g. 0,1/3");
    app.add_option("--suite", cfg.suites, "verify: suite to run (repeatable); default all")
        ->check(CLI::IsMember(hecke::tools::suite_names()));
    app.add_option("--q", cfg.q, "ffcheck: odd primes (repeatable)")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware); HECKE_THREADS overrides");
    app.add_option("--cap", cfg.cap, "Refuse index sets with |W| * N^rank above this")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "List Xtilde_m with decompositions, signs and blocks");
    auto* act = app.add_subcommand("act", "Tabulate the generator action");
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    auto* canonical = app.add_subcommand("canonical", "Compute the canonical basis");
    auto* ffcheck = app.add_subcommand("ffcheck", "Exhaustive finite-field counting identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    CommandOutput out;
    try {
        if (*enumerate) out = hecke::tools::cmd_enumerate(cfg);
        else if (*act) out = hecke::tools::cmd_act(cfg);
        else if (*verify) out = hecke::tools::cmd_verify(cfg);
        else if (*canonical) out = hecke::tools::cmd_canonical(cfg);
        else if (*ffcheck) out = hecke::tools::cmd_ffcheck(cfg);
    } catch (const hecke::tools::UsageError& e) {
        std::cerr << "hecke: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hecke: internal invariant failure: " << e.what() << "\n";
        return kInvariantFailure;
    }

    const std::string text = render(out, cfg.format);
    if (cfg.out.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) return kIo;
    } else {
        try {
            hecke::tools::write_atomically(cfg.out, text);
        } catch (const std::system_error& e) {
            std::cerr << "hecke: " << e.what() << "\n";
            return kIo;
        }
    }
    if (!out.passed) {
        std::cerr << "hecke: FAIL: " << out.message << "\n";
        return kInvariantFailure;
    }
    return kPass;
}
