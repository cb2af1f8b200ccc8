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


#ifndef HECKE_TOOLS_COMMANDS_HPP
#define HECKE_TOOLS_COMMANDS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "format.hpp"
#include "hecke/verify.hpp"

namespace hecke::tools {

struct JobConfig {
    std::string type;
    int m = 1;
    int denominator = 1;
    std::string format = "text";
    std::string out;
    std::vector<std::string> gens;    // act: empty means every generator
    bool inverse = false;             // act: tabulate T_s^{-1} instead
    std::string orbit;                // canonical: base point, empty means every orbit
    std::vector<std::string> suites;  // verify: empty means every suite
    std::vector<int> q{3};            // ffcheck
    unsigned threads = 0;
    double cap = 1e6;
};

/// Bad configuration: reported with exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandOutput {
    Json json;
    Table table;
    bool passed = true;
    std::string message;  // first failure, for stderr
};

std::vector<std::string> suite_names();

/// Validates type, m, N and the size cap, then builds the instance. Throws UsageError.
std::unique_ptr<Instance> build_instance(const JobConfig& cfg);

CommandOutput cmd_enumerate(const JobConfig& cfg);
CommandOutput cmd_act(const JobConfig& cfg);
CommandOutput cmd_verify(const JobConfig& cfg);
CommandOutput cmd_canonical(const JobConfig& cfg);
CommandOutput cmd_ffcheck(const JobConfig& cfg);

}  // namespace hecke::tools

#endif  // HECKE_TOOLS_COMMANDS_HPP
