// SPDX-License-Identifier: Apache-2.0
// Verification suites and solver commands behind the command-line tool.
#pragma once

#include "artifact/chordcat.hpp"

#include <iosfwd>

namespace artifact {

enum class ReportFormat { Text, Structured };

struct RunConfig {
    std::optional<int> degree;  // overrides the per-n defaults
    int chord_degree = 2;
    int width_bound = 5;
    std::optional<std::string> cache_dir;
    ReportFormat format = ReportFormat::Text;
    std::uint64_t seed = 1;
    std::optional<std::string> phi_file;  // element or series file for grt/associator
    bool parallel = true;

    // 4 for n <= 4, 3 for n = 5 unless overridden.
    int degree_for(int n) const;
    ChordConfig chord() const { return {chord_degree, width_bound}; }
};

struct Section {
    std::string title;
    EquationReport report;
};

struct SuiteResult {
    std::string suite;
    std::vector<Section> sections;
    std::vector<std::string> notes;  // printed as comments
    bool failed = false;             // set on errors outside the residual records

    bool ok() const;
};

const std::vector<std::string>& suite_names();  // without "all"
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);
// Runs one suite, or every suite for "all"; writes the report, returns the exit status.
int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out);

struct SolveCommand {
    SolveTarget target = SolveTarget::Assoc;
    Rat lambda = 1;
    int degree = 4;
    std::string out_file;
    std::map<int, std::vector<Rat>> kernel_choice;
};
// Writes the element file and prints the per-degree kernel table.
int cmd_solve(const SolveCommand& c, const RunConfig& cfg, std::ostream& out);

// Element file or bare series file; a series file gets lambda = 1, certified 0.
ElementFile load_phi(const std::string& path);

// Cache directory from the flag, else from ARTIFACT_CACHE_DIR.
std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace artifact
