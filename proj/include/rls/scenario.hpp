#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rls/pipeline.hpp"

namespace rls {

using ScenarioParams = std::map<std::string, long>;

/// One `expect ...` line of a scenario document.
struct Expectation {
    std::vector<std::string> words;  // after `expect`; `jordan` keeps its notation as one word
    size_t line = 0;
};

struct Scenario {
    std::string name;
    ScenarioParams params;
    bool experimental = false;
    std::string source;  // after placeholder substitution
    Pipeline pipeline;
    std::vector<Expectation> expectations;
};

/// theorem1, zeta6, general-q.
std::vector<std::string> scenario_names();

/// The shipped document (general-q still holds its placeholders).
/// Throws UnknownScenario.
std::string_view scenario_source(std::string_view name);

/// A pipeline document optionally followed by `expect` lines. Expectation
/// lines are blanked before the pipeline is parsed, so positions in parse
/// errors refer to the original text.
Scenario parse_scenario(std::string name, std::string_view text);

/// Instantiates a shipped scenario. general-q takes q (default 4) and
/// substitutes {N} = lcm(3, q), {zq}, {z3}; q = 2 and q = 3 are accepted as
/// experimental, smaller q throws InvalidParameter, as do unknown parameters.
Scenario load_scenario(std::string_view name, const ScenarioParams& params = {});

/// Expected Jordan data written as `J(2,2,1)`, `diag(1, z, z^-1)` or
/// `[1] 2 1; [z] 1`. Returns (eigenvalue, block length) pairs.
std::vector<std::pair<Cyclotomic, size_t>> parse_jordan_notation(std::string_view text, int conductor);

struct CheckResult {
    std::string description;
    bool passed = false;
    std::string detail;  // what was found, on failure
};

enum ExitStatus : int { ExitOk = 0, ExitMismatch = 2, ExitEvaluation = 3, ExitUsage = 4 };

struct ScenarioRun {
    int exit_code = ExitOk;
    std::string report;
    std::vector<CheckResult> checks;
};

/// Evaluates, analyzes, compares with the expectations and renders the
/// report. Errors raised while evaluating or analyzing become exit code 3
/// with the error in the report; parse and parameter errors propagate.
ScenarioRun run_scenario(const Scenario& scenario);
ScenarioRun run_scenario(std::string_view name, const ScenarioParams& params = {});

/// Checks of the embedded rank-7 fixture, in order: product relation,
/// Jordan data per slot, irreducibility, invariant form, fixed trivector,
/// rigidity for gl7, so7 and g2.
std::vector<CheckResult> verify_appendix(const std::array<Matrix, 4>& fixture);
std::vector<CheckResult> verify_appendix();

std::string format_checks(const std::vector<CheckResult>& checks);

}  // namespace rls
