// Command line front end: run scenarios, evaluate pipeline documents,
// analyze and convolve tuple files, check the embedded rank-7 fixture.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rls/convolution.hpp"
#include "rls/errors.hpp"
#include "rls/scenario.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

rls::ScenarioParams parse_params(const std::vector<std::string>& items) {
    rls::ScenarioParams params;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected --param NAME=VALUE, got '" + item + "'");
        const std::string value = item.substr(eq + 1);
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw UsageError("parameter value must be an integer: '" + item + "'");
        params[item.substr(0, eq)] = v;
    }
    return params;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text;
}

bool is_usage(rls::ErrorCode code) {
    return code == rls::ErrorCode::ParseError || code == rls::ErrorCode::UnknownScenario ||
           code == rls::ErrorCode::InvalidParameter;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for monodromy tuples and middle convolution"};
    app.require_subcommand(1);

    std::string scenario;
    std::vector<std::string> params;
    std::string out_path;
    auto* run = app.add_subcommand("run", "Run a shipped scenario and check its expectations");
    run->add_option("scenario", scenario, "theorem1, zeta6 or general-q")->required();
    run->add_option("--param", params, "NAME=VALUE, e.g. q=5");
    run->add_option("--out", out_path, "Write the report to this file");

    std::string pipeline_file;
    auto* eval = app.add_subcommand("eval", "Evaluate a pipeline document");
    eval->add_option("file", pipeline_file)->required();
    eval->add_option("--out", out_path, "Write the report to this file");

    std::string tuple_file;
    std::vector<std::string> groups;
    auto* analyze = app.add_subcommand("analyze", "Analyze a tuple document");
    analyze->add_option("file", tuple_file)->required();
    analyze->add_option("--group", groups, "gl, so, sp or g2 (repeatable)");

    app.add_subcommand("verify-appendix", "Check the embedded rank-7 fixture");

    std::string lambda;
    auto* convolve = app.add_subcommand("convolve", "Middle convolution of a tuple document");
    convolve->add_option("file", tuple_file)->required();
    convolve->add_option("--lambda", lambda, "Scalar literal in the tuple's field")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : rls::ExitUsage;
    }

    try {
        if (run->parsed()) {
            const auto result = rls::run_scenario(scenario, parse_params(params));
            emit(result.report, out_path);
            return result.exit_code;
        }
        if (eval->parsed()) {
            const auto result = rls::run_scenario(rls::parse_scenario(pipeline_file, read_file(pipeline_file)));
            emit(result.report, out_path);
            return result.exit_code;
        }
        if (analyze->parsed()) {
            const auto t = rls::parse_tuple(read_file(tuple_file));
            std::vector<rls::LieKind> kinds;
            for (const auto& g : groups) kinds.push_back(rls::parse_lie_kind(g));
            std::cout << rls::format_report(rls::analyze(t, kinds));
            return rls::ExitOk;
        }
        if (convolve->parsed()) {
            const auto t = rls::parse_tuple(read_file(tuple_file));
            const auto result = rls::middle_convolution(t, rls::parse_scalar(lambda, t.conductor()));
            for (const auto& w : result.warnings()) std::cerr << "warning: " << w << '\n';
            std::cout << rls::format_tuple(result);
            return rls::ExitOk;
        }
        const auto checks = rls::verify_appendix();
        std::cout << rls::format_checks(checks);
        for (const auto& c : checks) {
            if (!c.passed) return rls::ExitMismatch;
        }
        return rls::ExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return rls::ExitUsage;
    } catch (const rls::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_usage(e.code()) ? rls::ExitUsage : rls::ExitEvaluation;
    }
}
