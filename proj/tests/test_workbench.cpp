#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rls/appendix.hpp"
#include "rls/errors.hpp"
#include "rls/linalg.hpp"
#include "rls/scenario.hpp"
#include "stages.hpp"

using namespace rls;
using namespace rls::testing;

namespace {

struct Position {
    size_t line;
    size_t column;
};

Position parse_error_at(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("expected a ParseError");
    return {0, 0};
}

Position pipeline_error(std::string_view text) {
    return parse_error_at([&] { parse_pipeline(text); });
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an rls::Error");
    return ErrorCode::InvariantViolation;
}

size_t operation_depth(const PipelineNode& n) {
    size_t deepest = 0;
    bool has_op_child = false;
    for (const auto& c : n.children) {
        if (c.kind == PipelineNode::Kind::Atom) continue;
        has_op_child = true;
        deepest = std::max(deepest, operation_depth(c));
    }
    return has_op_child ? deepest + 1 : 0;
}

size_t count_kind(const PipelineNode& n, PipelineNode::Kind kind) {
    size_t c = n.kind == kind ? 1 : 0;
    for (const auto& child : n.children) c += count_kind(child, kind);
    return c;
}

/// A Tensor of two MC nodes somewhere strictly inside an MC node.
bool mc_over_tensor_of_mcs(const PipelineNode& n, bool inside_mc = false) {
    using K = PipelineNode::Kind;
    if (inside_mc && n.kind == K::Tensor && n.children[0].kind == K::MC && n.children[1].kind == K::MC) return true;
    for (const auto& c : n.children) {
        if (mc_over_tensor_of_mcs(c, inside_mc || n.kind == K::MC)) return true;
    }
    return false;
}

std::string read_source_file(const std::string& relative) {
    std::ifstream in(std::string(RLS_SOURCE_DIR) + "/" + relative, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const Evaluation& theorem1() {
    static const Evaluation e = evaluate(load_scenario("theorem1").pipeline);
    return e;
}

}  // namespace

TEST_CASE("parse_pipeline reads an atom") {
    const auto p = parse_pipeline("conductor 3\natom(x1,x2,x3,inf; z,1,z,z)\n");
    CHECK(p.conductor == 3);
    CHECK(p.root.kind == PipelineNode::Kind::Atom);
    CHECK(p.root.labels == four_labels());
    CHECK(evaluate(p).result == char_g1());
    CHECK(format_expression(p.root) == "atom(x1, x2, x3, inf; z, 1, z, z)");
}

TEST_CASE("canonical form round trips") {
    for (const auto& name : scenario_names()) {
        const auto p = load_scenario(name).pipeline;
        const std::string once = format_pipeline(p);
        CHECK(format_pipeline(parse_pipeline(once)) == once);
    }
    const std::string odd = "# comment\n conductor   4 \n dual( mc( z^2+ 0 ,atom( a ,b;z ,z^-1 ) ) ) # tail\n";
    const std::string canonical = format_pipeline(parse_pipeline(odd));
    CHECK(canonical == "conductor 4\ndual(mc(-1, atom(a, b; z, -z)))\n");
    CHECK(format_pipeline(parse_pipeline(canonical)) == canonical);
}

TEST_CASE("parse errors carry positions") {
    auto at = [](std::string_view text, size_t line, size_t column) {
        const auto p = pipeline_error(text);
        CHECK(p.line == line);
        CHECK(p.column == column);
    };
    at("atom(a; 1)", 1, 1);
    at("conductor 0\natom(a; 1)", 1, 11);
    at("conductor 3\nfoo(x)", 2, 1);
    at("# header\nconductor 3\n  foo(a)", 3, 3);
    at("conductor 3\natom(x1, inf; z, 2*q)", 2, 20);
    at("conductor 3\ndual(atom(x1, inf; z, z^-1)", 2, 28);
    at("conductor 3\ntensor(atom(x1, inf; z, z^-1),\n       atom(x2, inf; z, z^-1))", 3, 8);
    at("conductor 3\ntwist(atom(a, b; z, z^-1), dual(atom(a, b; z, z^-1)))", 2, 28);
    at("conductor 3\natom(a, b; z)", 2, 1);
    at("conductor 3\natom(a; 1) atom(a; 1)", 2, 12);
    at("conductor 3\nmc(z atom(a; 1))", 2, 6);
}

TEST_CASE("lambda = 1 parses and is rejected at evaluation") {
    const auto p = parse_pipeline("conductor 3\nmc(1, atom(x1, x2, x3, inf; z, 1, z, z))");
    CHECK(p.root.kind == PipelineNode::Kind::MC);
    CHECK(code_of([&] { evaluate(p); }) == ErrorCode::BadLambda);
}

TEST_CASE("the theorem1 document has the nested shape") {
    const auto& root = load_scenario("theorem1").pipeline.root;
    CHECK(operation_depth(root) == 5);
    CHECK(count_kind(root, PipelineNode::Kind::MC) == 4);
    CHECK(count_kind(root, PipelineNode::Kind::Tensor) == 1);
    CHECK(count_kind(root, PipelineNode::Kind::Twist) == 2);
    CHECK(mc_over_tensor_of_mcs(root));
}

TEST_CASE("theorem1 evaluation and trace") {
    const auto& ev = theorem1();
    CHECK(ev.result.rank() == 7);
    CHECK(ev.result == stage_rank7());

    std::vector<size_t> ranks;
    std::vector<std::string> forms;
    for (const auto& e : ev.trace) {
        ranks.push_back(e.rank);
        forms.push_back(e.form_class);
    }
    // post-order: g1, MC(g1), g2, MC(g2), tensor, MC, twist, MC, twist
    CHECK(ranks == std::vector<size_t>{1, 2, 1, 2, 4, 5, 5, 7, 7});
    CHECK(forms == std::vector<std::string>{"none", "alternating", "none", "alternating", "symmetric", "none", "none",
                                            "none", "symmetric"});
    CHECK(ev.trace.back().depth == 0);
    CHECK(ev.trace.front().depth == 6);

    const auto h = appendix_tuple();
    for (size_t k = 0; k < 4; ++k) CHECK(ev.trace.back().jordan[k] == jordan_data(h[k]));

    const auto x = find_intertwiner(ev.result, h);
    REQUIRE(x.has_value());
    CHECK(intertwines(*x, ev.result, h));
}

TEST_CASE("trace text is stable") {
    const std::string text = format_trace(theorem1().trace, 3);
    CHECK(text.find("mc(-z - 1) -> rank 5, form none") != std::string::npos);
    const std::string last = "twist(1, 1, -z - 1, z) -> rank 7, form symmetric, jordan J(2,2,1,1,1) | J(2,2,1,1,1) | "
                             "diag(1,z,z,z,-z - 1,-z - 1,-z - 1) | J(3,3,1)\n";
    CHECK(text.size() > last.size());
    CHECK(text.substr(text.size() - last.size()) == last);
}

TEST_CASE("shipped documents match the embedded copies") {
    for (const auto& name : scenario_names()) {
        CHECK(scenario_source(name) == read_source_file("scenarios/" + name + ".pipeline"));
    }
    CHECK(code_of([] { scenario_source("theorem2"); }) == ErrorCode::UnknownScenario);
}

TEST_CASE("parse_jordan_notation") {
    using P = std::vector<std::pair<Cyclotomic, size_t>>;
    CHECK(parse_jordan_notation("J(3,3,1)", 3) == P{{1, 3}, {1, 3}, {1, 1}});
    const Cyclotomic z = zeta3();
    CHECK(parse_jordan_notation(" diag(1, z, (z)^-1) ", 3) == P{{1, 1}, {z, 1}, {z.inverse(), 1}});
    CHECK(parse_jordan_notation("[1] 2 1; [z] 1", 3) == P{{1, 2}, {1, 1}, {z, 1}});
    CHECK(parse_error_at([] { parse_jordan_notation("J(2,0)", 3); }).column == 5);
    CHECK(parse_error_at([] { parse_jordan_notation("diag(1, y)", 3); }).column == 9);
    CHECK(parse_error_at([] { parse_jordan_notation("K(1)", 3); }).column == 1);
}

TEST_CASE("scenario documents") {
    const std::string doc = "conductor 3\nexpect rank 1\nfoo()";
    CHECK(parse_error_at([&] { parse_scenario("doc", doc); }).line == 3);
    CHECK(parse_error_at([] { parse_scenario("doc", "conductor 3\natom(a; 1)\nexpect colour red"); }).line == 3);
    CHECK(parse_error_at([] { parse_scenario("doc", "conductor 3\natom(a; 1)\nexpect group gl1 sum 0"); }).line == 3);
    CHECK(parse_error_at([] { parse_scenario("doc", "conductor 3\natom(a; 1)\nexpect jordan a J(x)"); }).line == 3);

    const auto sc = parse_scenario("doc", "conductor 3\natom(a, b; z, z^-1)\nexpect rank 1\nexpect jordan a  diag( z )\n");
    REQUIRE(sc.expectations.size() == 2);
    CHECK(sc.expectations[1].words == std::vector<std::string>{"jordan", "a", "diag( z )"});
    const auto run = run_scenario(sc);
    CHECK(run.exit_code == ExitOk);
    CHECK(run.report.find("appendix-intertwiner not applicable") != std::string::npos);
}

TEST_CASE("exit codes") {
    const auto mismatch = run_scenario(parse_scenario("doc", "conductor 3\natom(a, b; z, z^-1)\nexpect rank 2\n"));
    CHECK(mismatch.exit_code == ExitMismatch);
    CHECK(mismatch.report.find("fail expect rank 2 (found 1)") != std::string::npos);
    CHECK(mismatch.report.find("status mismatch") != std::string::npos);

    const auto broken = run_scenario(parse_scenario("doc", "conductor 3\nmc(1, atom(a, b; z, z^-1))\n"));
    CHECK(broken.exit_code == ExitEvaluation);
    CHECK(broken.report.find("BadLambda") != std::string::npos);

    const auto not_one = run_scenario(parse_scenario("doc", "conductor 3\natom(a, b; z, z)\n"));
    CHECK(not_one.exit_code == ExitEvaluation);
}

TEST_CASE("scenario parameters") {
    CHECK(code_of([] { load_scenario("nope"); }) == ErrorCode::UnknownScenario);
    CHECK(code_of([] { load_scenario("theorem1", {{"q", 4}}); }) == ErrorCode::InvalidParameter);
    CHECK(code_of([] { load_scenario("general-q", {{"q", 1}}); }) == ErrorCode::InvalidParameter);
    CHECK(code_of([] { load_scenario("general-q", {{"p", 5}}); }) == ErrorCode::InvalidParameter);
    CHECK(load_scenario("general-q").params.at("q") == 4);
    CHECK(load_scenario("general-q", {{"q", 4}}).pipeline.conductor == 12);
    CHECK(load_scenario("general-q", {{"q", 5}}).pipeline.conductor == 15);
    CHECK(load_scenario("general-q", {{"q", 9}}).pipeline.conductor == 9);
    CHECK_FALSE(load_scenario("general-q", {{"q", 4}}).experimental);
    CHECK(load_scenario("general-q", {{"q", 2}}).experimental);
    CHECK(load_scenario("general-q", {{"q", 3}}).experimental);
    CHECK(load_scenario("theorem1").pipeline.conductor == 3);
    CHECK(load_scenario("zeta6").pipeline.conductor == 6);
}

TEST_CASE("run theorem1") {
    const auto run = run_scenario("theorem1");
    CHECK(run.exit_code == ExitOk);
    CHECK(run.checks.size() == 13);
    CHECK(run.report.find("verdict G2-rigid\n") != std::string::npos);
    CHECK(run.report.find("appendix-intertwiner found\n") != std::string::npos);
    CHECK(run.report.find("status ok\n") != std::string::npos);
    CHECK(run_scenario("theorem1").report == run.report);
}

TEST_CASE("run zeta6") {
    const auto sc = load_scenario("zeta6");
    const auto ev = evaluate(sc.pipeline);
    const auto& h2 = ev.result;
    const auto h = appendix_tuple();
    REQUIRE(h2.rank() == 7);
    for (size_t k = 0; k < 4; ++k) CHECK(jordan_data(h2[k]) == jordan_data(h[k]));
    CHECK(common_fixed_space(h2, Representation::ExteriorCube).empty());
    CHECK_FALSE(g2_certificate(h2).has_value());
    const auto forms = invariant_bilinear_forms(h2);
    REQUIRE(forms.size() == 1);
    const auto so7 = rigidity_check(h2, lie_algebra(LieKind::SO, 7, forms[0], 6));
    CHECK(so7.sum == 42);
    CHECK(so7.rigid);
    CHECK_FALSE(find_intertwiner(h, h2).has_value());

    const auto run = run_scenario(sc);
    CHECK(run.exit_code == ExitOk);
    CHECK(run.report.find("appendix-intertwiner none\n") != std::string::npos);
    CHECK(run.report.find("verdict SO7-rigid\n") != std::string::npos);
}

TEST_CASE("run general-q at q = 4") {
    const auto sc = load_scenario("general-q", {{"q", 4}});
    const auto ev = evaluate(sc.pipeline);
    REQUIRE(ev.result.rank() == 7);
    const Cyclotomic zq = Cyclotomic::zeta(4);
    const auto inf = jordan_data(ev.result[3]);
    CHECK(inf.blocks_at(zq) == std::vector<size_t>{1, 1});
    CHECK(inf.blocks_at(1) == std::vector<size_t>{1, 1, 1});
    CHECK(inf.blocks_at(zq.inverse()) == std::vector<size_t>{1, 1});

    const auto run = run_scenario(sc);
    CHECK(run.exit_code == ExitOk);
    CHECK(run.report.find("parameter q = 4\n") != std::string::npos);
    CHECK(run.report.find("experimental") == std::string::npos);
}

TEST_CASE("experimental q values are reported") {
    const auto q3 = run_scenario("general-q", {{"q", 3}});
    CHECK(q3.exit_code == ExitEvaluation);
    CHECK(q3.report.find("experimental") != std::string::npos);
    const auto q2 = run_scenario("general-q", {{"q", 2}});
    CHECK(q2.report.find("experimental") != std::string::npos);
    CHECK(q2.exit_code == ExitMismatch);
}

TEST_CASE("verify_appendix") {
    const auto checks = verify_appendix();
    REQUIRE(checks.size() == 11);
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.description);

    auto perturbed = appendix_fixture();
    perturbed[1].set(2, 3, perturbed[1](2, 3) + Cyclotomic(1));
    const auto p = verify_appendix(perturbed);
    CHECK_FALSE(p[0].passed);

    auto no_h3 = appendix_fixture();
    no_h3[2] = Matrix::identity(7, 3);
    const auto q = verify_appendix(no_h3);
    CHECK(q[1].passed);
    CHECK(q[2].passed);
    CHECK_FALSE(q[3].passed);
    CHECK(q[3].description.find("x3") != std::string::npos);

    CHECK(format_checks(checks).substr(0, 38) == "pass product relation h1 h2 h3 h4 = 1\n");
}
