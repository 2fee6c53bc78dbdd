#include <functional>

#include "jordan_match.hpp"
#include "rls/appendix.hpp"
#include "rls/errors.hpp"
#include "rls/linalg.hpp"
#include "rls/scenario.hpp"

namespace rls {

namespace {

const std::vector<std::string> kLabels{"x1", "x2", "x3", "inf"};

/// Runs one check; a thrown error becomes a failure carrying its message.
CheckResult run_check(std::string description, const std::function<std::string()>& body) {
    CheckResult r;
    r.description = std::move(description);
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

std::string rigidity_detail(const RigidityReport& r, size_t sum, size_t target, bool rigid) {
    if (r.sum == sum && r.target == target && r.rigid == rigid) return "";
    return "sum " + std::to_string(r.sum) + " target " + std::to_string(r.target);
}

}  // namespace

std::vector<CheckResult> verify_appendix(const std::array<Matrix, 4>& fixture) {
    const auto& [h1, h2, h3, h4] = fixture;
    const int conductor = 3;
    std::vector<CheckResult> out;

    out.push_back(run_check("product relation h1 h2 h3 h4 = 1", [&] {
        return h1 * h2 * h3 * h4 == Matrix::identity(h1.rows(), conductor) ? "" : "product differs from 1";
    }));

    // The remaining checks use the tuple closed up by the computed h4, so a
    // broken stored h4 does not hide the other results.
    std::optional<MonodromyTuple> t;
    std::string tuple_error;
    try {
        t.emplace(kLabels, std::vector<Matrix>{h1, h2, h3, inverse(h1 * h2 * h3)});
    } catch (const Error& e) {
        tuple_error = e.what();
    }
    auto with_tuple = [&](std::string description, const std::function<std::string(const MonodromyTuple&)>& body) {
        out.push_back(run_check(std::move(description), [&]() -> std::string {
            if (!t) return "no tuple: " + tuple_error;
            return body(*t);
        }));
    };

    const std::pair<const char*, const char*> jordan[] = {
        {"x1", "J(2,2,1,1,1)"},
        {"x2", "J(2,2,1,1,1)"},
        {"x3", "diag(1, z, z, z, z^-1, z^-1, z^-1)"},
        {"inf", "J(3,3,1)"},
    };
    for (size_t k = 0; k < 4; ++k) {
        const auto [label, notation] = jordan[k];
        with_tuple(std::string("jordan ") + label + " " + notation, [&](const MonodromyTuple& u) {
            return detail::jordan_mismatch(jordan_data(u[k]), parse_jordan_notation(notation, conductor), conductor)
                .value_or("");
        });
    }

    with_tuple("irreducible", [](const MonodromyTuple& u) { return is_irreducible(u) ? "" : "reducible"; });

    std::optional<BilinearForm> form;
    with_tuple("symmetric nondegenerate invariant form", [&](const MonodromyTuple& u) -> std::string {
        const auto forms = invariant_bilinear_forms(u);
        if (forms.size() != 1) return std::to_string(forms.size()) + " independent forms";
        if (forms[0].symmetry != Symmetry::Symmetric || !forms[0].nondegenerate) return "form is not symmetric nondegenerate";
        form = forms[0];
        return "";
    });

    std::optional<TrivectorForm> trivector;
    with_tuple("exterior cube fixed line with generic trivector", [&](const MonodromyTuple& u) -> std::string {
        const size_t dim = common_fixed_space(u, Representation::ExteriorCube).size();
        if (dim != 1) return "fixed dimension " + std::to_string(dim);
        trivector = g2_certificate(u);
        return trivector ? "" : "fixed trivector is degenerate";
    });

    with_tuple("gl7 rigidity sum 102 target 96 not rigid", [&](const MonodromyTuple& u) {
        return rigidity_detail(rigidity_check(u, lie_algebra(LieKind::GL, 7, {}, conductor)), 102, 96, false);
    });
    with_tuple("so7 rigidity sum 42 target 42 rigid", [&](const MonodromyTuple& u) -> std::string {
        if (!form) return "no invariant form";
        return rigidity_detail(rigidity_check(u, lie_algebra(LieKind::SO, 7, *form, conductor)), 42, 42, true);
    });
    with_tuple("g2 rigidity sum 28 target 28 rigid", [&](const MonodromyTuple& u) -> std::string {
        if (!trivector) return "no generic trivector";
        return rigidity_detail(rigidity_check(u, lie_algebra(LieKind::G2, 7, *trivector, conductor)), 28, 28, true);
    });
    return out;
}

std::vector<CheckResult> verify_appendix() { return verify_appendix(appendix_fixture()); }

}  // namespace rls
