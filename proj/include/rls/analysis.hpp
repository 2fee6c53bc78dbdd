#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rls/tuple.hpp"

namespace rls {

// ---------------------------------------------------------------- Jordan data

/// One eigenvalue of a quasi-unipotent matrix, zeta_order^exponent, with the
/// lengths of its Jordan blocks in decreasing order.
struct EigenBlocks {
    Cyclotomic eigenvalue;
    int order = 1;
    int exponent = 0;
    std::vector<size_t> lengths;

    [[nodiscard]] size_t multiplicity() const;
};

struct JordanData {
    std::vector<EigenBlocks> eigenvalues;  // sorted by (order, exponent)

    [[nodiscard]] size_t size() const;
    /// Block lengths at `value`, empty if it is not an eigenvalue.
    [[nodiscard]] std::vector<size_t> blocks_at(const Cyclotomic& value) const;
    friend bool operator==(const JordanData& lhs, const JordanData& rhs);
};

/// 2 * lcm(conductor, 6).
int default_order_bound(int conductor);

/// Jordan structure from the rank sequences rk((A - l)^k) over all roots of
/// unity l of order dividing `order_bound` (0 picks default_order_bound).
/// Throws NotQuasiUnipotent when eigenvalue mass is left unaccounted for.
JordanData jordan_data(const Matrix& a, int order_bound = 0);

/// `[1] 2 2 1 1 1; [z] 1 1 1`, eigenvalues written in `conductor`.
std::string to_string(const JordanData& data, int conductor);

/// The same data in the usual notation when it has one: `J(3,3,1)` for a
/// unipotent matrix, `diag(1,z,...)` for a semisimple one.
std::string jordan_notation(const JordanData& data, int conductor);

// ------------------------------------------------------------------- forms

enum class Symmetry { Symmetric, Alternating, Neither };
std::string_view symmetry_name(Symmetry s) noexcept;

struct BilinearForm {
    Matrix gram;
    Symmetry symmetry = Symmetry::Neither;
    bool nondegenerate = false;
};

BilinearForm classify_form(Matrix gram);

/// Basis of {Q : g^T Q g = Q for every slot}, each element classified.
std::vector<BilinearForm> invariant_bilinear_forms(const MonodromyTuple& t);

bool is_irreducible(const MonodromyTuple& t);

enum class Representation { Plain, ExteriorCube };

/// Basis of the vectors fixed by every slot in the chosen representation.
/// ExteriorCube needs rank 7 (ShapeMismatch otherwise).
std::vector<Vector> common_fixed_space(const MonodromyTuple& t, Representation rep);

struct TrivectorForm {
    Vector omega;    // 35 coordinates in the lexicographic basis e_i^e_j^e_k
    Matrix induced;  // B(x, y) = top coefficient of (x _| w) ^ (y _| w) ^ w, a form on the dual space
    Matrix metric;   // inverse of `induced`: the symmetric form on C^7 preserved by the stabilizer
};

/// The form B_omega and, when it is nondegenerate, its inverse.
/// `metric` is left empty for a degenerate trivector.
TrivectorForm trivector_form(const Vector& omega);

/// A fixed generic trivector when the fixed space in the exterior cube is a
/// line spanned by one; nullopt otherwise. Throws NotRankSeven.
std::optional<TrivectorForm> g2_certificate(const MonodromyTuple& t);

// ---------------------------------------------------------- Lie algebras

enum class LieKind { GL, SO, SP, G2 };
std::string_view lie_kind_name(LieKind k) noexcept;
LieKind parse_lie_kind(std::string_view text);

using LieDatum = std::variant<std::monostate, BilinearForm, TrivectorForm>;

struct LieAlgebraBasis {
    LieKind kind = LieKind::GL;
    size_t n = 0;
    std::vector<Matrix> basis;
    LieDatum datum;

    [[nodiscard]] size_t dimension() const noexcept { return basis.size(); }
    /// `gl7`, `so7`, `sp2`, `g2`
    [[nodiscard]] std::string name() const;
};

/// gl_n needs no datum; so and sp need a nondegenerate symmetric resp.
/// alternating form; g2 needs a generic trivector on C^7.
/// Throws DegenerateDatum when the datum does not fit.
LieAlgebraBasis lie_algebra(LieKind kind, size_t n, const LieDatum& datum = {}, int conductor = 1);

/// Every bracket of basis elements lies in the span.
bool closed_under_bracket(const LieAlgebraBasis& g);

/// Whether g lies in the group whose Lie algebra is `algebra`.
bool in_group(const Matrix& g, const LieAlgebraBasis& algebra);

/// dim g - dim of the centralizer of `g` in it. Throws NotInGroup.
size_t centralizer_codim(const Matrix& g, const LieAlgebraBasis& algebra);
size_t center_dimension(const LieAlgebraBasis& algebra);

struct RigidityReport {
    std::vector<size_t> codims;
    size_t sum = 0;
    size_t algebra_dimension = 0;
    size_t center_dimension = 0;
    size_t target = 0;
    bool rigid = false;
    bool irreducible = true;
};

RigidityReport rigidity_check(const MonodromyTuple& t, const LieAlgebraBasis& algebra);

/// An invertible X with X t_k = u_k X for all k, if one exists.
/// Throws ShapeMismatch on differing ranks or slot counts.
std::optional<Matrix> find_intertwiner(const MonodromyTuple& t, const MonodromyTuple& u);

// ------------------------------------------------------------------ report

struct GroupSummary {
    std::string name;
    RigidityReport rigidity;
};

struct AnalysisReport {
    int conductor = 1;
    size_t rank = 0;
    std::vector<std::string> labels;
    std::vector<JordanData> jordan;
    bool irreducible = false;
    std::vector<BilinearForm> forms;
    std::optional<TrivectorForm> trivector;
    size_t exterior_fixed_dimension = 0;  // only meaningful for rank 7
    std::vector<GroupSummary> groups;
    std::vector<std::string> notes;
};

/// Runs every analysis. With an empty `kinds` list all groups whose datum is
/// available are measured; explicitly requested groups without a datum
/// throw DegenerateDatum.
AnalysisReport analyze(const MonodromyTuple& t, std::span<const LieKind> kinds = {});

std::string format_report(const AnalysisReport& report);

}  // namespace rls
