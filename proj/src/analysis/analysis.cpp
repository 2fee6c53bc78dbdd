#include "rls/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rls/errors.hpp"
#include "rls/linalg.hpp"

namespace rls {

namespace {

Cyclotomic one_in(int conductor) { return Cyclotomic(Rational(1), conductor); }
Cyclotomic zero_in(int conductor) { return Cyclotomic(Rational(0), conductor); }

/// Kernel of the linear map whose images of the unknown basis vectors are
/// `images` (all of the same length).
std::vector<Vector> solve_homogeneous(const std::vector<Vector>& images, size_t equations, int conductor) {
    if (images.empty()) return {};
    return kernel_basis(Matrix::from_columns(images, equations, conductor));
}

Matrix unit(size_t n, size_t a, size_t b, int conductor) {
    Matrix e(n, n, conductor);
    e.set(a, b, one_in(conductor));
    return e;
}

Matrix bracket(const Matrix& x, const Matrix& y) { return x * y - y * x; }

/// Sorts `indices` in place, returning the sign of the permutation or 0 if
/// an index repeats.
int sort_with_sign(std::vector<size_t>& indices) {
    int sign = 1;
    for (size_t i = 1; i < indices.size(); ++i) {
        for (size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j]) return 0;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    return sign;
}

using SparseForm = std::map<std::vector<size_t>, Cyclotomic>;

void accumulate(SparseForm& form, std::vector<size_t> key, const Cyclotomic& value) {
    const int sign = sort_with_sign(key);
    if (sign == 0 || value.is_zero()) return;
    auto [it, inserted] = form.try_emplace(std::move(key), sign > 0 ? value : -value);
    if (!inserted) it->second += sign > 0 ? value : -value;
}

SparseForm wedge(const SparseForm& lhs, const SparseForm& rhs) {
    SparseForm out;
    for (const auto& [a, x] : lhs) {
        for (const auto& [b, y] : rhs) {
            std::vector<size_t> key = a;
            key.insert(key.end(), b.begin(), b.end());
            accumulate(out, std::move(key), x * y);
        }
    }
    return out;
}

SparseForm trivector_terms(const Vector& omega) {
    SparseForm out;
    const auto basis = subsets(7, 3);
    for (size_t s = 0; s < basis.size(); ++s) {
        if (!omega[s].is_zero()) out.emplace(basis[s], omega[s]);
    }
    return out;
}

/// e_a^* contracted into omega.
SparseForm contract(const SparseForm& omega, size_t a) {
    SparseForm out;
    for (const auto& [key, value] : omega) {
        for (size_t p = 0; p < key.size(); ++p) {
            if (key[p] != a) continue;
            std::vector<size_t> rest;
            for (size_t q = 0; q < key.size(); ++q) {
                if (q != p) rest.push_back(key[q]);
            }
            accumulate(out, std::move(rest), p % 2 == 0 ? value : -value);
        }
    }
    return out;
}

/// The derived action of X on the exterior cube, applied to omega.
Vector derived_cube_action(const Matrix& x, const Vector& omega) {
    const auto basis = subsets(7, 3);
    std::map<std::vector<size_t>, size_t> index;
    for (size_t s = 0; s < basis.size(); ++s) index.emplace(basis[s], s);
    const int cond = static_cast<int>(lcm_conductor(x.conductor(), common_conductor(omega)));
    Vector out(basis.size(), zero_in(cond));
    for (size_t s = 0; s < basis.size(); ++s) {
        if (omega[s].is_zero()) continue;
        for (size_t p = 0; p < 3; ++p) {
            for (size_t a = 0; a < 7; ++a) {
                const Cyclotomic& coeff = x(a, basis[s][p]);
                if (coeff.is_zero()) continue;
                std::vector<size_t> key = basis[s];
                key[p] = a;
                const int sign = sort_with_sign(key);
                if (sign == 0) continue;
                Cyclotomic term = coeff * omega[s];
                out[index.at(key)] += sign > 0 ? term : -term;
            }
        }
    }
    return out;
}

const BilinearForm* form_datum(const LieDatum& d) { return std::get_if<BilinearForm>(&d); }
const TrivectorForm* trivector_datum(const LieDatum& d) { return std::get_if<TrivectorForm>(&d); }

std::string join(const std::vector<size_t>& values, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string eigen_string(const EigenBlocks& e, int conductor) {
    if (conductor % e.order == 0) return to_string(e.eigenvalue.lifted(conductor));
    return "zeta" + std::to_string(e.order) + "^" + std::to_string(e.exponent);
}

}  // namespace

// ---------------------------------------------------------------- Jordan data

size_t EigenBlocks::multiplicity() const { return std::accumulate(lengths.begin(), lengths.end(), size_t{0}); }

size_t JordanData::size() const {
    size_t n = 0;
    for (const auto& e : eigenvalues) n += e.multiplicity();
    return n;
}

std::vector<size_t> JordanData::blocks_at(const Cyclotomic& value) const {
    for (const auto& e : eigenvalues) {
        if (e.eigenvalue == value) return e.lengths;
    }
    return {};
}

bool operator==(const JordanData& lhs, const JordanData& rhs) {
    if (lhs.eigenvalues.size() != rhs.eigenvalues.size()) return false;
    for (size_t i = 0; i < lhs.eigenvalues.size(); ++i) {
        const auto& a = lhs.eigenvalues[i];
        const auto& b = rhs.eigenvalues[i];
        if (a.order != b.order || a.exponent != b.exponent || a.lengths != b.lengths) return false;
    }
    return true;
}

int default_order_bound(int conductor) { return 2 * static_cast<int>(lcm_conductor(conductor, 6)); }

JordanData jordan_data(const Matrix& a, int order_bound) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "jordan_data needs a square matrix");
    const int bound = order_bound > 0 ? order_bound : default_order_bound(a.conductor());
    const int cond = static_cast<int>(lcm_conductor(a.conductor(), bound));
    const size_t n = a.rows();
    const Matrix m = a.lifted(cond);
    const Polynomial p = char_poly(m);
    const Matrix id = Matrix::identity(n, cond);

    JordanData out;
    size_t found = 0;
    for (int e = 0; e < bound; ++e) {
        const Cyclotomic lam = Cyclotomic::zeta(cond, static_cast<long>(e) * (cond / bound));
        const auto mult = static_cast<size_t>(p.root_multiplicity(lam));
        if (mult == 0) continue;
        const Matrix shifted = m - lam * id;
        // ranks[k] = rk((A - lam)^k); blocks of length >= k number ranks[k-1] - ranks[k].
        std::vector<size_t> ranks{n};
        Matrix power = shifted;
        while (ranks.back() > n - mult) {
            const size_t r = rank(power);
            if (r == ranks.back()) throw Error(ErrorCode::InvariantViolation, "rank sequence stalled");
            ranks.push_back(r);
            power = power * shifted;
        }
        std::vector<size_t> at_least;
        for (size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
        at_least.push_back(0);
        EigenBlocks blocks;
        const int g = std::gcd(e, bound);
        blocks.order = bound / g;
        blocks.exponent = e / g;
        blocks.eigenvalue =
            Cyclotomic::zeta(blocks.order, blocks.exponent)
                .lifted(static_cast<int>(lcm_conductor(a.conductor(), blocks.order)));
        for (size_t k = at_least.size() - 1; k-- > 0;) {
            for (size_t c = at_least[k + 1]; c < at_least[k]; ++c) blocks.lengths.push_back(k + 1);
        }
        found += blocks.multiplicity();
        out.eigenvalues.push_back(std::move(blocks));
    }
    if (found != n) {
        throw Error(ErrorCode::NotQuasiUnipotent,
                    "only " + std::to_string(found) + " of " + std::to_string(n) +
                        " eigenvalues are roots of unity of order dividing " + std::to_string(bound));
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](const EigenBlocks& x, const EigenBlocks& y) {
        return std::pair(x.order, x.exponent) < std::pair(y.order, y.exponent);
    });
    return out;
}

std::string to_string(const JordanData& data, int conductor) {
    std::string out;
    for (const auto& e : data.eigenvalues) {
        if (!out.empty()) out += "; ";
        out += "[" + eigen_string(e, conductor) + "] " + join(e.lengths, " ");
    }
    return out;
}

std::string jordan_notation(const JordanData& data, int conductor) {
    if (data.eigenvalues.size() == 1 && data.eigenvalues.front().order == 1) {
        return "J(" + join(data.eigenvalues.front().lengths, ",") + ")";
    }
    const bool semisimple = std::all_of(data.eigenvalues.begin(), data.eigenvalues.end(), [](const EigenBlocks& e) {
        return std::all_of(e.lengths.begin(), e.lengths.end(), [](size_t l) { return l == 1; });
    });
    if (!semisimple) return to_string(data, conductor);
    std::string out = "diag(";
    bool first = true;
    for (const auto& e : data.eigenvalues) {
        for (size_t i = 0; i < e.lengths.size(); ++i) {
            if (!first) out += ",";
            out += eigen_string(e, conductor);
            first = false;
        }
    }
    return out + ")";
}

// ------------------------------------------------------------------- forms

std::string_view symmetry_name(Symmetry s) noexcept {
    switch (s) {
        case Symmetry::Symmetric: return "symmetric";
        case Symmetry::Alternating: return "alternating";
        case Symmetry::Neither: return "neither";
    }
    return "neither";
}

BilinearForm classify_form(Matrix gram) {
    BilinearForm f;
    const Matrix t = gram.transpose();
    if (t == gram) {
        f.symmetry = Symmetry::Symmetric;
    } else if (t == Cyclotomic(-1) * gram) {
        f.symmetry = Symmetry::Alternating;
    }
    f.nondegenerate = gram.is_square() && !determinant(gram).is_zero();
    f.gram = std::move(gram);
    return f;
}

std::vector<BilinearForm> invariant_bilinear_forms(const MonodromyTuple& t) {
    const size_t n = t.rank();
    const int cond = t.conductor();
    const size_t eqs = n * n * t.slot_count();
    std::vector<Vector> images;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            // g^T E_ij g - E_ij has entry (a, b) = g(i, a) g(j, b) - [a = i][b = j].
            Vector col;
            col.reserve(eqs);
            for (const auto& g : t.matrices()) {
                for (size_t a = 0; a < n; ++a) {
                    for (size_t b = 0; b < n; ++b) {
                        Cyclotomic v = g(i, a) * g(j, b);
                        if (a == i && b == j) v -= one_in(cond);
                        col.push_back(std::move(v));
                    }
                }
            }
            images.push_back(std::move(col));
        }
    }
    std::vector<BilinearForm> out;
    for (const auto& v : solve_homogeneous(images, eqs, cond)) out.push_back(classify_form(unflatten(v, n, n)));
    return out;
}

bool is_irreducible(const MonodromyTuple& t) {
    return generated_algebra_dimension(t.matrices()) == t.rank() * t.rank();
}

std::vector<Vector> common_fixed_space(const MonodromyTuple& t, Representation rep) {
    if (rep == Representation::ExteriorCube && t.rank() != 7) {
        throw Error(ErrorCode::ShapeMismatch, "the exterior cube representation needs rank 7");
    }
    std::vector<Matrix> rows;
    for (const auto& g : t.matrices()) {
        Matrix r = rep == Representation::Plain ? g : exterior_cube(g);
        rows.push_back(r - Matrix::identity(r.rows(), r.conductor()));
    }
    return kernel_basis(stack(rows));
}

TrivectorForm trivector_form(const Vector& omega) {
    if (omega.size() != 35) throw Error(ErrorCode::ShapeMismatch, "a trivector on C^7 has 35 coordinates");
    const int cond = common_conductor(omega);
    const SparseForm w = trivector_terms(omega);
    std::vector<SparseForm> contracted;
    for (size_t a = 0; a < 7; ++a) contracted.push_back(contract(w, a));
    const std::vector<size_t> top{0, 1, 2, 3, 4, 5, 6};

    TrivectorForm out;
    out.omega = omega;
    out.induced = Matrix(7, 7, cond);
    for (size_t a = 0; a < 7; ++a) {
        for (size_t b = a; b < 7; ++b) {
            const SparseForm full = wedge(wedge(contracted[a], contracted[b]), w);
            auto it = full.find(top);
            if (it == full.end()) continue;
            out.induced.set(a, b, it->second);
            out.induced.set(b, a, it->second);
        }
    }
    if (!determinant(out.induced).is_zero()) out.metric = inverse(out.induced);
    return out;
}

std::optional<TrivectorForm> g2_certificate(const MonodromyTuple& t) {
    if (t.rank() != 7) throw Error(ErrorCode::NotRankSeven, "g2_certificate needs a rank-7 tuple");
    const auto fixed = common_fixed_space(t, Representation::ExteriorCube);
    if (fixed.size() != 1) return std::nullopt;
    TrivectorForm form = trivector_form(fixed.front());
    if (form.metric.rows() == 0) return std::nullopt;
    return form;
}

// ---------------------------------------------------------- Lie algebras

std::string_view lie_kind_name(LieKind k) noexcept {
    switch (k) {
        case LieKind::GL: return "gl";
        case LieKind::SO: return "so";
        case LieKind::SP: return "sp";
        case LieKind::G2: return "g2";
    }
    return "gl";
}

LieKind parse_lie_kind(std::string_view text) {
    for (LieKind k : {LieKind::GL, LieKind::SO, LieKind::SP, LieKind::G2}) {
        if (text == lie_kind_name(k)) return k;
    }
    throw Error(ErrorCode::InvalidParameter, "unknown group kind '" + std::string(text) + "'");
}

std::string LieAlgebraBasis::name() const {
    if (kind == LieKind::G2) return "g2";
    return std::string(lie_kind_name(kind)) + std::to_string(n);
}

LieAlgebraBasis lie_algebra(LieKind kind, size_t n, const LieDatum& datum, int conductor) {
    LieAlgebraBasis g;
    g.kind = kind;
    g.n = n;
    g.datum = datum;
    if (kind == LieKind::GL) {
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b) g.basis.push_back(unit(n, a, b, conductor));
        }
        return g;
    }

    const Matrix* q = nullptr;
    const TrivectorForm* w = nullptr;
    if (kind == LieKind::G2) {
        w = trivector_datum(datum);
        if (w == nullptr || n != 7 || w->metric.rows() != 7) {
            throw Error(ErrorCode::DegenerateDatum, "g2 needs a generic trivector on C^7");
        }
        q = &w->metric;
    } else {
        const BilinearForm* f = form_datum(datum);
        const Symmetry want = kind == LieKind::SO ? Symmetry::Symmetric : Symmetry::Alternating;
        if (f == nullptr || f->symmetry != want || !f->nondegenerate || f->gram.rows() != n) {
            throw Error(ErrorCode::DegenerateDatum, std::string(lie_kind_name(kind)) + " needs a nondegenerate " +
                                                        std::string(symmetry_name(want)) + " form of size " +
                                                        std::to_string(n));
        }
        q = &f->gram;
    }

    const int cond = static_cast<int>(lcm_conductor(
        conductor, w ? lcm_conductor(q->conductor(), common_conductor(w->omega)) : q->conductor()));
    const Matrix qq = q->lifted(cond);
    const size_t eqs = n * n + (w ? 35 : 0);
    std::vector<Vector> images;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            const Matrix e = unit(n, a, b, cond);
            Vector col = flatten(e.transpose() * qq + qq * e);
            if (w) {
                Vector d = derived_cube_action(e, w->omega);
                col.insert(col.end(), d.begin(), d.end());
            }
            images.push_back(lift_all(std::move(col), cond));
        }
    }
    for (const auto& v : solve_homogeneous(images, eqs, cond)) g.basis.push_back(unflatten(v, n, n));
    return g;
}

bool closed_under_bracket(const LieAlgebraBasis& g) {
    SpanBuilder span(g.n * g.n);
    for (const auto& x : g.basis) span.add(flatten(x));
    for (size_t i = 0; i < g.basis.size(); ++i) {
        for (size_t j = i + 1; j < g.basis.size(); ++j) {
            if (!span.contains(flatten(bracket(g.basis[i], g.basis[j])))) return false;
        }
    }
    return true;
}

bool in_group(const Matrix& g, const LieAlgebraBasis& algebra) {
    if (!g.is_square() || g.rows() != algebra.n) return false;
    if (determinant(g).is_zero()) return false;
    switch (algebra.kind) {
        case LieKind::GL: return true;
        case LieKind::SO:
        case LieKind::SP: {
            const Matrix& q = form_datum(algebra.datum)->gram;
            return g.transpose() * q * g == q;
        }
        case LieKind::G2: {
            const Vector& w = trivector_datum(algebra.datum)->omega;
            const Vector image = exterior_cube(g).apply(w);
            for (size_t i = 0; i < w.size(); ++i) {
                if (!(image[i] == w[i])) return false;
            }
            return true;
        }
    }
    return false;
}

size_t centralizer_codim(const Matrix& g, const LieAlgebraBasis& algebra) {
    if (!in_group(g, algebra)) {
        throw Error(ErrorCode::NotInGroup, "matrix does not preserve the structure of " + algebra.name());
    }
    if (algebra.basis.empty()) return 0;
    // The map X -> gX - Xg restricted to the algebra; its rank is the codimension.
    std::vector<Vector> images;
    int cond = g.conductor();
    for (const auto& x : algebra.basis) {
        Vector v = flatten(g * x - x * g);
        cond = static_cast<int>(lcm_conductor(cond, common_conductor(v)));
        images.push_back(std::move(v));
    }
    for (auto& v : images) v = lift_all(std::move(v), cond);
    return rank(Matrix::from_columns(images, algebra.n * algebra.n, cond));
}

size_t center_dimension(const LieAlgebraBasis& algebra) {
    const size_t d = algebra.dimension();
    if (d == 0) return 0;
    const int cond = algebra.basis.front().conductor();
    // Coefficient vectors (over the basis) of the elements still central so far.
    std::vector<Vector> current;
    for (size_t i = 0; i < d; ++i) {
        Vector e(d, zero_in(cond));
        e[i] = one_in(cond);
        current.push_back(std::move(e));
    }
    for (const auto& y : algebra.basis) {
        if (current.empty()) break;
        std::vector<Matrix> elements;
        std::vector<Vector> images;
        for (const auto& c : current) {
            Matrix x(algebra.n, algebra.n, cond);
            for (size_t i = 0; i < d; ++i) {
                if (!c[i].is_zero()) x += c[i] * algebra.basis[i];
            }
            images.push_back(lift_all(flatten(bracket(x, y)), cond));
        }
        std::vector<Vector> next;
        for (const auto& k : solve_homogeneous(images, algebra.n * algebra.n, cond)) {
            Vector c(d, zero_in(cond));
            for (size_t t = 0; t < current.size(); ++t) {
                if (k[t].is_zero()) continue;
                for (size_t i = 0; i < d; ++i) c[i].add_product(k[t], current[t][i]);
            }
            next.push_back(std::move(c));
        }
        current = std::move(next);
    }
    return current.size();
}

RigidityReport rigidity_check(const MonodromyTuple& t, const LieAlgebraBasis& algebra) {
    RigidityReport r;
    r.irreducible = is_irreducible(t);
    for (const auto& g : t.matrices()) {
        r.codims.push_back(centralizer_codim(g, algebra));
        r.sum += r.codims.back();
    }
    r.algebra_dimension = algebra.dimension();
    r.center_dimension = center_dimension(algebra);
    r.target = 2 * (r.algebra_dimension - r.center_dimension);
    r.rigid = r.sum == r.target;
    return r;
}

std::optional<Matrix> find_intertwiner(const MonodromyTuple& t, const MonodromyTuple& u) {
    if (t.rank() != u.rank() || t.slot_count() != u.slot_count()) {
        throw Error(ErrorCode::ShapeMismatch, "intertwiners need tuples of equal rank and length");
    }
    const int cond = static_cast<int>(lcm_conductor(t.conductor(), u.conductor()));
    const MonodromyTuple tt = t.lifted(cond);
    const MonodromyTuple uu = u.lifted(cond);
    const size_t n = t.rank();
    const size_t eqs = n * n * t.slot_count();
    std::vector<Vector> images;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            // E_ab T - U E_ab: entry (i, j) = [i = a] T(b, j) - U(i, a) [b = j].
            Vector col;
            col.reserve(eqs);
            for (size_t k = 0; k < t.slot_count(); ++k) {
                for (size_t i = 0; i < n; ++i) {
                    for (size_t j = 0; j < n; ++j) {
                        Cyclotomic v = i == a ? tt[k](b, j) : zero_in(cond);
                        if (b == j) v -= uu[k](i, a);
                        col.push_back(std::move(v));
                    }
                }
            }
            images.push_back(std::move(col));
        }
    }
    std::vector<Vector> solutions = solve_homogeneous(images, eqs, cond);
    if (solutions.empty()) return std::nullopt;
    auto first_nonzero = [](const Vector& v) {
        return static_cast<size_t>(std::find_if(v.begin(), v.end(), [](const Cyclotomic& c) { return !c.is_zero(); }) -
                                   v.begin());
    };
    std::stable_sort(solutions.begin(), solutions.end(),
                     [&](const Vector& x, const Vector& y) { return first_nonzero(x) < first_nonzero(y); });
    for (const auto& s : solutions) {
        Matrix x = unflatten(s, n, n);
        if (!determinant(x).is_zero()) return x;
    }
    if (is_irreducible(t)) {
        throw Error(ErrorCode::InvariantViolation, "a nonzero intertwiner of an irreducible tuple is singular");
    }
    // Reducible inputs: try one generic-looking combination before giving up.
    Vector combo(n * n, zero_in(cond));
    for (size_t s = 0; s < solutions.size(); ++s) {
        const Cyclotomic weight(static_cast<long>(s + 1));
        for (size_t i = 0; i < combo.size(); ++i) combo[i].add_product(weight.lifted(cond), solutions[s][i]);
    }
    Matrix x = unflatten(combo, n, n);
    if (!determinant(x).is_zero()) return x;
    return std::nullopt;
}

// ------------------------------------------------------------------ report

AnalysisReport analyze(const MonodromyTuple& t, std::span<const LieKind> kinds) {
    AnalysisReport r;
    r.conductor = t.conductor();
    r.rank = t.rank();
    r.labels = t.labels();
    for (const auto& g : t.matrices()) r.jordan.push_back(jordan_data(g));
    r.irreducible = is_irreducible(t);
    r.forms = invariant_bilinear_forms(t);
    if (t.rank() == 7) {
        r.exterior_fixed_dimension = common_fixed_space(t, Representation::ExteriorCube).size();
        r.trivector = g2_certificate(t);
    }

    const bool automatic = kinds.empty();
    std::vector<LieKind> wanted(kinds.begin(), kinds.end());
    if (automatic) wanted = {LieKind::GL, LieKind::SO, LieKind::SP, LieKind::G2};
    for (LieKind kind : wanted) {
        LieDatum datum;
        bool available = true;
        if (kind == LieKind::SO || kind == LieKind::SP) {
            const Symmetry want = kind == LieKind::SO ? Symmetry::Symmetric : Symmetry::Alternating;
            available = r.forms.size() == 1 && r.forms.front().symmetry == want && r.forms.front().nondegenerate;
            if (available) datum = r.forms.front();
        } else if (kind == LieKind::G2) {
            available = r.trivector.has_value();
            if (available) datum = *r.trivector;
        }
        if (!available) {
            if (!automatic) {
                throw Error(ErrorCode::DegenerateDatum,
                            "no invariant datum for " + std::string(lie_kind_name(kind)) + " on this tuple");
            }
            continue;
        }
        const LieAlgebraBasis algebra = lie_algebra(kind, t.rank(), datum, t.conductor());
        r.groups.push_back({algebra.name(), rigidity_check(t, algebra)});
    }
    if (!r.irreducible) r.notes.push_back("tuple is reducible; rigidity counts are reported but not meaningful");
    for (const auto& w : t.warnings()) r.notes.push_back(w);
    return r;
}

std::string format_report(const AnalysisReport& r) {
    std::ostringstream os;
    os << "conductor " << r.conductor << '\n';
    os << "rank " << r.rank << '\n';
    os << "slots " << r.labels.size() << '\n';
    for (size_t k = 0; k < r.labels.size(); ++k) {
        os << "jordan " << r.labels[k] << ' ' << jordan_notation(r.jordan[k], r.conductor) << '\n';
    }
    os << "irreducible " << (r.irreducible ? "yes" : "no") << '\n';
    os << "invariant-forms " << r.forms.size() << '\n';
    for (const auto& f : r.forms) {
        os << "form " << symmetry_name(f.symmetry) << ' ' << (f.nondegenerate ? "nondegenerate" : "degenerate")
           << '\n';
        for (size_t i = 0; i < f.gram.rows(); ++i) {
            os << "  ";
            for (size_t j = 0; j < f.gram.cols(); ++j) os << (j ? ", " : "") << to_string(f.gram(i, j));
            os << '\n';
        }
    }
    if (r.rank == 7) {
        os << "exterior-cube-fixed " << r.exterior_fixed_dimension << '\n';
        if (r.trivector) {
            os << "g2-certificate yes\n";
            const auto basis = subsets(7, 3);
            for (size_t s = 0; s < basis.size(); ++s) {
                if (r.trivector->omega[s].is_zero()) continue;
                os << "  e" << basis[s][0] + 1 << basis[s][1] + 1 << basis[s][2] + 1 << " = "
                   << to_string(r.trivector->omega[s]) << '\n';
            }
        } else {
            os << "g2-certificate no\n";
        }
    }
    for (const auto& g : r.groups) {
        const auto& q = g.rigidity;
        os << "group " << g.name << " dimension " << q.algebra_dimension << " center " << q.center_dimension
           << " codims " << join(q.codims, " ") << " sum " << q.sum << " target " << q.target << " rigid "
           << (q.rigid ? "yes" : "no") << '\n';
    }
    for (const auto& n : r.notes) os << "note " << n << '\n';
    return os.str();
}

}  // namespace rls
