#include "rls/convolution.hpp"

#include "rls/errors.hpp"
#include "rls/linalg.hpp"

namespace rls {

ConvolutionWorkspace convolution_workspace(const MonodromyTuple& t, const Cyclotomic& lambda) {
    if (lambda.is_zero() || lambda.is_one()) throw Error(ErrorCode::BadLambda, "lambda must differ from 0 and 1");
    const int cond = static_cast<int>(lcm_conductor(t.conductor(), lambda.conductor()));
    const Cyclotomic lam = lambda.lifted(cond);
    const size_t n = t.rank();
    const size_t m = t.slot_count() - 1;
    const size_t dim = m * n;
    if (m == 0) throw Error(ErrorCode::DegenerateQuotient, "no finite slots to convolve");

    const Matrix id = Matrix::identity(n, cond);
    std::vector<Matrix> shifted;  // A_k - 1
    for (size_t k = 0; k < m; ++k) shifted.push_back(t[k].lifted(cond) - id);

    ConvolutionWorkspace ws;
    ws.lambda = lam;
    // Block rows of B_k - 1 stacked into one dim x dim matrix: L is its kernel.
    Matrix fixed_equations(dim, dim, cond);
    for (size_t k = 0; k < m; ++k) {
        Matrix b = Matrix::identity(dim, cond);
        for (size_t j = 0; j < m; ++j) {
            Matrix block = j < k ? lam * shifted[j] : j == k ? lam * t[k].lifted(cond) : shifted[j];
            for (size_t r = 0; r < n; ++r) {
                for (size_t c = 0; c < n; ++c) {
                    b.set(k * n + r, j * n + c, block(r, c));
                    Cyclotomic eq = block(r, c);
                    if (j == k && r == c) eq -= Cyclotomic(Rational(1), cond);
                    fixed_equations.set(k * n + r, j * n + c, eq);
                }
            }
        }
        ws.blocks.push_back(std::move(b));
    }

    for (size_t k = 0; k < m; ++k) {
        for (const auto& v : kernel_basis(shifted[k])) {
            Vector embedded(dim, Cyclotomic(Rational(0), cond));
            for (size_t i = 0; i < n; ++i) embedded[k * n + i] = v[i];
            ws.kernel_part.push_back(std::move(embedded));
        }
    }
    ws.fixed_part = kernel_basis(fixed_equations);

    std::vector<Vector> sum = ws.kernel_part;
    sum.insert(sum.end(), ws.fixed_part.begin(), ws.fixed_part.end());
    SpanBuilder span(dim);
    for (const auto& v : sum) span.add(v);
    if (span.dimension() != sum.size()) {
        throw Error(ErrorCode::InvariantViolation, "K and L intersect nontrivially; the quotient is not defined here");
    }
    ws.complement = complete_basis(sum, dim);
    return ws;
}

MonodromyTuple middle_convolution(const MonodromyTuple& t, const Cyclotomic& lambda) {
    ConvolutionWorkspace ws = convolution_workspace(t, lambda);
    const size_t dim = ws.ambient_dimension();
    const size_t q = ws.quotient_dimension();
    if (q == 0) throw Error(ErrorCode::DegenerateQuotient, "K + L is the whole space");
    const int cond = ws.blocks.front().conductor();

    // Basis [K + L | complement]; the quotient action is the lower-right block.
    std::vector<Vector> columns = ws.kernel_part;
    columns.insert(columns.end(), ws.fixed_part.begin(), ws.fixed_part.end());
    const size_t sub = columns.size();
    for (size_t idx : ws.complement) {
        Vector e(dim, Cyclotomic(Rational(0), cond));
        e[idx] = Cyclotomic(Rational(1), cond);
        columns.push_back(std::move(e));
    }
    const Matrix basis = Matrix::from_columns(columns, dim, cond);
    const Matrix basis_inv = inverse(basis);

    std::vector<Matrix> slots;
    for (const auto& b : ws.blocks) {
        const Matrix in_basis = basis_inv * b * basis;
        for (size_t r = sub; r < dim; ++r) {
            for (size_t c = 0; c < sub; ++c) {
                if (!in_basis(r, c).is_zero()) {
                    throw Error(ErrorCode::InvariantViolation, "K + L is not invariant under B_k");
                }
            }
        }
        Matrix induced(q, q, cond);
        for (size_t r = 0; r < q; ++r) {
            for (size_t c = 0; c < q; ++c) induced.set(r, c, in_basis(sub + r, sub + c));
        }
        slots.push_back(std::move(induced));
    }
    Matrix product = slots.front();
    for (size_t k = 1; k < slots.size(); ++k) product = product * slots[k];
    slots.push_back(inverse(product));

    MonodromyTuple out(t.labels(), std::move(slots));
    for (const auto& w : t.warnings()) out.add_warning(w);
    if (nontrivial_finite_slots(t) < 2) {
        out.add_warning("middle_convolution: input has fewer than two nontrivial local monodromies away from infinity");
    }
    if (generated_algebra_dimension(t.matrices()) != t.rank() * t.rank()) {
        out.add_warning("middle_convolution: input tuple is reducible");
    }
    return out;
}

}  // namespace rls
