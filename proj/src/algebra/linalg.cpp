#include "rls/linalg.hpp"

#include <algorithm>

#include "rls/errors.hpp"

namespace rls {

namespace {

using Rows = std::vector<Vector>;

Rows to_rows(const Matrix& a) {
    Rows rows(a.rows());
    for (size_t r = 0; r < a.rows(); ++r) rows[r].assign(a.row(r).begin(), a.row(r).end());
    return rows;
}

Matrix from_rows(const Rows& rows, size_t cols, int conductor) {
    std::vector<Cyclotomic> all;
    all.reserve(rows.size() * cols);
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    if (all.empty()) return Matrix(rows.size(), cols, conductor);
    return {rows.size(), cols, std::move(all)};
}

// In-place Gauss-Jordan; returns the pivot columns. Only the first `limit`
// columns are used for pivoting.
std::vector<size_t> gauss_jordan(Rows& rows, size_t cols, size_t limit) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < limit && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        auto& pivot_row = rows[r];
        if (!pivot_row[c].is_one()) {
            const Cyclotomic inv = pivot_row[c].inverse();
            for (size_t k = c; k < cols; ++k) {
                if (!pivot_row[k].is_zero()) pivot_row[k] *= inv;
            }
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Cyclotomic f = rows[i][c];
            for (size_t k = c; k < cols; ++k) {
                if (!pivot_row[k].is_zero()) rows[i][k].sub_product(f, pivot_row[k]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RowEchelon row_reduce(const Matrix& a) {
    Rows rows = to_rows(a);
    auto pivots = gauss_jordan(rows, a.cols(), a.cols());
    return {from_rows(rows, a.cols(), a.conductor()), std::move(pivots)};
}

size_t rank(const Matrix& a) {
    Rows rows = to_rows(a);
    return gauss_jordan(rows, a.cols(), a.cols()).size();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
    Rows rows = to_rows(a);
    const auto pivots = gauss_jordan(rows, a.cols(), a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    const int n = a.conductor();
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols(), Cyclotomic(Rational(0), n));
        v[f] = Cyclotomic(Rational(1), n);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
    const size_t n = a.rows();
    const int cond = a.conductor();
    Rows rows = to_rows(a);
    for (size_t i = 0; i < n; ++i) {
        rows[i].resize(2 * n, Cyclotomic(Rational(0), cond));
        rows[i][n + i] = Cyclotomic(Rational(1), cond);
    }
    const auto pivots = gauss_jordan(rows, 2 * n, n);
    if (pivots.size() != n) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    Matrix out(n, n, cond);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
    }
    return out;
}

Cyclotomic determinant(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
    const size_t n = a.rows();
    Rows rows = to_rows(a);
    Cyclotomic det(Rational(1), a.conductor());
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && rows[p][c].is_zero()) ++p;
        if (p == n) return Cyclotomic(Rational(0), a.conductor());
        if (p != c) {
            std::swap(rows[p], rows[c]);
            det = -det;
        }
        det *= rows[c][c];
        const Cyclotomic inv = rows[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (rows[i][c].is_zero()) continue;
            const Cyclotomic f = rows[i][c] * inv;
            for (size_t k = c; k < n; ++k) {
                if (!rows[c][k].is_zero()) rows[i][k].sub_product(f, rows[c][k]);
            }
        }
    }
    return det;
}

Matrix power(const Matrix& a, unsigned exponent) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "power of non-square matrix");
    Matrix result = Matrix::identity(a.rows(), a.conductor());
    Matrix base = a;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(lcm_conductor(a.conductor(), b.conductor()));
    const Matrix x = a.lifted(n);
    const Matrix y = b.lifted(n);
    std::vector<Cyclotomic> all(x.rows() * y.rows() * x.cols() * y.cols(), Cyclotomic(Rational(0), n));
    const size_t cols = x.cols() * y.cols();
    for (size_t i = 0; i < x.rows(); ++i) {
        for (size_t j = 0; j < x.cols(); ++j) {
            const auto& s = x(i, j);
            if (s.is_zero()) continue;
            for (size_t k = 0; k < y.rows(); ++k) {
                for (size_t l = 0; l < y.cols(); ++l) {
                    all[(i * y.rows() + k) * cols + j * y.cols() + l] = s * y(k, l);
                }
            }
        }
    }
    if (all.empty()) return Matrix(x.rows() * y.rows(), cols, n);
    return {x.rows() * y.rows(), cols, std::move(all)};
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> current(k);
    for (size_t i = 0; i < k; ++i) current[i] = i;
    while (true) {
        out.push_back(current);
        size_t i = k;
        while (i > 0 && current[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

Matrix exterior_power(const Matrix& a, size_t k) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "exterior power of non-square matrix");
    const auto basis = subsets(a.rows(), k);
    const size_t m = basis.size();
    Matrix out(m, m, a.conductor());
    Matrix minor(k, k, a.conductor());
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            const auto& rows = basis[i];
            const auto& cols = basis[j];
            if (k == 3) {
                const auto& m00 = a(rows[0], cols[0]);
                const auto& m01 = a(rows[0], cols[1]);
                const auto& m02 = a(rows[0], cols[2]);
                const auto& m10 = a(rows[1], cols[0]);
                const auto& m11 = a(rows[1], cols[1]);
                const auto& m12 = a(rows[1], cols[2]);
                const auto& m20 = a(rows[2], cols[0]);
                const auto& m21 = a(rows[2], cols[1]);
                const auto& m22 = a(rows[2], cols[2]);
                Cyclotomic det(Rational(0), a.conductor());
                if (!m00.is_zero()) det.add_product(m00, m11 * m22 - m12 * m21);
                if (!m01.is_zero()) det.sub_product(m01, m10 * m22 - m12 * m20);
                if (!m02.is_zero()) det.add_product(m02, m10 * m21 - m11 * m20);
                out.set(i, j, det);
                continue;
            }
            for (size_t r = 0; r < k; ++r) {
                for (size_t c = 0; c < k; ++c) minor.set(r, c, a(rows[r], cols[c]));
            }
            out.set(i, j, determinant(minor));
        }
    }
    return out;
}

Matrix exterior_cube(const Matrix& a) {
    if (a.rows() != 7 || a.cols() != 7) throw Error(ErrorCode::ShapeMismatch, "exterior_cube expects a 7x7 matrix");
    return exterior_power(a, 3);
}

// Faddeev-LeVerrier: only divisions by the integers 1..n occur.
Polynomial char_poly(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "characteristic polynomial of non-square matrix");
    const size_t n = a.rows();
    const int cond = a.conductor();
    std::vector<Cyclotomic> c(n + 1, Cyclotomic(Rational(0), cond));
    c[n] = Cyclotomic(Rational(1), cond);
    Matrix am(n, n, cond);  // A * M_{k-1}, with M_0 = 0
    for (size_t k = 1; k <= n; ++k) {
        Matrix m = am;
        for (size_t i = 0; i < n; ++i) m.set(i, i, m(i, i) + c[n - k + 1]);
        am = a * m;
        c[n - k] = -am.trace() * Cyclotomic(Rational(1, static_cast<unsigned long>(k)), cond);
    }
    return Polynomial(std::move(c));
}

Matrix stack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    const size_t cols = blocks.front().cols();
    std::vector<Cyclotomic> all;
    size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw Error(ErrorCode::ShapeMismatch, "stacked blocks differ in width");
        all.insert(all.end(), b.entries().begin(), b.entries().end());
        rows += b.rows();
    }
    if (all.empty()) return Matrix(rows, cols, blocks.front().conductor());
    return {rows, cols, std::move(all)};
}

Vector SpanBuilder::reduce(Vector v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const size_t p = pivots_[i];
        if (v[p].is_zero()) continue;
        const Cyclotomic f = v[p];
        for (size_t k = 0; k < ambient_; ++k) {
            if (!rows_[i][k].is_zero()) v[k].sub_product(f, rows_[i][k]);
        }
    }
    return v;
}

bool SpanBuilder::add(const Vector& v) {
    if (v.size() != ambient_) throw Error(ErrorCode::ShapeMismatch, "vector does not match span dimension");
    Vector r = reduce(v);
    size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    const Cyclotomic inv = r[p].inverse();
    for (auto& x : r) {
        if (!x.is_zero()) x *= inv;
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool SpanBuilder::contains(const Vector& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::ShapeMismatch, "vector does not match span dimension");
    const Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Cyclotomic& x) { return x.is_zero(); });
}

size_t generated_algebra_dimension(std::span<const Matrix> generators) {
    if (generators.empty()) return 1;
    const size_t n = generators.front().rows();
    SpanBuilder span(n * n);
    std::vector<Matrix> queue{Matrix::identity(n, generators.front().conductor())};
    span.add(flatten(queue.front()));
    for (size_t head = 0; head < queue.size() && span.dimension() < n * n; ++head) {
        for (const auto& g : generators) {
            Matrix product = g * queue[head];
            if (span.add(flatten(product))) queue.push_back(std::move(product));
        }
    }
    return span.dimension();
}

std::vector<size_t> complete_basis(const std::vector<Vector>& vectors, size_t dimension) {
    SpanBuilder span(dimension);
    for (const auto& v : vectors) {
        if (!span.add(v)) throw Error(ErrorCode::InvariantViolation, "complete_basis given dependent vectors");
    }
    int cond = 1;
    for (const auto& v : vectors) cond = static_cast<int>(lcm_conductor(cond, common_conductor(v)));
    std::vector<size_t> added;
    for (size_t i = 0; i < dimension && span.dimension() < dimension; ++i) {
        Vector e(dimension, Cyclotomic(Rational(0), cond));
        e[i] = Cyclotomic(Rational(1), cond);
        if (span.add(e)) added.push_back(i);
    }
    return added;
}

}  // namespace rls
