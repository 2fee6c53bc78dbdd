#include "rls/matrix.hpp"

#include <numeric>
#include <ostream>

#include "rls/errors.hpp"

namespace rls {

int common_conductor(std::span<const Cyclotomic> values) {
    long n = 1;
    for (const auto& v : values) n = lcm_conductor(n, v.conductor());
    return static_cast<int>(n);
}

Vector lift_all(Vector v, int conductor) {
    for (auto& x : v) {
        if (x.conductor() != conductor) x = x.lifted(conductor);
    }
    return v;
}

Matrix::Matrix(size_t rows, size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), entries_(rows * cols, Cyclotomic(Rational(0), conductor)) {}

Matrix::Matrix(size_t rows, size_t cols, std::vector<Cyclotomic> entries) : rows_(rows), cols_(cols) {
    if (entries.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
    conductor_ = common_conductor(entries);
    entries_ = lift_all(std::move(entries), conductor_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    std::vector<Cyclotomic> entries;
    entries.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    conductor_ = common_conductor(entries);
    entries_ = lift_all(std::move(entries), conductor_);
}

Matrix Matrix::identity(size_t n, int conductor) {
    Matrix m(n, n, conductor);
    for (size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Cyclotomic(Rational(1), conductor);
    return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
    const size_t n = entries.size();
    std::vector<Cyclotomic> all(n * n);
    for (size_t i = 0; i < n; ++i) all[i * n + i] = entries[i];
    return {n, n, std::move(all)};
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, size_t rows, int conductor) {
    std::vector<Cyclotomic> all(rows * columns.size(), Cyclotomic(Rational(0), conductor));
    for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column length mismatch");
        for (size_t r = 0; r < rows; ++r) all[r * columns.size() + c] = columns[c][r];
    }
    return {rows, columns.size(), std::move(all)};
}

void Matrix::set(size_t r, size_t c, const Cyclotomic& value) {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::ShapeMismatch, "index out of range");
    if (conductor_ % value.conductor() != 0) {
        *this = lifted(static_cast<int>(lcm_conductor(conductor_, value.conductor())));
    }
    entries_[r * cols_ + c] = value.conductor() == conductor_ ? value : value.lifted(conductor_);
}

Vector Matrix::column(size_t c) const {
    Vector out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
}

Matrix Matrix::lifted(int conductor) const {
    if (conductor == conductor_) return *this;
    if (conductor % conductor_ != 0) throw Error(ErrorCode::NotADivisor, "matrix conductor does not divide target");
    Matrix out = *this;
    out.conductor_ = conductor;
    out.entries_ = lift_all(std::move(out.entries_), conductor);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, conductor_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = (*this)(r, c);
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            const auto& e = (*this)(r, c);
            if (r == c ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

Cyclotomic Matrix::trace() const {
    if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "trace of non-square matrix");
    Cyclotomic t(Rational(0), conductor_);
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "vector length does not match columns");
    const int n = static_cast<int>(lcm_conductor(conductor_, common_conductor(v)));
    const Vector x = lift_all(v, n);
    const Matrix& self = n == conductor_ ? *this : lifted(n);
    Vector out(rows_, Cyclotomic(Rational(0), n));
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out[r].add_product(self(r, c), x[c]);
    }
    return out;
}

namespace {

void align(Matrix& lhs, Matrix& rhs) {
    if (lhs.conductor() == rhs.conductor()) return;
    const int n = static_cast<int>(lcm_conductor(lhs.conductor(), rhs.conductor()));
    lhs = lhs.lifted(n);
    rhs = rhs.lifted(n);
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shapes differ");
    Matrix r = rhs;
    align(*this, r);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += r.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::ShapeMismatch, "matrix difference shapes differ");
    }
    Matrix r = rhs;
    align(*this, r);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= r.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Cyclotomic& scalar) {
    if (conductor_ % scalar.conductor() != 0) {
        *this = lifted(static_cast<int>(lcm_conductor(conductor_, scalar.conductor())));
    }
    const Cyclotomic s = scalar.lifted(conductor_);
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shapes do not conform");
    if (lhs.conductor_ != rhs.conductor_) {
        Matrix a = lhs;
        Matrix b = rhs;
        align(a, b);
        return a * b;
    }
    Matrix out(lhs.rows_, rhs.cols_, lhs.conductor_);
    for (size_t i = 0; i < lhs.rows_; ++i) {
        for (size_t k = 0; k < lhs.cols_; ++k) {
            const auto& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                out.entries_[i * out.cols_ + j].add_product(a, rhs(k, j));
            }
        }
    }
    return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < lhs.entries_.size(); ++i) {
        if (!(lhs.entries_[i] == rhs.entries_[i])) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) os << ", ";
            os << m(r, c);
        }
        os << '\n';
    }
    return os;
}

Vector flatten(const Matrix& m) { return {m.entries().begin(), m.entries().end()}; }

Matrix unflatten(const Vector& v, size_t rows, size_t cols) { return {rows, cols, v}; }

}  // namespace rls
