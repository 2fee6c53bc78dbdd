#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "rls/cyclotomic.hpp"

namespace rls {

using Vector = std::vector<Cyclotomic>;

/// Dense row-major matrix over a cyclotomic field. Every entry is kept in the
/// matrix's conductor; storing a value from a larger field lifts the whole
/// matrix to the least common multiple.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, int conductor = 1);
    Matrix(size_t rows, size_t cols, std::vector<Cyclotomic> entries);
    Matrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);

    static Matrix identity(size_t n, int conductor = 1);
    static Matrix diagonal(const Vector& entries);
    static Matrix from_columns(const std::vector<Vector>& columns, size_t rows, int conductor = 1);

    [[nodiscard]] size_t rows() const noexcept { return rows_; }
    [[nodiscard]] size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] int conductor() const noexcept { return conductor_; }

    [[nodiscard]] const Cyclotomic& operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    void set(size_t r, size_t c, const Cyclotomic& value);

    [[nodiscard]] std::span<const Cyclotomic> row(size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    [[nodiscard]] Vector column(size_t c) const;
    [[nodiscard]] std::span<const Cyclotomic> entries() const noexcept { return entries_; }

    [[nodiscard]] Matrix lifted(int conductor) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] Cyclotomic trace() const;

    [[nodiscard]] Vector apply(const Vector& v) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Cyclotomic& scalar);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator*(const Cyclotomic& scalar, Matrix m) { return m *= scalar; }
    friend bool operator==(const Matrix& lhs, const Matrix& rhs);

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    int conductor_ = 1;
    std::vector<Cyclotomic> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Row-major flattening, used to treat matrices as vectors in linear solves.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, size_t rows, size_t cols);

int common_conductor(std::span<const Cyclotomic> values);
Vector lift_all(Vector v, int conductor);

}  // namespace rls
