#pragma once

#include <span>
#include <vector>

#include "rls/matrix.hpp"
#include "rls/polynomial.hpp"

namespace rls {

struct RowEchelon {
    Matrix reduced;               // reduced row echelon form
    std::vector<size_t> pivots;   // pivot column of each nonzero row

    [[nodiscard]] size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination with exact field inverses, pivoting on the first
/// nonzero entry of each column.
RowEchelon row_reduce(const Matrix& a);
size_t rank(const Matrix& a);

/// Basis of the right kernel; one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& a);

Matrix inverse(const Matrix& a);
Cyclotomic determinant(const Matrix& a);
Matrix power(const Matrix& a, unsigned exponent);

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Induced action on the k-th exterior power in the lexicographic basis of
/// k-subsets; entry (I, J) is the minor of `a` on rows I and columns J.
Matrix exterior_power(const Matrix& a, size_t k);
/// exterior_power(a, 3) for 7x7 input (35x35 output).
Matrix exterior_cube(const Matrix& a);
/// The lexicographic list of k-subsets of {0..n-1} indexing exterior_power.
std::vector<std::vector<size_t>> subsets(size_t n, size_t k);

/// Monic characteristic polynomial det(xI - A).
Polynomial char_poly(const Matrix& a);

/// Stacks matrices with equal column counts on top of each other.
Matrix stack(std::span<const Matrix> blocks);

/// Incrementally maintained row echelon basis of a subspace.
class SpanBuilder {
   public:
    explicit SpanBuilder(size_t ambient_dimension) : ambient_(ambient_dimension) {}

    /// Adds v; returns false (and leaves the span unchanged) if it is
    /// already contained.
    bool add(const Vector& v);
    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] size_t dimension() const noexcept { return rows_.size(); }
    [[nodiscard]] size_t ambient_dimension() const noexcept { return ambient_; }

   private:
    Vector reduce(Vector v) const;

    size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<size_t> pivots_;
};

/// Dimension of the unital associative algebra generated by the matrices.
size_t generated_algebra_dimension(std::span<const Matrix> generators);

/// Extends the independent `vectors` greedily by standard basis vectors,
/// lowest index first, to a basis of the ambient space. Returns the indices
/// of the standard vectors that were added.
std::vector<size_t> complete_basis(const std::vector<Vector>& vectors, size_t dimension);

}  // namespace rls
