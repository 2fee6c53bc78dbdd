#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rls/matrix.hpp"

namespace rls {

/// An ordered tuple (g_1, ..., g_r) of invertible n x n matrices with
/// g_1 g_2 ... g_r = 1. The last slot is the one at infinity. The product
/// relation is checked on construction, which also guarantees invertibility.
class MonodromyTuple {
   public:
    MonodromyTuple(std::vector<std::string> labels, std::vector<Matrix> matrices);

    static MonodromyTuple trivial(std::vector<std::string> labels, size_t rank, int conductor = 1);

    [[nodiscard]] size_t rank() const noexcept { return matrices_.front().rows(); }
    [[nodiscard]] size_t slot_count() const noexcept { return matrices_.size(); }
    [[nodiscard]] int conductor() const noexcept { return matrices_.front().conductor(); }

    [[nodiscard]] const Matrix& operator[](size_t slot) const { return matrices_.at(slot); }
    [[nodiscard]] const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Notes attached by operations whose hypotheses were not met (for
    /// example a convolution outside the irreducible, two-nontrivial-slot
    /// regime). They do not take part in equality.
    [[nodiscard]] const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    void add_warning(std::string message) { warnings_.push_back(std::move(message)); }

    [[nodiscard]] MonodromyTuple lifted(int conductor) const;

    friend bool operator==(const MonodromyTuple& lhs, const MonodromyTuple& rhs);

   private:
    std::vector<std::string> labels_;
    std::vector<Matrix> matrices_;
    std::vector<std::string> warnings_;
};

/// Rank-one tuple whose k-th entry is the 1x1 matrix (values[k]).
MonodromyTuple rank1_from_ramification(std::vector<std::string> labels, const std::vector<Cyclotomic>& values);

/// Slot-wise Kronecker product.
MonodromyTuple tensor(const MonodromyTuple& t, const MonodromyTuple& u);

/// Contragredient tuple: slot-wise inverse transpose. The product relation
/// survives because transposition reverses products.
MonodromyTuple dual(const MonodromyTuple& t);

/// Multiplies the k-th matrix of t by the k-th scalar of the rank-one tuple c.
MonodromyTuple scale_twist(const MonodromyTuple& t, const MonodromyTuple& c);

/// Block-diagonal sum; reducible whenever both summands are nonzero rank.
MonodromyTuple direct_sum(const MonodromyTuple& t, const MonodromyTuple& u);

/// Simultaneous conjugation g_k -> p g_k p^-1.
MonodromyTuple conjugate(const MonodromyTuple& t, const Matrix& p);

/// Number of slots other than the last whose matrix is not the identity.
size_t nontrivial_finite_slots(const MonodromyTuple& t);

/// Tuple document: a header (`conductor N`, `rank n`, `slots r`,
/// `labels a b ...`) followed by r matrices, one row per line with
/// comma-separated scalar literals, matrices separated by blank lines.
/// Lines starting with '#' are comments.
std::string format_tuple(const MonodromyTuple& t);
MonodromyTuple parse_tuple(std::string_view text);

}  // namespace rls
