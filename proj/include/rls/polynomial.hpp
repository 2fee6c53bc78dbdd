#pragma once

#include <string>
#include <vector>

#include "rls/cyclotomic.hpp"

namespace rls {

/// Univariate polynomial over a cyclotomic field, low degree first. The zero
/// polynomial has no coefficients.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Cyclotomic> coeffs);

    /// (x - root)
    static Polynomial linear(const Cyclotomic& root);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Cyclotomic>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const Cyclotomic& leading() const { return coeffs_.back(); }

    [[nodiscard]] Cyclotomic evaluate(const Cyclotomic& x) const;
    /// Multiplicity of root as a zero (0 when not a root).
    [[nodiscard]] int root_multiplicity(const Cyclotomic& root) const;

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

   private:
    void trim();

    std::vector<Cyclotomic> coeffs_;
};

/// Divides by (x - root); the remainder is returned through `remainder`.
Polynomial divide_linear(const Polynomial& p, const Cyclotomic& root, Cyclotomic& remainder);

/// `x^2 + x + 1` style rendering, coefficients parenthesised when they are
/// sums.
std::string to_string(const Polynomial& p);

}  // namespace rls
