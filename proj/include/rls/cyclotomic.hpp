#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rls {

using Rational = mpq_class;

/// Per-conductor data for Q(zeta_N): the cyclotomic polynomial and the
/// reductions of x^k modulo it. Instances are interned and live for the whole
/// program, so plain pointers to them are stable.
class CyclotomicField {
   public:
    static const CyclotomicField& get(int conductor);

    [[nodiscard]] int conductor() const noexcept { return conductor_; }
    /// Euler phi of the conductor; the length of every coefficient vector.
    [[nodiscard]] int degree() const noexcept { return degree_; }
    /// Coefficients of Phi_N, low degree first (monic, length degree + 1).
    [[nodiscard]] const std::vector<long>& modulus() const noexcept { return modulus_; }
    /// x^k mod Phi_N for 0 <= k < max(N, 2 * degree - 1).
    [[nodiscard]] const std::vector<long>& power(int k) const { return powers_.at(static_cast<size_t>(k)); }

   private:
    explicit CyclotomicField(int conductor);

    int conductor_;
    int degree_;
    std::vector<long> modulus_;
    std::vector<std::vector<long>> powers_;
};

/// Integer polynomial Phi_n, low degree first.
std::vector<long> cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Exact element of Q(zeta_N) in the power basis {1, z, ..., z^(phi(N)-1)},
/// always reduced modulo Phi_N. Binary operations on values of different
/// conductors are carried out in Q(zeta_lcm).
class Cyclotomic {
   public:
    Cyclotomic();
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    explicit Cyclotomic(const Rational& value, int conductor = 1);
    Cyclotomic(int conductor, std::vector<Rational> coeffs);

    /// zeta_N^exponent; negative exponents are reduced mod N.
    static Cyclotomic zeta(int conductor, long exponent = 1);

    [[nodiscard]] int conductor() const noexcept;
    [[nodiscard]] const CyclotomicField& field() const noexcept { return *field_; }
    [[nodiscard]] std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;
    [[nodiscard]] bool is_rational() const noexcept;

    /// The same number written in Q(zeta_M); requires conductor() | M.
    [[nodiscard]] Cyclotomic lifted(int target_conductor) const;
    [[nodiscard]] Cyclotomic inverse() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);
    Cyclotomic operator-() const;

    /// this += a * b (resp. this -= a * b) without temporaries when all
    /// three values share a conductor.
    void add_product(const Cyclotomic& a, const Cyclotomic& b);
    void sub_product(const Cyclotomic& a, const Cyclotomic& b);

    friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
    friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
    friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
    friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }
    friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

    [[nodiscard]] Cyclotomic pow(long exponent) const;

   private:
    Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs);
    void reduce_from(std::vector<Rational>& raw);
    void accumulate_product(const Cyclotomic& a, const Cyclotomic& b, bool subtract);

    const CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

long lcm_conductor(long a, long b);

/// Render in the scalar literal grammar (`3*z + 1`, `-z^2`, `1/2`), highest
/// power first. The conductor is implicit.
std::string to_string(const Cyclotomic& value);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

/// Parse a scalar literal: rationals, `z` for zeta_N, `+ - *`, `^` with an
/// integer exponent (negative exponents allowed), parentheses.
Cyclotomic parse_scalar(std::string_view text, int conductor);

}  // namespace rls
