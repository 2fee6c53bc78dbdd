#include "rls/polynomial.hpp"

#include <sstream>

#include "rls/matrix.hpp"

namespace rls {

Polynomial::Polynomial(std::vector<Cyclotomic> coeffs) {
    coeffs_ = lift_all(std::move(coeffs), common_conductor(coeffs));
    trim();
}

Polynomial Polynomial::linear(const Cyclotomic& root) {
    return Polynomial({-root, Cyclotomic(Rational(1), root.conductor())});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Cyclotomic Polynomial::evaluate(const Cyclotomic& x) const {
    Cyclotomic acc(Rational(0), static_cast<int>(lcm_conductor(x.conductor(), common_conductor(coeffs_))));
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc *= x;
        acc += coeffs_[k];
    }
    return acc;
}

Polynomial divide_linear(const Polynomial& p, const Cyclotomic& root, Cyclotomic& remainder) {
    // synthetic division
    const auto& c = p.coeffs();
    if (c.empty()) {
        remainder = Cyclotomic(Rational(0), root.conductor());
        return {};
    }
    std::vector<Cyclotomic> quotient(c.size() - 1);
    Cyclotomic carry = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
        quotient[k] = carry;
        carry = c[k] + carry * root;
    }
    remainder = carry;
    return Polynomial(std::move(quotient));
}

int Polynomial::root_multiplicity(const Cyclotomic& root) const {
    int count = 0;
    Polynomial current = *this;
    while (!current.is_zero()) {
        Cyclotomic remainder;
        Polynomial q = divide_linear(current, root, remainder);
        if (!remainder.is_zero()) break;
        ++count;
        current = std::move(q);
    }
    return count;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Cyclotomic> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.coeffs_.size() != rhs.coeffs_.size()) return false;
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (!(lhs.coeffs_[i] == rhs.coeffs_[i])) return false;
    }
    return true;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = p.coeffs().size(); k-- > 0;) {
        const auto& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const bool bare = c.is_one() && k > 0;
        if (!bare) {
            const std::string text = to_string(c);
            const bool compound = text.find_first_of("+-", 1) != std::string::npos;
            out << (compound ? "(" + text + ")" : text);
            if (k > 0) out << '*';
        }
        if (k > 0) out << 'x';
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

}  // namespace rls
