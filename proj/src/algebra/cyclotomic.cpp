#include "rls/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rls/errors.hpp"

namespace rls {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "conductor must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> poly(static_cast<size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto divisor = cyclotomic_polynomial(d);
        const size_t dd = divisor.size() - 1;
        const size_t pd = poly.size() - 1;
        std::vector<long> quotient(pd - dd + 1, 0);
        for (size_t k = pd + 1; k-- > dd;) {
            const long c = poly[k];
            quotient[k - dd] = c;
            if (c == 0) continue;
            for (size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= c * divisor[j];
        }
        poly = std::move(quotient);
    }
    return poly;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), modulus_(cyclotomic_polynomial(conductor)) {
    const auto d = static_cast<size_t>(degree_);
    const size_t count = std::max<size_t>(static_cast<size_t>(conductor_), 2 * d - 1);
    powers_.reserve(count);
    std::vector<long> current(d, 0);
    current[0] = 1;
    for (size_t k = 0; k < count; ++k) {
        powers_.push_back(current);
        // multiply by x and reduce
        const long top = current[d - 1];
        for (size_t j = d - 1; j > 0; --j) current[j] = current[j - 1];
        current[0] = 0;
        if (top != 0) {
            for (size_t j = 0; j < d; ++j) current[j] -= top * modulus_[j];
        }
    }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    if (conductor < 1) throw Error(ErrorCode::InvalidParameter, "conductor must be positive");
    std::lock_guard lock(mutex);
    auto& slot = registry[conductor];
    if (!slot) slot.reset(new CyclotomicField(conductor));
    return *slot;
}

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

namespace {

const CyclotomicField& rational_field() {
    static const CyclotomicField& field = CyclotomicField::get(1);
    return field;
}

}  // namespace

Cyclotomic::Cyclotomic() : field_(&rational_field()), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : field_(&rational_field()), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value, int conductor)
    : field_(&CyclotomicField::get(conductor)), coeffs_(static_cast<size_t>(field_->degree())) {
    coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : field_(&CyclotomicField::get(conductor)) {
    reduce_from(coeffs);
}

Cyclotomic::Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zeta(int conductor, long exponent) {
    const auto& field = CyclotomicField::get(conductor);
    long e = exponent % conductor;
    if (e < 0) e += conductor;
    const auto& p = field.power(static_cast<int>(e));
    std::vector<Rational> coeffs(p.begin(), p.end());
    return {&field, std::move(coeffs)};
}

int Cyclotomic::conductor() const noexcept { return field_->conductor(); }

// Reduces an arbitrary-length coefficient vector modulo Phi_N into coeffs_.
void Cyclotomic::reduce_from(std::vector<Rational>& raw) {
    const auto d = static_cast<size_t>(field_->degree());
    const auto n = static_cast<size_t>(field_->conductor());
    coeffs_.assign(d, Rational(0));
    for (size_t k = 0; k < raw.size(); ++k) {
        if (sgn(raw[k]) == 0) continue;
        if (k < d) {
            coeffs_[k] += raw[k];
            continue;
        }
        const auto& p = field_->power(static_cast<int>(k % n));
        for (size_t j = 0; j < d; ++j) {
            if (p[j] != 0) coeffs_[j] += raw[k] * p[j];
        }
    }
}

bool Cyclotomic::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_one() const noexcept {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_rational() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Cyclotomic Cyclotomic::lifted(int target_conductor) const {
    const int n = conductor();
    if (target_conductor < 1 || target_conductor % n != 0) {
        throw Error(ErrorCode::NotADivisor,
                    "conductor " + std::to_string(n) + " does not divide " + std::to_string(target_conductor));
    }
    if (target_conductor == n) return *this;
    const auto& target = CyclotomicField::get(target_conductor);
    const auto d = static_cast<size_t>(target.degree());
    std::vector<Rational> out(d);
    if (n == 1 || is_rational()) {
        out[0] = coeffs_[0];
        return {&target, std::move(out)};
    }
    const int step = target_conductor / n;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        const auto& p = target.power(static_cast<int>((static_cast<long>(i) * step) % target_conductor));
        for (size_t j = 0; j < d; ++j) {
            if (p[j] != 0) out[j] += coeffs_[i] * p[j];
        }
    }
    return {&target, std::move(out)};
}

namespace {

// Brings both operands into a common field; returns the (possibly lifted) rhs.
const Cyclotomic& align(Cyclotomic& lhs, const Cyclotomic& rhs, Cyclotomic& scratch) {
    if (&lhs.field() == &rhs.field()) return rhs;
    const int m = static_cast<int>(lcm_conductor(lhs.conductor(), rhs.conductor()));
    if (lhs.conductor() != m) lhs = lhs.lifted(m);
    if (rhs.conductor() == m) return rhs;
    scratch = rhs.lifted(m);
    return scratch;
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    Cyclotomic scratch;
    const Cyclotomic& r = align(*this, rhs, scratch);
    for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += r.coeffs_[j];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    Cyclotomic scratch;
    const Cyclotomic& r = align(*this, rhs, scratch);
    for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= r.coeffs_[j];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    if (&lhs.field() != &rhs.field()) {
        const int m = static_cast<int>(lcm_conductor(lhs.conductor(), rhs.conductor()));
        // A rational factor only scales.
        if (lhs.is_rational()) {
            Cyclotomic out = rhs.lifted(m);
            for (auto& c : out.coeffs_) c *= lhs.coeffs_[0];
            return out;
        }
        if (rhs.is_rational()) {
            Cyclotomic out = lhs.lifted(m);
            for (auto& c : out.coeffs_) c *= rhs.coeffs_[0];
            return out;
        }
        return lhs.lifted(m) * rhs.lifted(m);
    }
    const size_t d = lhs.coeffs_.size();
    if (d == 1) return {lhs.field_, {lhs.coeffs_[0] * rhs.coeffs_[0]}};
    std::vector<Rational> raw(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (sgn(rhs.coeffs_[j]) == 0) continue;
            raw[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    Cyclotomic out(lhs.field_, {});
    out.reduce_from(raw);
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    *this = *this * rhs;
    return *this;
}

void Cyclotomic::accumulate_product(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
    if (a.is_zero() || b.is_zero()) return;
    if (&a.field() != field_ || &b.field() != field_) {
        if (subtract) {
            *this -= a * b;
        } else {
            *this += a * b;
        }
        return;
    }
    const size_t d = coeffs_.size();
    thread_local std::vector<Rational> raw;
    if (raw.size() < 2 * d - 1) raw.resize(2 * d - 1);
    for (size_t k = 0; k < 2 * d - 1; ++k) raw[k] = 0;
    for (size_t i = 0; i < d; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    for (size_t k = 0; k < 2 * d - 1; ++k) {
        if (sgn(raw[k]) == 0) continue;
        if (k < d) {
            if (subtract) {
                coeffs_[k] -= raw[k];
            } else {
                coeffs_[k] += raw[k];
            }
            continue;
        }
        const auto& p = field_->power(static_cast<int>(k));
        for (size_t j = 0; j < d; ++j) {
            if (p[j] == 0) continue;
            if (subtract) {
                coeffs_[j] -= raw[k] * p[j];
            } else {
                coeffs_[j] += raw[k] * p[j];
            }
        }
    }
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) { accumulate_product(a, b, false); }

void Cyclotomic::sub_product(const Cyclotomic& a, const Cyclotomic& b) { accumulate_product(a, b, true); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

// Solves (multiplication-by-this) * x = 1 over Q.
Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const size_t d = coeffs_.size();
    if (d == 1) return {field_, {1 / coeffs_[0]}};
    // column j holds this * z^j
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    Cyclotomic column = *this;
    const Cyclotomic z = zeta(conductor(), 1);
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) m[i][j] = column.coeffs_[i];
        column *= z;
    }
    m[0][d] = 1;
    for (size_t col = 0; col < d; ++col) {
        size_t pivot = col;
        while (sgn(m[pivot][col]) == 0) ++pivot;
        std::swap(m[pivot], m[col]);
        const Rational scale = 1 / m[col][col];
        for (size_t k = col; k <= d; ++k) m[col][k] *= scale;
        for (size_t row = 0; row < d; ++row) {
            if (row == col || sgn(m[row][col]) == 0) continue;
            const Rational f = m[row][col];
            for (size_t k = col; k <= d; ++k) m[row][k] -= f * m[col][k];
        }
    }
    std::vector<Rational> out(d);
    for (size_t i = 0; i < d; ++i) out[i] = m[i][d];
    return {field_, std::move(out)};
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
    *this = *this * rhs.inverse();
    return *this;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    if (&lhs.field() == &rhs.field()) return lhs.coeffs_ == rhs.coeffs_;
    const int m = static_cast<int>(lcm_conductor(lhs.conductor(), rhs.conductor()));
    return lhs.lifted(m).coeffs_ == rhs.lifted(m).coeffs_;
}

Cyclotomic Cyclotomic::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Cyclotomic result(Rational(1), conductor());
    Cyclotomic base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string to_string(const Cyclotomic& value) {
    std::ostringstream out;
    const auto coeffs = value.coeffs();
    bool first = true;
    for (size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational magnitude = abs(c);
        if (k == 0) {
            out << magnitude.get_str();
            continue;
        }
        if (magnitude != 1) out << magnitude.get_str() << '*';
        out << 'z';
        if (k > 1) out << '^' << k;
    }
    if (first) out << '0';
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) { return os << to_string(value); }

namespace {

class ScalarParser {
   public:
    ScalarParser(std::string_view text, int conductor) : text_(text), conductor_(conductor) {}

    Cyclotomic parse() {
        Cyclotomic value = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

   private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Cyclotomic expression() {
        Cyclotomic value = term();
        while (true) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    Cyclotomic term() {
        Cyclotomic value = unary();
        while (true) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const Cyclotomic divisor = unary();
                if (divisor.is_zero()) fail("division by zero");
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    Cyclotomic unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Cyclotomic power() {
        Cyclotomic base = primary();
        if (!accept('^')) return base;
        bool negative = accept('-');
        skip();
        const long exponent = integer_literal();
        if (negative && base.is_zero()) fail("negative power of zero");
        return base.pow(negative ? -exponent : exponent);
    }

    long integer_literal() {
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("exponent too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Cyclotomic primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of scalar");
        const char c = text_[pos_];
        if (c == 'z') {
            ++pos_;
            return Cyclotomic::zeta(conductor_, 1);
        }
        if (c == '(') {
            ++pos_;
            Cyclotomic inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Cyclotomic(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))), conductor_);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    int conductor_;
    size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_scalar(std::string_view text, int conductor) {
    Cyclotomic value = ScalarParser(text, conductor).parse();
    return value.conductor() == conductor ? value : value.lifted(conductor);
}

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::ProductNotOne: return "ProductNotOne";
        case ErrorCode::LabelMismatch: return "LabelMismatch";
        case ErrorCode::BadLambda: return "BadLambda";
        case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
        case ErrorCode::NotRankOne: return "NotRankOne";
        case ErrorCode::NotQuasiUnipotent: return "NotQuasiUnipotent";
        case ErrorCode::NotRankSeven: return "NotRankSeven";
        case ErrorCode::DegenerateDatum: return "DegenerateDatum";
        case ErrorCode::NotInGroup: return "NotInGroup";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownScenario: return "UnknownScenario";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

}  // namespace rls
