#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rls {

enum class ErrorCode {
    DivisionByZero,
    NotADivisor,
    ShapeMismatch,
    SingularMatrix,
    ProductNotOne,
    LabelMismatch,
    BadLambda,
    DegenerateQuotient,
    NotRankOne,
    NotQuasiUnipotent,
    NotRankSeven,
    DegenerateDatum,
    NotInGroup,
    ParseError,
    UnknownScenario,
    InvalidParameter,
    InvariantViolation,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Parse failures additionally remember where in the document they happened
/// (1-based line and column).
class ParseError : public Error {
   public:
    ParseError(const std::string& message, size_t line, size_t column)
        : Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] size_t line() const noexcept { return line_; }
    [[nodiscard]] size_t column() const noexcept { return column_; }

   private:
    size_t line_;
    size_t column_;
};

}  // namespace rls
