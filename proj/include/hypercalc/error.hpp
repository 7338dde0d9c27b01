#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercalc {

enum class ErrorKind {
    DivisionByZero,
    InsufficientPrecision,
    NegativeBase,
    IrrationalCoefficient,
    DomainError,
    UnsupportedEscape,
    Undefined,
    Undecidable,
    SyntaxError,
    UnknownIdentifier,
    EmptyInterval,
    NotAFilter,
    NotDisjoint,
    UnionNotInFilter,
    UnboundedQuantifier,
    FreeVariable,
    AlreadyStarred,
    UninterpretedConstant,
    NonSetBound,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

/// Syntax errors additionally remember the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::SyntaxError, message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace hypercalc
