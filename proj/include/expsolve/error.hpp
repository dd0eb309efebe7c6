#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expsolve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero rational function") {}
};

/// nth_root was handed a coefficient with more than one e^c unit.
class NotSingleTerm : public Error {
public:
    using Error::Error;
};

/// nth_root could not extract an exact root. `constraint` names what was left unmet.
class NotPerfectPower : public Error {
public:
    enum class Reason { Multiplicity, Constant };

    NotPerfectPower(Reason reason, std::string constraint)
        : Error("not a perfect power: " + constraint), reason_(reason), constraint_(std::move(constraint)) {}

    Reason reason() const noexcept { return reason_; }
    const std::string& constraint() const noexcept { return constraint_; }

private:
    Reason reason_;
    std::string constraint_;
};

class PoleAtSample : public Error {
public:
    using Error::Error;
};

/// Byte offsets [start, end) into the parsed text plus a 1-based line/column of start.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, SourceSpan span) : Error(what), span_(span) {}
    const SourceSpan& span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Input parsed but does not have the shape f^n + a f^(n-2) f' + P_d = sum p_i exp(alpha_i).
class ShapeError : public ParseError {
public:
    using ParseError::ParseError;
};

class NonPolynomialExponent : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace expsolve
