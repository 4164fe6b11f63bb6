#pragma once

#include <stdexcept>
#include <string>

namespace g2forge {

enum class ErrorKind {
    DivisionByZero,
    NegativeInput,
    DimensionMismatch,
    MetricNotRepresentable,
    NonDiagonalMetric,
    SingularMap,
    ParseError,
    JacobiViolation,
    NonOrthonormalFrame,
    NotPositive,
    NotClosed,
    NotAnIsomorphism,
    ScaleNotRepresentable,
    NotADerivation,
    InvalidArgument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures carry the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& msg)
        : Error(ErrorKind::ParseError, "at offset " + std::to_string(offset) + ": " + msg),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace g2forge
