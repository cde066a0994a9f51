#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfharm {

enum class ErrorKind {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    NotInSubfield,
    NotADivisor,
    SingularGram,
    DimensionMismatch,
    BackendMismatch,
    EvenCharacteristic,
    NotUnitary,
    ZeroTrace,
    ZeroScaling,
    ConstraintViolated,
    DomainRestriction,
    WrongFixture,
    Overflow,
    Parse,
    TooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace gfharm
