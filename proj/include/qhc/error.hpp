#pragma once

#include <stdexcept>
#include <string>

namespace qhc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input: bad JSON, a curve that is not reduced,
/// a root that does not live in the coefficient field, and so on.
class InputError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold by construction failed. Always a bug or an
/// invalid hand-supplied datum (e.g. a reducible minimal polynomial).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Raised by exact division when the divisor does not divide the dividend.
class InexactDivision : public Error {
public:
    explicit InexactDivision(std::string remainder)
        : Error("remainder " + remainder), remainder_(std::move(remainder)) {}

    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

} // namespace qhc
