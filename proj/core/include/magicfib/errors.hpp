#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfib {

// Input outside the mathematical domain of an operation
// (non-primitive class, reducible family, zero polynomial, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A bounded computation ran out of budget before it could decide.
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration stopped at its size limit; carries how far it got.
class LimitExceeded : public Inconclusive {
public:
    LimitExceeded(const std::string& what, std::size_t explored)
        : Inconclusive(what), explored_(explored) {}
    std::size_t explored() const noexcept { return explored_; }

private:
    std::size_t explored_;
};

}  // namespace mfib
