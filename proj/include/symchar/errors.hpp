#pragma once

#include <stdexcept>
#include <string>

namespace symchar {

/// Precondition violated at an API boundary (caller bug).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// An exact division left a remainder, or a value that must be a nonnegative
/// integer is not one. Inner products and induced-character multiplicities
/// are integers, so this always signals an upstream computation bug.
class IntegralityError : public std::runtime_error {
public:
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the range where the requested quantity is defined.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace symchar
