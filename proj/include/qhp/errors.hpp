#pragma once

#include <stdexcept>
#include <string>

namespace qhp {

struct NotPrime : std::invalid_argument {
    explicit NotPrime(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& msg) : std::domain_error(msg) {}
};

struct ModulusMismatch : std::invalid_argument {
    explicit ModulusMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct BruteLimit : std::runtime_error {
    explicit BruteLimit(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised for the (t,n) = (0,0) class, whose nonzero members are nilpotent
// and have no potency index.
struct NilpotentClass : std::domain_error {
    explicit NilpotentClass(const std::string& msg) : std::domain_error(msg) {}
};

struct InvalidIndex : std::invalid_argument {
    explicit InvalidIndex(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace qhp
