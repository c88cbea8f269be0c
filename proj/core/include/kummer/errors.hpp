#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

// Error conditions surfaced by the exact and numeric layers.  Each one names
// the contract it violates rather than the call site that raised it.

struct ZeroInverse : std::runtime_error {
    explicit ZeroInverse(const std::string& what) : std::runtime_error(what) {}
};

// The norm of a nonzero element evaluated to zero.  F is a field, so this can
// only happen through a non-canonical representation; it is a bug signal, not
// a data condition.
struct DegenerateNorm : std::runtime_error {
    explicit DegenerateNorm(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtPoint : std::runtime_error {
    explicit PoleAtPoint(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A stored Moebius record does not act on {0,1,oo} as a bijection.  Only
// reachable through corrupted table data.
struct NoMatch : std::runtime_error {
    explicit NoMatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonMobiusPullback : std::runtime_error {
    explicit NonMobiusPullback(const std::string& what) : std::runtime_error(what) {}
};

struct DerivationMismatch : std::runtime_error {
    explicit DerivationMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct Table2Mismatch : std::runtime_error {
    explicit Table2Mismatch(const std::string& what) : std::runtime_error(what) {}
};

struct FactorizationFailure : std::runtime_error {
    explicit FactorizationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kummer
