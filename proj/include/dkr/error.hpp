#pragma once

#include <stdexcept>
#include <string>

namespace dkr {

// Input that is well formed but lies outside the crystal or map it was handed to.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A time step pushed activity past the right edge of a finite state.
class BoundaryError : public DomainError {
public:
    using DomainError::DomainError;
};

// Enumeration refused to grow a graph past its node budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A brute-force construction found contradictory data (two images for one node,
// a missing arrow on one side, or a non-unique preimage).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace dkr
