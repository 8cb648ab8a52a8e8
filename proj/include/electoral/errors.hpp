#pragma once

#include <stdexcept>
#include <string>

namespace electoral {

// Thrown when the budget sits exactly on the small/large regime boundary
// v = R - 1/2, where neither equilibrium characterization applies.
class RegimeBoundaryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when a strategy's interval endpoints do not line up with the grid
// cell boundaries of the verifier within tolerance.
class GridAlignmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a grid is too large for the requested enumeration mode.
class GridCapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an internal cross-check fails in a way that signals a formula
// bug rather than bad user input (e.g. a bisection bracket without a sign
// change).
class OracleError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace electoral
