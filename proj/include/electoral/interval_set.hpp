#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace electoral {

// Absolute tolerance for comparisons between measures (lengths of subsets of
// [0,1]). Shared across the whole library.
inline constexpr double kMeasureTol = 1e-9;

// Gap below which adjacent intervals are merged during normalization.
inline constexpr double kMergeTol = 1e-12;

// Closed subinterval [lo, hi] of the unit interval, lo <= hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of disjoint closed intervals inside [0,1], kept sorted
/// ascending. This is the strategy representation for targeted transfers:
/// set semantics are exact up to measure-zero boundary points, so closed
/// endpoints never affect any measure or vote-share computation.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Sorts, validates, and merges raw intervals into canonical form.
    /// Intervals overlapping or separated by a gap smaller than kMergeTol are
    /// merged. Degenerate intervals (lo == hi) are kept.
    /// Throws std::domain_error if any endpoint lies outside [0,1] or lo > hi.
    static IntervalSet normalize(std::vector<Interval> raw);

    /// Single-interval convenience, normalized.
    static IntervalSet of(double lo, double hi);

    /// Parses a literal of the form "lo,hi;lo,hi;...". An empty string parses
    /// to the empty set. Throws std::invalid_argument on malformed input and
    /// std::domain_error on out-of-range endpoints.
    static IntervalSet parse(std::string_view literal);

    /// Total length. Always in [0,1].
    double measure() const;

    /// Membership with closed-endpoint semantics.
    bool contains(double t) const;

    bool empty() const { return intervals_.empty(); }

    const std::vector<Interval>& intervals() const { return intervals_; }

    /// Renders "lo,hi;lo,hi" with 9 significant digits; empty set -> "".
    std::string to_literal() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> intervals_;  // sorted, disjoint
};

// Set operations. Results are normalized and degenerate (measure-zero)
// intervals are dropped from the output.
IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

}  // namespace electoral
