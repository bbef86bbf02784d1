#pragma once

#include <utility>
#include <vector>

#include "ietlab/numfield.hpp"

namespace ietlab {

class Iet;

/// A finite union of disjoint half-open intervals [a, b) in [0, 1), kept
/// sorted with touching intervals merged. Used for fixed sets, supports and
/// decomposition components.
class IntervalSet {
public:
    using Interval = std::pair<AlgebraicNumber, AlgebraicNumber>;

    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> intervals);  // normalizes
    static IntervalSet empty_set();
    static IntervalSet unit(const FieldPtr& field);  // [0, 1)

    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }
    const std::vector<Interval>& intervals() const { return intervals_; }

    AlgebraicNumber measure(const FieldPtr& field) const;
    bool contains(const AlgebraicNumber& x) const;

    IntervalSet unite(const IntervalSet& o) const;
    IntervalSet intersect(const IntervalSet& o) const;
    IntervalSet subtract(const IntervalSet& o) const;
    /// Complement inside [0, 1).
    IntervalSet complement(const FieldPtr& field) const;
    /// Exact image under an IET (pieces are split at the map's break points).
    IntervalSet image_under(const Iet& f) const;

    bool subset_of(const IntervalSet& o) const;
    bool operator==(const IntervalSet& o) const;
    bool operator!=(const IntervalSet& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<Interval> intervals_;
};

}  // namespace ietlab
