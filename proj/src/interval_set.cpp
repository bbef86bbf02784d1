#include "ietlab/interval_set.hpp"

#include <algorithm>
#include <sstream>

#include "ietlab/iet.hpp"

namespace ietlab {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
    for (const auto& [a, b] : intervals)
        if (!(a < b)) throw IetError("interval set entries must satisfy a < b");
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& x, const Interval& y) { return x.first < y.first; });
    for (auto& iv : intervals) {
        if (!intervals_.empty() && iv.first <= intervals_.back().second) {
            if (iv.second > intervals_.back().second) intervals_.back().second = iv.second;
        } else {
            intervals_.push_back(std::move(iv));
        }
    }
}

IntervalSet IntervalSet::empty_set() {
    return IntervalSet();
}

IntervalSet IntervalSet::unit(const FieldPtr& field) {
    return IntervalSet({{field->zero(), field->one()}});
}

AlgebraicNumber IntervalSet::measure(const FieldPtr& field) const {
    AlgebraicNumber total = field->zero();
    for (const auto& [a, b] : intervals_) total = total + (b - a);
    return total;
}

bool IntervalSet::contains(const AlgebraicNumber& x) const {
    for (const auto& [a, b] : intervals_)
        if (a <= x && x < b) return true;
    return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
    std::vector<Interval> all = intervals_;
    all.insert(all.end(), o.intervals_.begin(), o.intervals_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < intervals_.size() && j < o.intervals_.size()) {
        const auto& [a1, b1] = intervals_[i];
        const auto& [a2, b2] = o.intervals_[j];
        AlgebraicNumber lo = std::max(a1, a2);
        AlgebraicNumber hi = std::min(b1, b2);
        if (lo < hi) out.emplace_back(lo, hi);
        if (b1 < b2)
            ++i;
        else
            ++j;
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
    std::vector<Interval> out;
    for (const auto& [a, b] : intervals_) {
        AlgebraicNumber lo = a;
        for (const auto& [c, d] : o.intervals_) {
            if (d <= lo) continue;
            if (b <= c) break;
            if (lo < c) out.emplace_back(lo, c);
            lo = std::max(lo, d);
            if (!(lo < b)) break;
        }
        if (lo < b) out.emplace_back(lo, b);
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement(const FieldPtr& field) const {
    return unit(field).subtract(*this);
}

IntervalSet IntervalSet::image_under(const Iet& f) const {
    std::vector<Interval> out;
    for (const auto& [a, b] : intervals_) {
        // Split [a, b) at the break points of f, then translate each piece.
        AlgebraicNumber left = a;
        int i = f.interval_index(a);
        while (left < b) {
            AlgebraicNumber end = f.interval_end(i);
            AlgebraicNumber right = std::min(b, end);
            const AlgebraicNumber& t = f.translations()[static_cast<std::size_t>(i)];
            out.emplace_back(left + t, right + t);
            left = right;
            ++i;
        }
    }
    return IntervalSet(std::move(out));
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
    return subtract(o).empty();
}

bool IntervalSet::operator==(const IntervalSet& o) const {
    if (intervals_.size() != o.intervals_.size()) return false;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i].first != o.intervals_[i].first) return false;
        if (intervals_[i].second != o.intervals_[i].second) return false;
    }
    return true;
}

std::string IntervalSet::str() const {
    if (intervals_.empty()) return "{}";
    std::ostringstream out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) out << " u ";
        out << "[" << intervals_[i].first.str() << ", " << intervals_[i].second.str() << ")";
    }
    return out.str();
}

}  // namespace ietlab
