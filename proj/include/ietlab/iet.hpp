#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ietlab/interval_set.hpp"
#include "ietlab/numfield.hpp"
#include "ietlab/permutation.hpp"

namespace ietlab {

/// Angle + support of a restricted rotation: the exchange of two intervals
/// inside [a, b) translating the left part by angle, identity elsewhere.
struct RestrictedRotation {
    AlgebraicNumber angle;
    AlgebraicNumber a;
    AlgebraicNumber b;
};

/// Read-only lengths + permutation view of an IET (display/interchange
/// form). perm(i) is the position of interval i in the image order.
struct LengthsPermutation {
    std::vector<AlgebraicNumber> lengths;
    Permutation perm;
};

/// An interval exchange transformation of [0, 1) in canonical form:
/// left endpoints of the maximal continuity intervals (cuts, starting at 0)
/// plus the translation applied on each. Construction verifies exactly that
/// the translated intervals tile [0, 1); canonical form merges adjacent
/// intervals with equal translations, so equality of maps is structural
/// equality. Values are immutable and all operations are pure.
class Iet {
public:
    static Iet identity(const FieldPtr& field);
    static Iet create(std::vector<AlgebraicNumber> cuts, std::vector<AlgebraicNumber> translations);
    /// Full-circle rotation by angle (taken mod 1).
    static Iet rotation(const AlgebraicNumber& angle);
    /// Restricted rotation R_{angle, [a,b)}: requires 0 <= angle < b - a.
    static Iet restricted_rotation(const AlgebraicNumber& angle, const AlgebraicNumber& a,
                                   const AlgebraicNumber& b);
    /// Product of restricted rotations with pairwise disjoint supports.
    static Iet product_of_restricted_rotations(const std::vector<RestrictedRotation>& parts);
    static Iet from_lengths_permutation(const std::vector<AlgebraicNumber>& lengths,
                                        const Permutation& perm);

    const FieldPtr& field() const { return field_; }
    const std::vector<AlgebraicNumber>& cuts() const { return cuts_; }
    const std::vector<AlgebraicNumber>& translations() const { return translations_; }
    int interval_count() const { return static_cast<int>(cuts_.size()); }

    /// Right endpoint of interval i (next cut, or 1).
    AlgebraicNumber interval_end(int i) const;
    /// Index of the canonical interval containing x.
    int interval_index(const AlgebraicNumber& x) const;

    AlgebraicNumber evaluate(const AlgebraicNumber& x) const;
    AlgebraicNumber operator()(const AlgebraicNumber& x) const { return evaluate(x); }

    /// Composition: (*this) after g, i.e. x -> this(g(x)).
    Iet after(const Iet& g) const;
    friend Iet operator*(const Iet& f, const Iet& g) { return f.after(g); }
    Iet inverse() const;
    Iet power(long n) const;

    /// BP(f): the point 0 together with the interior discontinuities —
    /// in canonical form, exactly the cuts.
    std::vector<AlgebraicNumber> break_points() const { return cuts_; }
    int break_point_count() const { return interval_count(); }
    /// Distinct translation values, sorted.
    std::vector<AlgebraicNumber> translation_set() const;
    /// Union of the maximal intervals on which f is the identity.
    IntervalSet fixed_set() const;
    IntervalSet support() const;

    bool is_identity() const;
    bool operator==(const Iet& o) const;
    bool operator!=(const Iet& o) const { return !(*this == o); }
    /// Structural total order for exact deduplication in containers.
    static int struct_compare(const Iet& a, const Iet& b);

    LengthsPermutation lengths_permutation() const;
    /// Decomposes the map as a product of restricted rotations with
    /// pairwise disjoint supports, when it has that shape.
    std::optional<std::vector<RestrictedRotation>> as_restricted_rotation_product() const;

    std::string str() const;

private:
    Iet() = default;

    FieldPtr field_;
    std::vector<AlgebraicNumber> cuts_;
    std::vector<AlgebraicNumber> translations_;
};

Iet commutator(const Iet& f, const Iet& g);
bool commute_check(const Iet& f, const Iet& g);

struct IetStructLess {
    bool operator()(const Iet& a, const Iet& b) const { return Iet::struct_compare(a, b) < 0; }
};

}  // namespace ietlab
