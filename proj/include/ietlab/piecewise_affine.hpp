#pragma once

#include <string>
#include <vector>

#include "ietlab/numfield.hpp"

namespace ietlab {

class Iet;

/// A bijective piecewise-affine map of [0, 1) with exact coefficients and
/// positive slopes: x -> slope[i]*x + intercept[i] on [cuts[i], cuts[i+1]).
/// Covers both affine interval exchanges and PL-homeomorphisms; an IET is
/// the slope-1 case. Canonical form merges adjacent pieces with equal
/// coefficients, so map equality is structural equality.
class PiecewiseAffine {
public:
    struct Piece {
        AlgebraicNumber slope;
        AlgebraicNumber intercept;
    };

    static PiecewiseAffine identity(const FieldPtr& field);
    static PiecewiseAffine create(std::vector<AlgebraicNumber> cuts, std::vector<Piece> pieces);
    static PiecewiseAffine from_iet(const Iet& f);

    const FieldPtr& field() const { return field_; }
    const std::vector<AlgebraicNumber>& cuts() const { return cuts_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    AlgebraicNumber interval_end(int i) const;
    int interval_index(const AlgebraicNumber& x) const;

    AlgebraicNumber evaluate(const AlgebraicNumber& x) const;
    AlgebraicNumber operator()(const AlgebraicNumber& x) const { return evaluate(x); }

    /// Composition: (*this) after g.
    PiecewiseAffine after(const PiecewiseAffine& g) const;
    friend PiecewiseAffine operator*(const PiecewiseAffine& f, const PiecewiseAffine& g) {
        return f.after(g);
    }
    PiecewiseAffine inverse() const;

    /// True when the map extends continuously (a PL-homeomorphism of [0,1)).
    bool is_continuous() const;
    bool is_identity() const;
    bool operator==(const PiecewiseAffine& o) const;
    bool operator!=(const PiecewiseAffine& o) const { return !(*this == o); }

    std::string str() const;

private:
    PiecewiseAffine() = default;

    FieldPtr field_;
    std::vector<AlgebraicNumber> cuts_;
    std::vector<Piece> pieces_;
};

}  // namespace ietlab
