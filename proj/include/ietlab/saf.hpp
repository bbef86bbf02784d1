#pragma once

#include <string>
#include <vector>

#include "ietlab/iet.hpp"

namespace ietlab {

/// The scissors-congruence conjugacy invariant sum_i length_i /\ translation_i
/// in R /\_Q R, restricted to the ambient field and represented faithfully
/// on its power basis: an exactly antisymmetric d x d rational matrix whose
/// (i, j) entry is the coefficient of theta^i /\ theta^j.
struct SafValue {
    std::vector<std::vector<Rational>> matrix;

    int dimension() const { return static_cast<int>(matrix.size()); }
    bool is_zero() const;
    bool operator==(const SafValue& o) const { return matrix == o.matrix; }
    bool operator!=(const SafValue& o) const { return !(*this == o); }
    SafValue operator-() const;
    SafValue operator+(const SafValue& o) const;

    std::string str() const;
};

/// Antisymmetrization of sum_i coords(length_i) * coords(translation_i)^T
/// over the canonical intervals of f.
SafValue saf_invariant(const Iet& f);

enum class ConjugacyVerdict { possibly_conjugate, not_conjugate };

/// SAF is a conjugation invariant, so distinct values certify
/// non-conjugacy; equal values are inconclusive.
ConjugacyVerdict saf_distinguish(const Iet& f, const Iet& g);

}  // namespace ietlab
