#pragma once

#include <random>
#include <vector>

#include "ietlab/gn.hpp"
#include "ietlab/iet.hpp"
#include "ietlab/words.hpp"

namespace ietlab::sampling {

// Deterministic generators for the randomized property suites. Everything
// is driven by a seeded mt19937_64 so runs are reproducible.
using Rng = std::mt19937_64;

/// Rational with numerator in [-max_num, max_num] and denominator in
/// [1, max_den].
Rational random_rational(Rng& rng, long max_num = 8, long max_den = 12);

/// Field element mixing a rational part with small multiples of the
/// fractional parts of theta powers; irrational whenever the field allows
/// it and `allow_rational` is false.
AlgebraicNumber random_element(Rng& rng, const FieldPtr& field, bool allow_rational = true);

/// Element of [lo, hi), exact; irrational-in-the-field when requested.
AlgebraicNumber random_in_range(Rng& rng, const AlgebraicNumber& lo, const AlgebraicNumber& hi,
                                bool force_irrational = false);

/// Random IET with up to max_intervals intervals (random exact cuts, random
/// permutation of the pieces).
Iet random_iet(Rng& rng, const FieldPtr& field, int max_intervals, bool irrational_cuts = true);

/// Random element of G_n (mixed rational/irrational rotation entries).
GnElem random_gn(Rng& rng, const FieldPtr& field, int n);

Permutation random_permutation(Rng& rng, int n);
/// Random even permutation.
Permutation random_alternating(Rng& rng, int n);

/// Random reduced word over the given names with length <= max_length.
Word random_word(Rng& rng, const std::vector<std::string>& names, long max_length);

/// Random restricted rotations with pairwise disjoint supports with
/// rational endpoints and irrational (or mixed) angles.
std::vector<RestrictedRotation> random_disjoint_rotations(Rng& rng, const FieldPtr& field, int count,
                                                          bool irrational_angles = true);

}  // namespace ietlab::sampling
