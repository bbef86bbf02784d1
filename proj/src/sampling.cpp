#include "ietlab/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace ietlab::sampling {

Rational random_rational(Rng& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

AlgebraicNumber random_element(Rng& rng, const FieldPtr& field, bool allow_rational) {
    int d = field->degree();
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Rational> coeffs(static_cast<std::size_t>(d), Rational(0));
    coeffs[0] = random_rational(rng);
    bool irrational = false;
    for (int i = 1; i < d; ++i) {
        if (coin(rng)) continue;
        Rational c = random_rational(rng, 4, 8);
        if (c != 0) irrational = true;
        coeffs[static_cast<std::size_t>(i)] = c;
    }
    if (!allow_rational && !irrational && d > 1) {
        std::uniform_int_distribution<int> pick(1, d - 1);
        coeffs[static_cast<std::size_t>(pick(rng))] = Rational(1, 3);
    }
    return field->element(std::move(coeffs));
}

AlgebraicNumber random_in_range(Rng& rng, const AlgebraicNumber& lo, const AlgebraicNumber& hi,
                                bool force_irrational) {
    const FieldPtr& field = lo.field();
    AlgebraicNumber width = hi - lo;
    std::uniform_int_distribution<long> num(1, 63);
    for (int attempt = 0; attempt < 200; ++attempt) {
        // Fraction of the width: u = p/64 plus optionally a small multiple of
        // the fractional part of theta (irrational when the field has one).
        Rational u(num(rng), 64);
        AlgebraicNumber x = field->element(u);
        if (force_irrational || (field->degree() > 1 && attempt % 2 == 0)) {
            if (field->degree() == 1) throw InputError("rational field has no irrational elements");
            std::uniform_int_distribution<long> scale(1, 16);
            AlgebraicNumber frac = field->theta().mod1();
            x = x + frac / Rational(scale(rng) * 4);
        }
        AlgebraicNumber candidate = lo + width * x;
        if (force_irrational && candidate.is_rational()) continue;
        if (lo < candidate && candidate < hi) return candidate;
    }
    throw InputError("random_in_range failed to produce a point; interval too small?");
}

Iet random_iet(Rng& rng, const FieldPtr& field, int max_intervals, bool irrational_cuts) {
    std::uniform_int_distribution<int> count(1, std::max(1, max_intervals));
    int r = count(rng);
    if (r == 1) return Iet::identity(field);

    std::vector<AlgebraicNumber> cuts{field->zero()};
    AlgebraicNumber one = field->one();
    for (int i = 0; i + 1 < r; ++i) {
        bool irrational = irrational_cuts && field->degree() > 1 && (rng() % 2 == 0);
        AlgebraicNumber cut = random_in_range(rng, field->zero(), one, irrational);
        cuts.push_back(cut);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<AlgebraicNumber> lengths;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        AlgebraicNumber end = i + 1 < cuts.size() ? cuts[i + 1] : one;
        lengths.push_back(end - cuts[i]);
    }
    return Iet::from_lengths_permutation(lengths, random_permutation(rng, static_cast<int>(lengths.size())));
}

GnElem random_gn(Rng& rng, const FieldPtr& field, int n) {
    std::vector<AlgebraicNumber> alpha;
    AlgebraicNumber block = field->element(Rational(1, n));
    for (int i = 0; i < n; ++i) {
        if (rng() % 4 == 0) {
            alpha.push_back(field->zero());
        } else {
            bool irrational = field->degree() > 1 && (rng() % 2 == 0);
            alpha.push_back(random_in_range(rng, field->zero(), block, irrational));
        }
    }
    return GnElem(n, std::move(alpha), random_permutation(rng, n));
}

Permutation random_permutation(Rng& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(std::move(images));
}

Permutation random_alternating(Rng& rng, int n) {
    for (;;) {
        Permutation p = random_permutation(rng, n);
        if (p.is_even()) return p;
    }
}

Word random_word(Rng& rng, const std::vector<std::string>& names, long max_length) {
    std::uniform_int_distribution<long> len(0, max_length);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    Word out;
    long target = len(rng);
    while (out.length() < target) out.append(names[pick(rng)], sign(rng) ? 1 : -1);
    return out;
}

std::vector<RestrictedRotation> random_disjoint_rotations(Rng& rng, const FieldPtr& field, int count,
                                                          bool irrational_angles) {
    // Rational support endpoints on a coarse grid, angles scaled into the
    // support length.
    std::uniform_int_distribution<int> grid_point(0, 24);
    std::vector<int> points;
    while (static_cast<int>(points.size()) < 2 * count) {
        int p = grid_point(rng);
        if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    std::vector<RestrictedRotation> parts;
    for (int i = 0; i < count; ++i) {
        AlgebraicNumber a = field->element(Rational(points[static_cast<std::size_t>(2 * i)], 25));
        AlgebraicNumber b = field->element(Rational(points[static_cast<std::size_t>(2 * i + 1)], 25));
        AlgebraicNumber angle = random_in_range(rng, field->zero(), b - a, irrational_angles);
        parts.push_back({angle, a, b});
    }
    return parts;
}

}  // namespace ietlab::sampling
