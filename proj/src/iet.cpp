#include "ietlab/iet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ietlab {

namespace {

struct ImagePiece {
    AlgebraicNumber start;
    int index;
};

}  // namespace

Iet Iet::identity(const FieldPtr& field) {
    return create({field->zero()}, {field->zero()});
}

Iet Iet::create(std::vector<AlgebraicNumber> cuts, std::vector<AlgebraicNumber> translations) {
    if (cuts.empty()) throw IetError("an IET needs at least one interval");
    if (cuts.size() != translations.size()) throw IetError("cuts and translations sizes differ");
    FieldPtr field = cuts[0].field();
    for (const auto& c : cuts)
        if (c.field() != field) throw FieldError("mixed fields");
    for (const auto& t : translations)
        if (t.field() != field) throw FieldError("mixed fields");

    AlgebraicNumber zero = field->zero();
    AlgebraicNumber one = field->one();
    if (cuts[0] != zero) throw IetError("the first cut must be 0");
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (!(cuts[i] < cuts[i + 1])) throw IetError("cuts must be strictly increasing");
    if (!(cuts.back() < one)) throw IetError("cuts must lie in [0, 1)");

    // The translated intervals must tile [0, 1).
    std::vector<ImagePiece> pieces;
    pieces.reserve(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i)
        pieces.push_back({cuts[i] + translations[i], static_cast<int>(i)});
    std::sort(pieces.begin(), pieces.end(), [](const ImagePiece& a, const ImagePiece& b) {
        return a.start < b.start;
    });
    AlgebraicNumber expected = zero;
    for (const auto& piece : pieces) {
        if (piece.start != expected) {
            if (piece.start < expected) throw IetError("image intervals overlap: not a bijection");
            throw IetError("image intervals leave a gap: not a bijection");
        }
        std::size_t i = static_cast<std::size_t>(piece.index);
        AlgebraicNumber end = (i + 1 < cuts.size()) ? cuts[i + 1] : one;
        expected = end + translations[i];
    }
    if (expected != one) throw IetError("image intervals do not cover [0, 1): not a bijection");

    // Canonical form: merge adjacent intervals with equal translations.
    std::vector<AlgebraicNumber> ccuts;
    std::vector<AlgebraicNumber> ctrans;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (!ctrans.empty() && ctrans.back() == translations[i]) continue;
        ccuts.push_back(cuts[i]);
        ctrans.push_back(translations[i]);
    }

    Iet out;
    out.field_ = field;
    out.cuts_ = std::move(ccuts);
    out.translations_ = std::move(ctrans);
    return out;
}

Iet Iet::rotation(const AlgebraicNumber& angle) {
    const FieldPtr& field = angle.field();
    AlgebraicNumber a = angle.mod1();
    if (a.is_zero()) return identity(field);
    AlgebraicNumber one = field->one();
    return create({field->zero(), one - a}, {a, a - one});
}

Iet Iet::restricted_rotation(const AlgebraicNumber& angle, const AlgebraicNumber& a,
                             const AlgebraicNumber& b) {
    return product_of_restricted_rotations({{angle, a, b}});
}

Iet Iet::product_of_restricted_rotations(const std::vector<RestrictedRotation>& parts) {
    if (parts.empty()) throw IetError("empty product of restricted rotations");
    const FieldPtr& field = parts[0].angle.field();
    AlgebraicNumber zero = field->zero();
    AlgebraicNumber one = field->one();

    std::vector<RestrictedRotation> sorted = parts;
    std::sort(sorted.begin(), sorted.end(),
              [](const RestrictedRotation& x, const RestrictedRotation& y) { return x.a < y.a; });

    std::vector<AlgebraicNumber> cuts;
    std::vector<AlgebraicNumber> trans;
    AlgebraicNumber pos = zero;
    for (const auto& part : sorted) {
        if (!(zero <= part.a) || !(part.a < part.b) || !(part.b <= one))
            throw IetError("restricted rotation support must be a nonempty subinterval of [0, 1)");
        if (part.a < pos) throw IetError("restricted rotation supports overlap");
        AlgebraicNumber len = part.b - part.a;
        if (!(zero <= part.angle) || !(part.angle < len))
            throw IetError("restricted rotation angle must lie in [0, |support|)");
        if (pos < part.a) {
            cuts.push_back(pos);
            trans.push_back(zero);
        }
        if (part.angle.is_zero()) {
            cuts.push_back(part.a);
            trans.push_back(zero);
        } else {
            cuts.push_back(part.a);
            trans.push_back(part.angle);
            cuts.push_back(part.b - part.angle);
            trans.push_back(part.angle - len);
        }
        pos = part.b;
    }
    if (pos < one) {
        cuts.push_back(pos);
        trans.push_back(zero);
    }
    return create(std::move(cuts), std::move(trans));
}

Iet Iet::from_lengths_permutation(const std::vector<AlgebraicNumber>& lengths, const Permutation& perm) {
    if (lengths.empty() || static_cast<int>(lengths.size()) != perm.size())
        throw IetError("lengths/permutation sizes differ");
    const FieldPtr& field = lengths[0].field();
    AlgebraicNumber zero = field->zero();
    for (const auto& len : lengths)
        if (!(zero < len)) throw IetError("interval lengths must be positive");

    std::size_t n = lengths.size();
    // Source left endpoints.
    std::vector<AlgebraicNumber> cuts;
    cuts.reserve(n);
    AlgebraicNumber pos = zero;
    for (std::size_t i = 0; i < n; ++i) {
        cuts.push_back(pos);
        pos = pos + lengths[i];
    }
    if (pos != field->one()) throw IetError("interval lengths must sum to 1");
    // Image left endpoint of interval i: total length of intervals placed
    // before it in the image order.
    std::vector<AlgebraicNumber> image_start(n, zero);
    std::vector<int> by_rank(n);
    for (std::size_t i = 0; i < n; ++i) by_rank[static_cast<std::size_t>(perm(static_cast<int>(i)))] = static_cast<int>(i);
    pos = zero;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t i = static_cast<std::size_t>(by_rank[r]);
        image_start[i] = pos;
        pos = pos + lengths[i];
    }
    std::vector<AlgebraicNumber> trans;
    trans.reserve(n);
    for (std::size_t i = 0; i < n; ++i) trans.push_back(image_start[i] - cuts[i]);
    return create(std::move(cuts), std::move(trans));
}

AlgebraicNumber Iet::interval_end(int i) const {
    std::size_t idx = static_cast<std::size_t>(i);
    return idx + 1 < cuts_.size() ? cuts_[idx + 1] : field_->one();
}

int Iet::interval_index(const AlgebraicNumber& x) const {
    // Last cut <= x.
    int lo = 0;
    int hi = interval_count() - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (cuts_[static_cast<std::size_t>(mid)] <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

AlgebraicNumber Iet::evaluate(const AlgebraicNumber& x) const {
    if (x.field() != field_) throw FieldError("mixed fields");
    if (x.sign() < 0 || !(x < field_->one())) throw IetError("argument out of [0, 1)");
    int i = interval_index(x);
    return x + translations_[static_cast<std::size_t>(i)];
}

Iet Iet::after(const Iet& g) const {
    if (field_ != g.field_) throw FieldError("mixed fields");
    // Candidate cuts: BP(g) together with g^{-1}(BP(f)).
    Iet ginv = g.inverse();
    std::vector<AlgebraicNumber> cand = g.cuts_;
    for (const auto& c : cuts_) cand.push_back(ginv.evaluate(c));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<AlgebraicNumber> trans;
    trans.reserve(cand.size());
    for (const auto& u : cand) {
        int gi = g.interval_index(u);
        AlgebraicNumber y = u + g.translations_[static_cast<std::size_t>(gi)];
        int fi = interval_index(y);
        trans.push_back(g.translations_[static_cast<std::size_t>(gi)] +
                        translations_[static_cast<std::size_t>(fi)]);
    }
    return create(std::move(cand), std::move(trans));
}

Iet Iet::inverse() const {
    std::vector<ImagePiece> pieces;
    pieces.reserve(cuts_.size());
    for (std::size_t i = 0; i < cuts_.size(); ++i)
        pieces.push_back({cuts_[i] + translations_[i], static_cast<int>(i)});
    std::sort(pieces.begin(), pieces.end(), [](const ImagePiece& a, const ImagePiece& b) {
        return a.start < b.start;
    });
    std::vector<AlgebraicNumber> cuts;
    std::vector<AlgebraicNumber> trans;
    cuts.reserve(pieces.size());
    trans.reserve(pieces.size());
    for (const auto& piece : pieces) {
        cuts.push_back(piece.start);
        trans.push_back(-translations_[static_cast<std::size_t>(piece.index)]);
    }
    return create(std::move(cuts), std::move(trans));
}

Iet Iet::power(long n) const {
    if (n == 0) return identity(field_);
    Iet base = n < 0 ? inverse() : *this;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Iet out = identity(field_);
    while (k > 0) {
        if (k & 1) out = out.after(base);
        if (k >>= 1) base = base.after(base);
    }
    return out;
}

std::vector<AlgebraicNumber> Iet::translation_set() const {
    std::vector<AlgebraicNumber> out = translations_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntervalSet Iet::fixed_set() const {
    std::vector<IntervalSet::Interval> parts;
    for (std::size_t i = 0; i < cuts_.size(); ++i)
        if (translations_[i].is_zero()) parts.emplace_back(cuts_[i], interval_end(static_cast<int>(i)));
    return IntervalSet(std::move(parts));
}

IntervalSet Iet::support() const {
    return fixed_set().complement(field_);
}

bool Iet::is_identity() const {
    return cuts_.size() == 1 && translations_[0].is_zero();
}

bool Iet::operator==(const Iet& o) const {
    if (field_ != o.field_) throw FieldError("mixed fields");
    return cuts_.size() == o.cuts_.size() &&
           std::equal(cuts_.begin(), cuts_.end(), o.cuts_.begin()) &&
           std::equal(translations_.begin(), translations_.end(), o.translations_.begin());
}

int Iet::struct_compare(const Iet& a, const Iet& b) {
    if (a.cuts_.size() != b.cuts_.size()) return a.cuts_.size() < b.cuts_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.cuts_.size(); ++i) {
        int c = AlgebraicNumber::struct_compare(a.cuts_[i], b.cuts_[i]);
        if (c != 0) return c;
    }
    for (std::size_t i = 0; i < a.translations_.size(); ++i) {
        int c = AlgebraicNumber::struct_compare(a.translations_[i], b.translations_[i]);
        if (c != 0) return c;
    }
    return 0;
}

LengthsPermutation Iet::lengths_permutation() const {
    LengthsPermutation out;
    std::size_t n = cuts_.size();
    out.lengths.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.lengths.push_back(interval_end(static_cast<int>(i)) - cuts_[i]);
    std::vector<ImagePiece> pieces;
    pieces.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pieces.push_back({cuts_[i] + translations_[i], static_cast<int>(i)});
    std::sort(pieces.begin(), pieces.end(),
              [](const ImagePiece& a, const ImagePiece& b) { return a.start < b.start; });
    std::vector<int> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[static_cast<std::size_t>(pieces[r].index)] = static_cast<int>(r);
    out.perm = Permutation::from_images(std::move(rank));
    return out;
}

std::optional<std::vector<RestrictedRotation>> Iet::as_restricted_rotation_product() const {
    std::vector<RestrictedRotation> parts;
    AlgebraicNumber zero = field_->zero();
    std::size_t i = 0;
    while (i < cuts_.size()) {
        const AlgebraicNumber& t = translations_[i];
        if (t.is_zero()) {
            ++i;
            continue;
        }
        if (t.sign() < 0) return std::nullopt;
        if (i + 1 >= cuts_.size()) return std::nullopt;
        // Support [a, b) with angle t: the right piece starts at b - t and
        // translates by t - (b - a).
        AlgebraicNumber a = cuts_[i];
        AlgebraicNumber b = cuts_[i + 1] + t;
        AlgebraicNumber end_next = interval_end(static_cast<int>(i) + 1);
        if (end_next != b) return std::nullopt;
        if (translations_[i + 1] != t - (b - a)) return std::nullopt;
        parts.push_back({t, a, b});
        i += 2;
    }
    return parts;
}

std::string Iet::str() const {
    std::ostringstream out;
    out << "iet { cuts: [";
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
        if (i) out << ", ";
        out << cuts_[i].str();
    }
    out << "]; translations: [";
    for (std::size_t i = 0; i < translations_.size(); ++i) {
        if (i) out << ", ";
        out << translations_[i].str();
    }
    out << "] }";
    return out.str();
}

Iet commutator(const Iet& f, const Iet& g) {
    return f.after(g).after(f.inverse()).after(g.inverse());
}

bool commute_check(const Iet& f, const Iet& g) {
    return commutator(f, g).is_identity();
}

}  // namespace ietlab
