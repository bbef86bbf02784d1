#include "ietlab/piecewise_affine.hpp"

#include <algorithm>
#include <sstream>

#include "ietlab/iet.hpp"

namespace ietlab {

PiecewiseAffine PiecewiseAffine::identity(const FieldPtr& field) {
    return create({field->zero()}, {{field->one(), field->zero()}});
}

PiecewiseAffine PiecewiseAffine::create(std::vector<AlgebraicNumber> cuts, std::vector<Piece> pieces) {
    if (cuts.empty() || cuts.size() != pieces.size())
        throw IetError("piecewise-affine map needs matching nonempty cuts/pieces");
    FieldPtr field = cuts[0].field();
    AlgebraicNumber zero = field->zero();
    AlgebraicNumber one = field->one();
    if (cuts[0] != zero) throw IetError("the first cut must be 0");
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (!(cuts[i] < cuts[i + 1])) throw IetError("cuts must be strictly increasing");
    if (!(cuts.back() < one)) throw IetError("cuts must lie in [0, 1)");
    for (const auto& piece : pieces)
        if (!(zero < piece.slope)) throw IetError("slopes must be positive");

    // Image intervals must tile [0, 1).
    struct Image {
        AlgebraicNumber start;
        int index;
    };
    std::vector<Image> images;
    images.reserve(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i)
        images.push_back({pieces[i].slope * cuts[i] + pieces[i].intercept, static_cast<int>(i)});
    std::sort(images.begin(), images.end(),
              [](const Image& a, const Image& b) { return a.start < b.start; });
    AlgebraicNumber expected = zero;
    for (const auto& img : images) {
        if (img.start != expected) throw IetError("affine images do not tile [0, 1)");
        std::size_t i = static_cast<std::size_t>(img.index);
        AlgebraicNumber end = (i + 1 < cuts.size()) ? cuts[i + 1] : one;
        expected = pieces[i].slope * end + pieces[i].intercept;
    }
    if (expected != one) throw IetError("affine images do not tile [0, 1)");

    std::vector<AlgebraicNumber> ccuts;
    std::vector<Piece> cpieces;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (!cpieces.empty() && cpieces.back().slope == pieces[i].slope &&
            cpieces.back().intercept == pieces[i].intercept)
            continue;
        ccuts.push_back(cuts[i]);
        cpieces.push_back(pieces[i]);
    }

    PiecewiseAffine out;
    out.field_ = field;
    out.cuts_ = std::move(ccuts);
    out.pieces_ = std::move(cpieces);
    return out;
}

PiecewiseAffine PiecewiseAffine::from_iet(const Iet& f) {
    std::vector<Piece> pieces;
    pieces.reserve(f.translations().size());
    AlgebraicNumber one = f.field()->one();
    for (const auto& t : f.translations()) pieces.push_back({one, t});
    return create(f.cuts(), std::move(pieces));
}

AlgebraicNumber PiecewiseAffine::interval_end(int i) const {
    std::size_t idx = static_cast<std::size_t>(i);
    return idx + 1 < cuts_.size() ? cuts_[idx + 1] : field_->one();
}

int PiecewiseAffine::interval_index(const AlgebraicNumber& x) const {
    int lo = 0;
    int hi = static_cast<int>(cuts_.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (cuts_[static_cast<std::size_t>(mid)] <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

AlgebraicNumber PiecewiseAffine::evaluate(const AlgebraicNumber& x) const {
    if (x.field() != field_) throw FieldError("mixed fields");
    if (x.sign() < 0 || !(x < field_->one())) throw IetError("argument out of [0, 1)");
    const Piece& piece = pieces_[static_cast<std::size_t>(interval_index(x))];
    return piece.slope * x + piece.intercept;
}

PiecewiseAffine PiecewiseAffine::after(const PiecewiseAffine& g) const {
    if (field_ != g.field_) throw FieldError("mixed fields");
    PiecewiseAffine ginv = g.inverse();
    std::vector<AlgebraicNumber> cand = g.cuts_;
    for (const auto& c : cuts_) cand.push_back(ginv.evaluate(c));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<Piece> pieces;
    pieces.reserve(cand.size());
    for (const auto& u : cand) {
        const Piece& pg = g.pieces_[static_cast<std::size_t>(g.interval_index(u))];
        AlgebraicNumber y = pg.slope * u + pg.intercept;
        const Piece& pf = pieces_[static_cast<std::size_t>(interval_index(y))];
        // f(g(x)) = mf*(mg*x + bg) + bf
        pieces.push_back({pf.slope * pg.slope, pf.slope * pg.intercept + pf.intercept});
    }
    return create(std::move(cand), std::move(pieces));
}

PiecewiseAffine PiecewiseAffine::inverse() const {
    struct Image {
        AlgebraicNumber start;
        int index;
    };
    std::vector<Image> images;
    images.reserve(cuts_.size());
    for (std::size_t i = 0; i < cuts_.size(); ++i)
        images.push_back({pieces_[i].slope * cuts_[i] + pieces_[i].intercept, static_cast<int>(i)});
    std::sort(images.begin(), images.end(),
              [](const Image& a, const Image& b) { return a.start < b.start; });
    std::vector<AlgebraicNumber> cuts;
    std::vector<Piece> pieces;
    for (const auto& img : images) {
        const Piece& p = pieces_[static_cast<std::size_t>(img.index)];
        // y = m x + b  =>  x = y/m - b/m
        AlgebraicNumber inv_slope = p.slope.inverse();
        cuts.push_back(img.start);
        pieces.push_back({inv_slope, -(p.intercept * inv_slope)});
    }
    return create(std::move(cuts), std::move(pieces));
}

bool PiecewiseAffine::is_continuous() const {
    for (std::size_t i = 0; i + 1 < cuts_.size(); ++i) {
        AlgebraicNumber at_cut = pieces_[i].slope * cuts_[i + 1] + pieces_[i].intercept;
        AlgebraicNumber next = pieces_[i + 1].slope * cuts_[i + 1] + pieces_[i + 1].intercept;
        if (at_cut != next) return false;
    }
    return true;
}

bool PiecewiseAffine::is_identity() const {
    return cuts_.size() == 1 && pieces_[0].slope == field_->one() && pieces_[0].intercept.is_zero();
}

bool PiecewiseAffine::operator==(const PiecewiseAffine& o) const {
    if (field_ != o.field_) throw FieldError("mixed fields");
    if (cuts_.size() != o.cuts_.size()) return false;
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
        if (cuts_[i] != o.cuts_[i]) return false;
        if (pieces_[i].slope != o.pieces_[i].slope) return false;
        if (pieces_[i].intercept != o.pieces_[i].intercept) return false;
    }
    return true;
}

std::string PiecewiseAffine::str() const {
    std::ostringstream out;
    out << "pl {";
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
        if (i) out << ";";
        out << " [" << cuts_[i].str() << ", " << interval_end(static_cast<int>(i)).str() << "): "
            << pieces_[i].slope.str() << "*x + " << pieces_[i].intercept.str();
    }
    out << " }";
    return out.str();
}

}  // namespace ietlab
