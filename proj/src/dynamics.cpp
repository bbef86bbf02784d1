#include "ietlab/dynamics.hpp"

#include <algorithm>
#include <deque>

namespace ietlab {

OrbitResult orbit(const Iet& f, const AlgebraicNumber& x, long depth) {
    if (depth < 0) throw InputError("orbit depth must be >= 0");
    OrbitResult out;
    out.points.reserve(static_cast<std::size_t>(depth) + 1);
    out.points.push_back(x);
    AlgebraicNumber y = x;
    for (long k = 1; k <= depth; ++k) {
        y = f.evaluate(y);
        out.points.push_back(y);
        if (!out.period && y == x) out.period = k;
    }
    return out;
}

GrowthTrace bp_growth(const Iet& f, long depth) {
    if (depth < 1) throw InputError("growth depth must be >= 1");
    GrowthTrace trace;
    trace.counts.reserve(static_cast<std::size_t>(depth));
    Iet g = f;
    trace.counts.push_back(g.break_point_count());
    for (long k = 2; k <= depth; ++k) {
        g = f.after(g);
        trace.counts.push_back(g.break_point_count());
    }
    long window = (depth + 2) / 3;
    std::size_t begin = trace.counts.size() - static_cast<std::size_t>(window);
    bool all_equal = true;
    bool strictly_increasing = true;
    for (std::size_t i = begin; i + 1 < trace.counts.size(); ++i) {
        if (trace.counts[i] != trace.counts[i + 1]) all_equal = false;
        if (trace.counts[i] >= trace.counts[i + 1]) strictly_increasing = false;
    }
    if (all_equal) {
        trace.verdict = GrowthTrace::Verdict::bounded;
        trace.bound = trace.counts.back();
    } else if (strictly_increasing) {
        trace.verdict = GrowthTrace::Verdict::growing;
    } else {
        trace.verdict = GrowthTrace::Verdict::inconclusive;
    }
    return trace;
}

Rational rate_estimate(const Iet& f, const AlgebraicNumber& x, long depth) {
    if (depth < 1) throw InputError("rate depth must be >= 1");
    std::vector<AlgebraicNumber> pts;
    pts.reserve(static_cast<std::size_t>(2 * depth) + 1);
    pts.push_back(x);
    AlgebraicNumber y = x;
    for (long k = 0; k < depth; ++k) {
        y = f.evaluate(y);
        pts.push_back(y);
    }
    Iet finv = f.inverse();
    y = x;
    for (long k = 0; k < depth; ++k) {
        y = finv.evaluate(y);
        pts.push_back(y);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<AlgebraicNumber> bp = f.power(depth).break_points();
    long hits = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < bp.size() && j < pts.size()) {
        int c = AlgebraicNumber::compare(bp[i], pts[j]);
        if (c == 0) {
            ++hits;
            ++i;
            ++j;
        } else if (c < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return Rational(hits, depth);
}

std::optional<std::vector<ReturnPiece>> first_return(const Iet& f, const AlgebraicNumber& a,
                                                     const AlgebraicNumber& b, long work_cap) {
    if (!(a < b)) throw InputError("first_return needs a < b");
    const FieldPtr& field = f.field();

    struct Segment {
        AlgebraicNumber left;
        AlgebraicNumber right;
        AlgebraicNumber translation;  // position = source + translation
        long steps;
    };
    std::deque<Segment> queue;
    queue.push_back({a, b, field->zero(), 0});
    std::vector<ReturnPiece> pieces;
    long work = 0;

    while (!queue.empty()) {
        Segment seg = std::move(queue.front());
        queue.pop_front();
        if (++work > work_cap) return std::nullopt;

        // Split the current position interval at the break points of f, then
        // push each continuity piece through one application.
        AlgebraicNumber left = seg.left;
        int idx = f.interval_index(left);
        while (left < seg.right) {
            AlgebraicNumber end = f.interval_end(idx);
            AlgebraicNumber right = std::min(seg.right, end);
            const AlgebraicNumber& t = f.translations()[static_cast<std::size_t>(idx)];
            AlgebraicNumber nl = left + t;
            AlgebraicNumber nr = right + t;
            AlgebraicNumber ntau = seg.translation + t;
            long ns = seg.steps + 1;

            // Portion landing back in [a, b) is done; the rest flows on.
            AlgebraicNumber mid_lo = std::max(nl, a);
            AlgebraicNumber mid_hi = std::min(nr, b);
            if (mid_lo < mid_hi)
                pieces.push_back({mid_lo - ntau, mid_hi - ntau, ntau, ns});
            if (nl < a) queue.push_back({nl, std::min(nr, a), ntau, ns});
            if (b < nr) queue.push_back({std::max(nl, b), nr, ntau, ns});

            left = right;
            ++idx;
        }
    }

    std::sort(pieces.begin(), pieces.end(),
              [](const ReturnPiece& x, const ReturnPiece& y) { return x.left < y.left; });
    // The sources must tile [a, b) exactly (the return map is a bijection).
    AlgebraicNumber expect = a;
    for (const auto& piece : pieces) {
        if (piece.left != expect) throw IetError("first-return pieces do not tile the base interval");
        expect = piece.right;
    }
    if (expect != b) throw IetError("first-return pieces do not tile the base interval");
    return pieces;
}

namespace {

// Maximal continuity-interval lengths of the return map (adjacent pieces
// with equal translation merged).
std::vector<AlgebraicNumber> return_map_lengths(const std::vector<ReturnPiece>& pieces) {
    std::vector<AlgebraicNumber> lengths;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0 && pieces[i].translation == pieces[i - 1].translation) {
            lengths.back() = lengths.back() + (pieces[i].right - pieces[i].left);
        } else {
            lengths.push_back(pieces[i].right - pieces[i].left);
        }
    }
    return lengths;
}

}  // namespace

ComponentReport decompose(const Iet& f, long depth, long work_cap) {
    if (depth < 1) throw InputError("decompose depth must be >= 1");
    const FieldPtr& field = f.field();
    if (work_cap <= 0)
        work_cap = 10 * static_cast<long>(f.break_point_count()) * f.break_point_count() * depth;

    ComponentReport report;
    report.depth = depth;
    IntervalSet remaining = IntervalSet::unit(field);

    // Periodic components: new fixed intervals of f^k have exact period k;
    // saturate each under f to collect its full orbit.
    Iet fk = f;
    for (long k = 1; k <= depth; ++k) {
        if (k > 1) fk = f.after(fk);
        IntervalSet fresh = fk.fixed_set().intersect(remaining);
        while (!fresh.empty()) {
            IntervalSet comp({fresh.intervals().front()});
            for (long j = 1; j < k; ++j) comp = comp.unite(comp.image_under(f));
            if (comp.image_under(f) != comp)
                throw IetError("periodic component failed exact invariance check");
            report.periodic.push_back({comp, k});
            remaining = remaining.subtract(comp);
            fresh = fresh.subtract(comp);
        }
        if (remaining.empty()) break;
    }

    // Minimal blocks: saturate the leftmost unresolved piece (refined at the
    // break points of f) until exactly invariant, then certify via the
    // first-return map.
    while (!remaining.empty()) {
        auto [a, b] = remaining.intervals().front();
        for (const auto& cut : f.cuts()) {
            if (a < cut && cut < b) {
                b = cut;
                break;
            }
        }
        IntervalSet block({{a, b}});
        bool invariant = false;
        for (long step = 0; step <= work_cap; ++step) {
            IntervalSet image = block.image_under(f);
            if (image.subset_of(block)) {
                invariant = true;
                break;
            }
            block = block.unite(image);
        }
        if (!invariant) {
            report.residual = report.residual.unite(remaining);
            break;
        }

        auto status = ComponentReport::MinimalStatus::heuristic;
        const auto& base = block.intervals().front();
        auto pieces = first_return(f, base.first, base.second, work_cap);
        if (!pieces) {
            report.residual = report.residual.unite(block);
            remaining = remaining.subtract(block);
            continue;
        }
        std::vector<AlgebraicNumber> lengths = return_map_lengths(*pieces);
        if (lengths.size() >= 2 && q_linear_rank(lengths) == static_cast<int>(lengths.size()))
            status = ComponentReport::MinimalStatus::certified;
        if (block.image_under(f) != block)
            throw IetError("minimal component failed exact invariance check");
        report.minimal.push_back({block, status, depth});
        remaining = remaining.subtract(block);
    }
    return report;
}

std::optional<PlNormalization> pl_normalize(const Iet& f) {
    auto parts = f.as_restricted_rotation_product();
    if (!parts) return std::nullopt;
    const FieldPtr& field = f.field();
    AlgebraicNumber zero = field->zero();
    AlgebraicNumber one = field->one();

    // Blocks: supports and the maximal fixed gaps between them, left to right.
    std::vector<PlBlock> blocks;
    AlgebraicNumber pos = zero;
    for (const auto& part : *parts) {
        if (pos < part.a) blocks.push_back({pos, part.a, false, zero});
        blocks.push_back({part.a, part.b, true, part.angle});
        pos = part.b;
    }
    if (pos < one) blocks.push_back({pos, one, false, zero});

    int n = static_cast<int>(blocks.size());
    std::vector<AlgebraicNumber> cuts;
    std::vector<PiecewiseAffine::Piece> pl_pieces;
    std::vector<AlgebraicNumber> alpha;
    for (int i = 0; i < n; ++i) {
        const PlBlock& block = blocks[static_cast<std::size_t>(i)];
        AlgebraicNumber len = block.right - block.left;
        AlgebraicNumber slope = field->element(Rational(1, n)) / len;
        AlgebraicNumber target_left = field->element(Rational(i, n));
        cuts.push_back(block.left);
        pl_pieces.push_back({slope, target_left - block.left * slope});
        alpha.push_back(block.is_support ? block.angle * slope : zero);
    }
    PiecewiseAffine pl = PiecewiseAffine::create(std::move(cuts), std::move(pl_pieces));
    GnElem image(n, std::move(alpha), Permutation::identity(n));

    // Exact piecewise-affine identity P o f o P^{-1} = embed(image).
    PiecewiseAffine lhs = pl.after(PiecewiseAffine::from_iet(f)).after(pl.inverse());
    PiecewiseAffine rhs = PiecewiseAffine::from_iet(gn_embed(image));
    if (lhs != rhs) throw IetError("PL normalization failed its exact conjugation check");
    return PlNormalization{std::move(pl), std::move(image), std::move(blocks)};
}

PeriodicSearchResult periodic_points_up_to(const Iet& f, long depth) {
    if (depth < 1) throw InputError("periodic search depth must be >= 1");
    PeriodicSearchResult result;
    result.searched = depth;

    Iet fk = f;
    for (long k = 1; k <= depth; ++k) {
        if (k > 1) fk = f.after(fk);
        IntervalSet fix = fk.fixed_set();
        if (!fix.empty()) {
            result.kind = PeriodicSearchResult::Kind::found;
            result.period = k;
            result.set = fix;
            return result;
        }
    }

    // Block-rotation certificate: recognize f in some G_n and decide
    // periodicity from cycle-sum rationality.
    for (int n = 1; n <= 2 * f.interval_count() + 2; ++n) {
        auto gn = gn_recognize(n, f);
        if (!gn) continue;
        if (gn_periodic_point_free(*gn)) {
            result.kind = PeriodicSearchResult::Kind::certified_none;
            result.certificate =
                "element of G_" + std::to_string(n) + " with irrational cycle sums";
            return result;
        }
        // Rational cycles force periodic points; report the minimal period.
        long best = 0;
        for (const auto& cycle : gn->sigma().cycles()) {
            AlgebraicNumber total = f.field()->zero();
            for (int i : cycle) total = total + gn->alpha()[static_cast<std::size_t>(i)];
            if (!total.is_rational()) continue;
            Rational turns = total.rational_value() * Rational(n);
            long q = turns == 0 ? 1 : static_cast<long>(turns.get_den().get_si());
            long period = static_cast<long>(cycle.size()) * q;
            if (best == 0 || period < best) best = period;
        }
        if (best > 0 && best <= 100000) {
            result.kind = PeriodicSearchResult::Kind::found;
            result.period = best;
            result.set = f.power(best).fixed_set();
            return result;
        }
        break;
    }

    // Fully certified minimal decomposition rules out periodic points.
    ComponentReport report = decompose(f, depth);
    bool certified = report.periodic.empty() && report.residual.empty();
    for (const auto& m : report.minimal)
        if (m.status != ComponentReport::MinimalStatus::certified) certified = false;
    if (certified && !report.minimal.empty()) {
        result.kind = PeriodicSearchResult::Kind::certified_none;
        result.certificate = "independence certificate on every minimal component";
        return result;
    }

    result.kind = PeriodicSearchResult::Kind::none_up_to;
    return result;
}

}  // namespace ietlab
