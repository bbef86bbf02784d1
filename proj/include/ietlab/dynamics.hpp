#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ietlab/gn.hpp"
#include "ietlab/iet.hpp"
#include "ietlab/interval_set.hpp"
#include "ietlab/piecewise_affine.hpp"

namespace ietlab {

struct OrbitResult {
    std::vector<AlgebraicNumber> points;  // x, f(x), ..., f^N(x)
    std::optional<long> period;           // least k <= N with f^k(x) = x
};

/// Exact forward orbit to depth N.
OrbitResult orbit(const Iet& f, const AlgebraicNumber& x, long depth);

struct GrowthTrace {
    enum class Verdict { bounded, growing, inconclusive };
    std::vector<long> counts;  // #BP(f^k) for k = 1..N
    Verdict verdict;
    long bound = 0;  // stabilized value when verdict == bounded
};

/// Exact break-point counts of the iterates; the verdict inspects the last
/// ceil(N/3) counts: all equal -> bounded, strictly increasing -> growing,
/// anything else -> inconclusive.
GrowthTrace bp_growth(const Iet& f, long depth);

/// Finite-depth estimate #{BP(f^N) and the orbit of x explored to depth N}/N
/// as an exact rational. The orbit is taken forward and backward (the full
/// group orbit truncated at depth N).
Rational rate_estimate(const Iet& f, const AlgebraicNumber& x, long depth);

/// First-return map of f to [a, b): source pieces with their return
/// translation and return time. Pieces tile [a, b) when the computation
/// completes; nullopt when the work cap is exceeded.
struct ReturnPiece {
    AlgebraicNumber left;
    AlgebraicNumber right;
    AlgebraicNumber translation;
    long steps;
};
std::optional<std::vector<ReturnPiece>> first_return(const Iet& f, const AlgebraicNumber& a,
                                                     const AlgebraicNumber& b, long work_cap);

struct ComponentReport {
    struct PeriodicComponent {
        IntervalSet set;
        long period;
    };
    enum class MinimalStatus { certified, heuristic };
    struct MinimalComponent {
        IntervalSet set;
        MinimalStatus status;
        long depth;  // exploration depth backing a heuristic label
    };
    std::vector<PeriodicComponent> periodic;
    std::vector<MinimalComponent> minimal;
    IntervalSet residual;  // undecided at the explored depth
    long depth = 0;
};

/// Decomposition of [0, 1) into periodic and minimal pieces. Periodic
/// components are found exactly by scanning Fix(f^k) for k <= depth and
/// saturating under f. Each remaining invariant block is built by exact
/// orbit saturation; minimality is certified when the block's first-return
/// map has >= 2 maximal continuity intervals with Q-independent lengths
/// (independence certificate on first-return maps), otherwise the block is
/// labeled heuristic. Saturations and first returns run under a work cap
/// (default 10 * #BP(f)^2 * depth); exceeding it moves the remainder to
/// `residual`. Every reported component is verified f-invariant exactly.
ComponentReport decompose(const Iet& f, long depth, long work_cap = 0);

struct PlBlock {
    AlgebraicNumber left;
    AlgebraicNumber right;
    bool is_support;          // support of a restricted rotation vs fixed gap
    AlgebraicNumber angle;    // rotation angle for support blocks, else 0
};

struct PlNormalization {
    PiecewiseAffine pl;            // P with P(J_i) = [(i-1)/n, i/n), affine on each J_i
    GnElem image;                  // Phi = P o f o P^{-1}, sigma_Phi = id
    std::vector<PlBlock> blocks;   // the J_i, left to right
};

/// For f a product of restricted rotations with pairwise disjoint supports
/// (checked structurally): the PL conjugation onto a block-rotation element
/// of G_n, where the blocks are the supports and the fixed gaps between
/// them, enumerated left to right. The identity P o f o P^{-1} = embed(Phi)
/// is verified exactly as a piecewise-affine identity before returning.
std::optional<PlNormalization> pl_normalize(const Iet& f);

struct PeriodicSearchResult {
    enum class Kind { found, none_up_to, certified_none };
    Kind kind;
    long period = 0;        // minimal period when kind == found
    IntervalSet set;        // Fix(f^period) when kind == found
    long searched = 0;
    std::string certificate;  // reason when kind == certified_none
};

/// Scans Fix(f^k) for k <= depth; on failure tries to certify the absence
/// of periodic points, either by recognizing f in some G_n and testing
/// cycle-sum rationality, or by a fully certified minimal decomposition.
PeriodicSearchResult periodic_points_up_to(const Iet& f, long depth);

}  // namespace ietlab
