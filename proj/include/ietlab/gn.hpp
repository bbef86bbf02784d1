#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ietlab/iet.hpp"
#include "ietlab/numfield.hpp"
#include "ietlab/permutation.hpp"

namespace ietlab {

/// An element of G_n: the IETs preserving the partition of [0, 1) into n
/// equal blocks and restricting to a two-interval exchange (a rotation) on
/// each block. Determined by the rotation vector alpha — one coordinate per
/// block on the circle of length 1/n, stored reduced into [0, 1/n) — and
/// the block permutation sigma. Composition follows
///   alpha_{f o g}[i] = alpha_f[sigma_g(i)] + alpha_g[i],
///   sigma_{f o g}    = sigma_f o sigma_g,
/// so structural equality of reduced data is equality of maps.
class GnElem {
public:
    GnElem(int n, std::vector<AlgebraicNumber> alpha, Permutation sigma);
    static GnElem identity(const FieldPtr& field, int n);

    int n() const { return n_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<AlgebraicNumber>& alpha() const { return alpha_; }
    const Permutation& sigma() const { return sigma_; }

    bool operator==(const GnElem& o) const;
    bool operator!=(const GnElem& o) const { return !(*this == o); }
    bool is_identity() const;

    std::string str() const;

private:
    int n_;
    FieldPtr field_;
    std::vector<AlgebraicNumber> alpha_;
    Permutation sigma_;
};

/// Exact composition in coordinates; matches IET-level composition under
/// gn_embed.
GnElem gn_compose(const GnElem& f, const GnElem& g);
GnElem gn_inverse(const GnElem& e);
GnElem gn_power(const GnElem& e, long k);

/// The IET acting as the rotation by alpha[i] on block i shifted onto block
/// sigma(i).
Iet gn_embed(const GnElem& e);

/// The unique GnElem with gn_embed(result) == f, when f lies in G_n.
std::optional<GnElem> gn_recognize(int n, const Iet& f);

/// True iff no power of the embedded element has a fixed point. Decided
/// exactly: the first return of e to a block in a sigma-cycle is the
/// rotation by the cycle sum of alpha on the circle of length 1/n, so a
/// periodic point exists iff some cycle sum is rational.
bool gn_periodic_point_free(const GnElem& e);

/// Least m >= 1 with e^m = identity, or nullopt for infinite order.
std::optional<Integer> gn_order(const GnElem& e);

}  // namespace ietlab
