#include "ietlab/gn.hpp"

#include <numeric>
#include <sstream>

namespace ietlab {

namespace {

// Representative of a in the circle of length 1/n, i.e. a mod 1/n in [0, 1/n).
AlgebraicNumber reduce_mod_block(const AlgebraicNumber& a, int n) {
    AlgebraicNumber scaled = a * Rational(n);
    return scaled.mod1() / Rational(n);
}

}  // namespace

GnElem::GnElem(int n, std::vector<AlgebraicNumber> alpha, Permutation sigma)
    : n_(n), sigma_(std::move(sigma)) {
    if (n < 1) throw InputError("G_n needs n >= 1");
    if (static_cast<int>(alpha.size()) != n) throw InputError("rotation vector must have n entries");
    if (sigma_.size() != n) throw InputError("block permutation must have size n");
    field_ = alpha[0].field();
    alpha_.reserve(alpha.size());
    for (auto& a : alpha) {
        if (a.field() != field_) throw FieldError("mixed fields");
        alpha_.push_back(reduce_mod_block(a, n));
    }
}

GnElem GnElem::identity(const FieldPtr& field, int n) {
    return GnElem(n, std::vector<AlgebraicNumber>(static_cast<std::size_t>(n), field->zero()),
                  Permutation::identity(n));
}

bool GnElem::operator==(const GnElem& o) const {
    if (n_ != o.n_ || sigma_ != o.sigma_) return false;
    for (std::size_t i = 0; i < alpha_.size(); ++i)
        if (alpha_[i] != o.alpha_[i]) return false;
    return true;
}

bool GnElem::is_identity() const {
    if (!sigma_.is_identity()) return false;
    for (const auto& a : alpha_)
        if (!a.is_zero()) return false;
    return true;
}

std::string GnElem::str() const {
    std::ostringstream out;
    out << "gn { n: " << n_ << "; alpha: [";
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (i) out << ", ";
        out << alpha_[i].str();
    }
    out << "]; sigma: " << sigma_.str() << " }";
    return out.str();
}

GnElem gn_compose(const GnElem& f, const GnElem& g) {
    if (f.n() != g.n()) throw InputError("G_n composition: mismatched n");
    int n = f.n();
    std::vector<AlgebraicNumber> alpha;
    alpha.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        alpha.push_back(f.alpha()[static_cast<std::size_t>(g.sigma()(i))] +
                        g.alpha()[static_cast<std::size_t>(i)]);
    return GnElem(n, std::move(alpha), f.sigma() * g.sigma());
}

GnElem gn_inverse(const GnElem& e) {
    int n = e.n();
    Permutation inv = e.sigma().inverse();
    std::vector<AlgebraicNumber> alpha;
    alpha.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) alpha.push_back(-e.alpha()[static_cast<std::size_t>(inv(i))]);
    return GnElem(n, std::move(alpha), inv);
}

GnElem gn_power(const GnElem& e, long k) {
    GnElem base = k < 0 ? gn_inverse(e) : e;
    unsigned long m = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    GnElem out = GnElem::identity(e.field(), e.n());
    while (m > 0) {
        if (m & 1) out = gn_compose(out, base);
        if (m >>= 1) base = gn_compose(base, base);
    }
    return out;
}

Iet gn_embed(const GnElem& e) {
    const FieldPtr& field = e.field();
    int n = e.n();
    Rational block(1, n);
    std::vector<AlgebraicNumber> cuts;
    std::vector<AlgebraicNumber> trans;
    for (int i = 0; i < n; ++i) {
        AlgebraicNumber left = field->element(Rational(i, n));
        AlgebraicNumber right = field->element(Rational(i + 1, n));
        const AlgebraicNumber& a = e.alpha()[static_cast<std::size_t>(i)];
        AlgebraicNumber shift = field->element(Rational(e.sigma()(i) - i, n));
        if (a.is_zero()) {
            cuts.push_back(left);
            trans.push_back(shift);
        } else {
            cuts.push_back(left);
            trans.push_back(a + shift);
            cuts.push_back(right - a);
            trans.push_back(a - Rational(block) + shift);
        }
    }
    return Iet::create(std::move(cuts), std::move(trans));
}

std::optional<GnElem> gn_recognize(int n, const Iet& f) {
    if (n < 1) return std::nullopt;
    const FieldPtr& field = f.field();
    std::vector<AlgebraicNumber> alpha;
    std::vector<int> images;
    alpha.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        AlgebraicNumber y = f.evaluate(field->element(Rational(i, n)));
        // Block containing the image of the block's left endpoint.
        auto [k, frac] = (y * Rational(n)).floor_frac();
        if (k < 0 || k >= n) return std::nullopt;
        images.push_back(static_cast<int>(k.get_si()));
        alpha.push_back(frac / Rational(n));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
        if (seen[static_cast<std::size_t>(v)]) return std::nullopt;
        seen[static_cast<std::size_t>(v)] = true;
    }
    GnElem candidate(n, std::move(alpha), Permutation::from_images(std::move(images)));
    if (gn_embed(candidate) == f) return candidate;
    return std::nullopt;
}

namespace {

// Rotation amount of the first-return of e to each sigma-cycle: the sum of
// alpha over the cycle, reduced into the block circle.
std::vector<AlgebraicNumber> cycle_sums(const GnElem& e) {
    std::vector<AlgebraicNumber> sums;
    for (const auto& cycle : e.sigma().cycles()) {
        AlgebraicNumber total = e.field()->zero();
        for (int i : cycle) total = total + e.alpha()[static_cast<std::size_t>(i)];
        sums.push_back(total);
    }
    return sums;
}

}  // namespace

bool gn_periodic_point_free(const GnElem& e) {
    for (const auto& s : cycle_sums(e))
        if (s.is_rational()) return false;  // rational multiple of the block length
    return true;
}

std::optional<Integer> gn_order(const GnElem& e) {
    long sigma_order = e.sigma().order();
    GnElem power = gn_power(e, sigma_order);
    // power has trivial permutation; it is a block rotation by beta_i on
    // each block, of finite order iff every beta_i is rational.
    Integer order(sigma_order);
    Integer steps(1);
    for (const auto& beta : power.alpha()) {
        if (!beta.is_rational()) return std::nullopt;
        Rational turns = beta.rational_value() * Rational(e.n());  // in [0, 1)
        if (turns == 0) continue;
        mpz_lcm(steps.get_mpz_t(), steps.get_mpz_t(), turns.get_den_mpz_t());
    }
    return order * steps;
}

}  // namespace ietlab
