#include "ietlab/saf.hpp"

#include <sstream>

namespace ietlab {

bool SafValue::is_zero() const {
    for (const auto& row : matrix)
        for (const auto& entry : row)
            if (entry != 0) return false;
    return true;
}

SafValue SafValue::operator-() const {
    SafValue out = *this;
    for (auto& row : out.matrix)
        for (auto& entry : row) entry = -entry;
    return out;
}

SafValue SafValue::operator+(const SafValue& o) const {
    if (dimension() != o.dimension()) throw FieldError("SAF values over different fields");
    SafValue out = *this;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j) out.matrix[i][j] += o.matrix[i][j];
    return out;
}

std::string SafValue::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        if (i) out << "; ";
        out << "[";
        for (std::size_t j = 0; j < matrix[i].size(); ++j) {
            if (j) out << ", ";
            out << rational_to_string(matrix[i][j]);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

SafValue saf_invariant(const Iet& f) {
    std::size_t d = static_cast<std::size_t>(f.field()->degree());
    std::vector<std::vector<Rational>> bilinear(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < f.interval_count(); ++i) {
        AlgebraicNumber length = f.interval_end(i) - f.cuts()[static_cast<std::size_t>(i)];
        const AlgebraicNumber& translation = f.translations()[static_cast<std::size_t>(i)];
        const auto& lc = length.coeffs();
        const auto& tc = translation.coeffs();
        for (std::size_t r = 0; r < d; ++r) {
            if (lc[r] == 0) continue;
            for (std::size_t c = 0; c < d; ++c) {
                if (tc[c] == 0) continue;
                bilinear[r][c] += lc[r] * tc[c];
            }
        }
    }
    SafValue out;
    out.matrix.assign(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            out.matrix[r][c] = (bilinear[r][c] - bilinear[c][r]) / 2;
    return out;
}

ConjugacyVerdict saf_distinguish(const Iet& f, const Iet& g) {
    if (f.field() != g.field()) throw FieldError("mixed fields");
    return saf_invariant(f) == saf_invariant(g) ? ConjugacyVerdict::possibly_conjugate
                                                : ConjugacyVerdict::not_conjugate;
}

}  // namespace ietlab
