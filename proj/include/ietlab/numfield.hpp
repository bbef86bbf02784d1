#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ietlab/error.hpp"
#include "ietlab/polynomial.hpp"
#include "ietlab/rational.hpp"

namespace ietlab {

class NumberField;
class AlgebraicNumber;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Defining data of a real number field Q(theta): a monic polynomial
/// irreducible over Q together with a rational interval isolating one of
/// its real roots.
struct FieldSpec {
    poly::Poly minimal_polynomial;  // c0 + c1 x + ... + x^d
    Rational lo;
    Rational hi;
};

/// A fixed real algebraic number field Q(theta), degree d >= 1.
///
/// Field values are represented on the power basis 1, theta, ...,
/// theta^(d-1) with rational coordinates, so equality is coefficient-wise
/// and all arithmetic is exact. Strict order comparisons refine the root
/// enclosure by bisection against the minimal polynomial until the interval
/// value of the tested expression excludes zero; the enclosure cache only
/// ever shrinks, so concurrent readers behave as if every sign were
/// recomputed from scratch.
///
/// Degree 1 degenerates to plain rational arithmetic (theta itself is the
/// rational root of the linear modulus).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr create(FieldSpec spec);

    /// Shipped presets: "rational" (Q), "sqrt2" (Q(2^(1/2))),
    /// "cbrt2" (Q(2^(1/3))), "quartic2" (Q(2^(1/4))).
    static FieldPtr preset(const std::string& name);
    static const std::vector<std::string>& preset_names();

    int degree() const { return degree_; }
    const poly::Poly& minimal_polynomial() const { return min_poly_; }
    /// False when the modulus was accepted under the documented trust
    /// assumption (degree > 4, or integer constants too large to factor).
    bool irreducibility_verified() const { return irreducibility_verified_; }
    const std::string& description() const { return description_; }

    AlgebraicNumber zero() const;
    AlgebraicNumber one() const;
    AlgebraicNumber theta() const;
    AlgebraicNumber element(const Rational& value) const;
    AlgebraicNumber element(std::vector<Rational> coeffs) const;

    /// Snapshot of the current root enclosure [lo, hi].
    std::pair<Rational, Rational> enclosure() const;
    /// Shrinks the enclosure until hi - lo <= width.
    void refine_enclosure(const Rational& width) const;

    /// Exact interval value of a coefficient vector over the current
    /// enclosure (interval Horner evaluation).
    std::pair<Rational, Rational> interval_value(const std::vector<Rational>& coeffs) const;

    // Internal arithmetic on coefficient vectors (always of size degree()).
    std::vector<Rational> reduce_product(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) const;
    std::vector<Rational> invert(const std::vector<Rational>& a) const;
    int sign_of(const std::vector<Rational>& coeffs) const;

private:
    NumberField() = default;

    void bisect_locked(int steps) const;

    int degree_ = 0;
    poly::Poly min_poly_;
    bool irreducibility_verified_ = false;
    std::string description_;
    // theta^k for k = d .. 2d-2 reduced to the power basis.
    std::vector<std::vector<Rational>> theta_powers_;

    mutable std::mutex mu_;
    mutable Rational lo_;
    mutable Rational hi_;
    int sign_at_lo_ = 0;
};

/// An element of a fixed Q(theta), kept in reduced (unique) form.
class AlgebraicNumber {
public:
    AlgebraicNumber();  // 0 in Q
    AlgebraicNumber(FieldPtr field, Rational value);
    AlgebraicNumber(FieldPtr field, long value);
    static AlgebraicNumber from_coeffs(FieldPtr field, std::vector<Rational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;
    int sign() const;

    AlgebraicNumber operator-() const;
    AlgebraicNumber operator+(const AlgebraicNumber& o) const;
    AlgebraicNumber operator-(const AlgebraicNumber& o) const;
    AlgebraicNumber operator*(const AlgebraicNumber& o) const;
    AlgebraicNumber operator/(const AlgebraicNumber& o) const;
    AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
    AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
    AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
    AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }

    AlgebraicNumber operator+(const Rational& r) const;
    AlgebraicNumber operator-(const Rational& r) const;
    AlgebraicNumber operator*(const Rational& r) const;
    AlgebraicNumber operator/(const Rational& r) const;

    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(long e) const;

    bool operator==(const AlgebraicNumber& o) const;
    bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }
    bool operator<(const AlgebraicNumber& o) const { return compare(*this, o) < 0; }
    bool operator<=(const AlgebraicNumber& o) const { return compare(*this, o) <= 0; }
    bool operator>(const AlgebraicNumber& o) const { return compare(*this, o) > 0; }
    bool operator>=(const AlgebraicNumber& o) const { return compare(*this, o) >= 0; }

    /// -1, 0, +1 consistent with the real embedding at theta; equality is
    /// decided by coefficient comparison, strict signs by enclosure
    /// refinement.
    static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

    /// Structural total order on coefficient vectors (for container keys);
    /// unrelated to the value order.
    static int struct_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

    /// a = k + r with k integer and 0 <= r < 1, both exact.
    std::pair<Integer, AlgebraicNumber> floor_frac() const;
    /// Fractional part: floor_frac().second.
    AlgebraicNumber mod1() const { return floor_frac().second; }

    /// Canonical expression in t, e.g. "1/3 - 2*t + 5/7*t^3"; parses back
    /// to an equal element.
    std::string str() const;
    /// Reduced coefficient vector, e.g. "[1/3, -2, 0, 5/7]".
    std::string coeff_str() const;
    /// Approximate value for display only.
    double approx() const;

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

AlgebraicNumber operator+(const Rational& r, const AlgebraicNumber& a);
AlgebraicNumber operator-(const Rational& r, const AlgebraicNumber& a);
AlgebraicNumber operator*(const Rational& r, const AlgebraicNumber& a);

/// Throws FieldError when a and b live in different field contexts.
void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Rank over Q of the coefficient vectors of the given values (exact
/// Gaussian elimination). Values are Q-linearly independent iff the rank
/// equals their count. Empty input has rank 0.
int q_linear_rank(const std::vector<AlgebraicNumber>& values);

}  // namespace ietlab
