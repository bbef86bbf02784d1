#include "ietlab/numfield.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ietlab {

namespace {

// Exact interval product [a1,a2] * [b1,b2].
std::pair<Rational, Rational> interval_mul(const std::pair<Rational, Rational>& a,
                                           const std::pair<Rational, Rational>& b) {
    Rational p1 = a.first * b.first;
    Rational p2 = a.first * b.second;
    Rational p3 = a.second * b.first;
    Rational p4 = a.second * b.second;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}

}  // namespace

FieldPtr NumberField::create(FieldSpec spec) {
    poly::Poly p = poly::normalized(std::move(spec.minimal_polynomial));
    int d = poly::degree(p);
    if (d < 1) throw FieldError("minimal polynomial must have degree >= 1");
    if (p.back() != 1) throw FieldError("minimal polynomial must be monic");

    poly::Poly g = poly::gcd(p, poly::derivative(p));
    if (poly::degree(g) > 0) throw FieldError("minimal polynomial must be square-free");

    bool verified = false;
    switch (poly::irreducible_over_q(p)) {
        case poly::Irreducibility::irreducible:
            verified = true;
            break;
        case poly::Irreducibility::reducible:
            throw FieldError("minimal polynomial is reducible over Q");
        case poly::Irreducibility::unknown:
            verified = false;  // accepted under the documented trust assumption
            break;
    }

    auto field = std::shared_ptr<NumberField>(new NumberField());
    field->degree_ = d;
    field->min_poly_ = p;
    field->irreducibility_verified_ = verified;

    if (d == 1) {
        // theta = -c0 is rational; the enclosure is the exact point.
        field->lo_ = field->hi_ = -p[0];
        field->sign_at_lo_ = 0;
    } else {
        if (!(spec.lo < spec.hi)) throw FieldError("isolating interval must satisfy lo < hi");
        Rational at_lo = poly::eval(p, spec.lo);
        Rational at_hi = poly::eval(p, spec.hi);
        if (at_lo == 0 || at_hi == 0)
            throw FieldError("isolating interval endpoint is a root; shrink the interval");
        long roots = poly::count_roots(p, spec.lo, spec.hi);
        if (roots != 1)
            throw FieldError("isolating interval contains " + std::to_string(roots) +
                             " roots, expected exactly 1");
        field->lo_ = spec.lo;
        field->hi_ = spec.hi;
        field->sign_at_lo_ = sgn(at_lo);
    }

    // Precompute theta^d .. theta^(2d-2) on the power basis.
    if (d >= 2) {
        std::vector<Rational> power(static_cast<std::size_t>(d), Rational(0));
        for (int i = 0; i < d; ++i) power[static_cast<std::size_t>(i)] = -p[static_cast<std::size_t>(i)];
        field->theta_powers_.push_back(power);  // theta^d
        for (int k = d + 1; k <= 2 * d - 2; ++k) {
            std::vector<Rational> next(static_cast<std::size_t>(d), Rational(0));
            // multiply by theta: shift then reduce the overflowing term
            Rational top = power.back();
            for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = power[static_cast<std::size_t>(i - 1)];
            next[0] = 0;
            for (int i = 0; i < d; ++i)
                next[static_cast<std::size_t>(i)] += top * field->theta_powers_[0][static_cast<std::size_t>(i)];
            field->theta_powers_.push_back(next);
            power = std::move(next);
        }
    }

    std::ostringstream desc;
    desc << "Q(t), t root of";
    for (int i = 0; i <= d; ++i) {
        const Rational& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        desc << (i == 0 ? " " : " + ") << rational_to_string(c);
        if (i >= 1) desc << "*x^" << i;
    }
    field->description_ = desc.str();
    return field;
}

FieldPtr NumberField::preset(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;

    FieldSpec spec;
    if (name == "rational") {
        spec.minimal_polynomial = {Rational(0), Rational(1)};  // x, theta = 0
        spec.lo = Rational(-1);
        spec.hi = Rational(1);
    } else if (name == "sqrt2") {
        spec.minimal_polynomial = {Rational(-2), Rational(0), Rational(1)};
        spec.lo = Rational(1);
        spec.hi = Rational(2);
    } else if (name == "cbrt2") {
        spec.minimal_polynomial = {Rational(-2), Rational(0), Rational(0), Rational(1)};
        spec.lo = Rational(1);
        spec.hi = Rational(2);
    } else if (name == "quartic2") {
        spec.minimal_polynomial = {Rational(-2), Rational(0), Rational(0), Rational(0), Rational(1)};
        spec.lo = Rational(1);
        spec.hi = Rational(2);
    } else {
        throw InputError("unknown field preset '" + name + "' (available: rational, sqrt2, cbrt2, quartic2)");
    }
    FieldPtr field = create(std::move(spec));
    cache.emplace(name, field);
    return field;
}

const std::vector<std::string>& NumberField::preset_names() {
    static const std::vector<std::string> names{"rational", "sqrt2", "cbrt2", "quartic2"};
    return names;
}

AlgebraicNumber NumberField::zero() const {
    return element(Rational(0));
}

AlgebraicNumber NumberField::one() const {
    return element(Rational(1));
}

AlgebraicNumber NumberField::theta() const {
    std::vector<Rational> c(static_cast<std::size_t>(degree_), Rational(0));
    if (degree_ == 1)
        c[0] = -min_poly_[0];
    else
        c[1] = 1;
    return AlgebraicNumber::from_coeffs(shared_from_this(), std::move(c));
}

AlgebraicNumber NumberField::element(const Rational& value) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree_), Rational(0));
    c[0] = value;
    return AlgebraicNumber::from_coeffs(shared_from_this(), std::move(c));
}

AlgebraicNumber NumberField::element(std::vector<Rational> coeffs) const {
    return AlgebraicNumber::from_coeffs(shared_from_this(), std::move(coeffs));
}

std::pair<Rational, Rational> NumberField::enclosure() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {lo_, hi_};
}

void NumberField::bisect_locked(int steps) const {
    for (int s = 0; s < steps && lo_ < hi_; ++s) {
        Rational mid = (lo_ + hi_) / 2;
        int smid = sgn(poly::eval(min_poly_, mid));
        if (smid == 0) {
            // Only possible when the modulus was accepted on trust and is in
            // fact reducible with a rational root; collapse to the point.
            lo_ = hi_ = mid;
            return;
        }
        if (smid == sign_at_lo_)
            lo_ = mid;
        else
            hi_ = mid;
    }
}

void NumberField::refine_enclosure(const Rational& width) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (hi_ - lo_ > width) bisect_locked(1);
}

std::pair<Rational, Rational> NumberField::interval_value(const std::vector<Rational>& coeffs) const {
    auto [lo, hi] = enclosure();
    std::pair<Rational, Rational> x{lo, hi};
    std::pair<Rational, Rational> v{Rational(0), Rational(0)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        v = interval_mul(v, x);
        v.first += *it;
        v.second += *it;
    }
    return v;
}

std::vector<Rational> NumberField::reduce_product(const std::vector<Rational>& a,
                                                  const std::vector<Rational>& b) const {
    std::size_t d = static_cast<std::size_t>(degree_);
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<long>(d));
    for (std::size_t k = d; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const auto& power = theta_powers_[k - d];
        for (std::size_t i = 0; i < d; ++i) out[i] += prod[k] * power[i];
    }
    return out;
}

std::vector<Rational> NumberField::invert(const std::vector<Rational>& a) const {
    // Extended Euclid in Q[x]: u*a + v*minpoly = gcd; irreducibility makes
    // the gcd constant for nonzero a.
    poly::Poly r0 = min_poly_;
    poly::Poly r1 = poly::normalized(a);
    if (poly::is_zero(r1)) throw FieldError("division by zero");
    poly::Poly s0;                 // coefficient of `a` in r0
    poly::Poly s1{Rational(1)};    // coefficient of `a` in r1
    while (!poly::is_zero(r1)) {
        auto [q, r] = poly::divmod(r0, r1);
        poly::Poly s2 = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly::degree(r0) != 0)
        throw FieldError("zero divisor encountered; the field modulus is not irreducible");
    poly::Poly inv = poly::scale(s0, Rational(1) / r0[0]);
    std::vector<Rational> out(static_cast<std::size_t>(degree_), Rational(0));
    for (std::size_t i = 0; i < inv.size(); ++i) out[i] = inv[i];
    return out;
}

int NumberField::sign_of(const std::vector<Rational>& coeffs) const {
    bool nonconstant = false;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) {
            nonconstant = true;
            break;
        }
    if (!nonconstant) return sgn(coeffs.empty() ? Rational(0) : coeffs[0]);

    int steps = 8;
    for (int round = 0; round < 64; ++round) {
        auto [vlo, vhi] = interval_value(coeffs);
        if (vlo > 0) return 1;
        if (vhi < 0) return -1;
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (lo_ == hi_) {
                // Enclosure collapsed to an exact rational theta.
                Rational point(0);
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) point = point * lo_ + *it;
                return sgn(point);
            }
            bisect_locked(steps);
        }
        steps *= 2;
    }
    throw FieldError(
        "sign determination did not converge; the field modulus is likely reducible "
        "(it was accepted under the degree > 4 trust assumption)");
}

// ---------------------------------------------------------------------------

AlgebraicNumber::AlgebraicNumber() {
    field_ = NumberField::preset("rational");
    coeffs_.assign(1, Rational(0));
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, Rational value) {
    *this = field->element(value);
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, long value) {
    *this = field->element(Rational(value));
}

AlgebraicNumber AlgebraicNumber::from_coeffs(FieldPtr field, std::vector<Rational> coeffs) {
    if (!field) throw FieldError("null field");
    std::size_t d = static_cast<std::size_t>(field->degree());
    if (coeffs.size() > d) throw FieldError("coefficient vector longer than the field degree");
    coeffs.resize(d, Rational(0));
    for (auto& c : coeffs) c.canonicalize();
    AlgebraicNumber out;
    out.field_ = std::move(field);
    out.coeffs_ = std::move(coeffs);
    return out;
}

bool AlgebraicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool AlgebraicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw FieldError("value is irrational");
    return coeffs_[0];
}

int AlgebraicNumber::sign() const {
    return field_->sign_of(coeffs_);
}

void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.field() != b.field()) throw FieldError("mixed fields");
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v = -v;
    return from_coeffs(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return from_coeffs(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return from_coeffs(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
    require_same_field(*this, o);
    if (field_->degree() == 1) return from_coeffs(field_, {coeffs_[0] * o.coeffs_[0]});
    return from_coeffs(field_, field_->reduce_product(coeffs_, o.coeffs_));
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const {
    return *this * o.inverse();
}

AlgebraicNumber AlgebraicNumber::operator+(const Rational& r) const {
    std::vector<Rational> c = coeffs_;
    c[0] += r;
    return from_coeffs(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator-(const Rational& r) const {
    std::vector<Rational> c = coeffs_;
    c[0] -= r;
    return from_coeffs(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator*(const Rational& r) const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v *= r;
    return from_coeffs(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator/(const Rational& r) const {
    if (r == 0) throw FieldError("division by zero");
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v /= r;
    return from_coeffs(field_, std::move(c));
}

AlgebraicNumber operator+(const Rational& r, const AlgebraicNumber& a) {
    return a + r;
}
AlgebraicNumber operator-(const Rational& r, const AlgebraicNumber& a) {
    return (-a) + r;
}
AlgebraicNumber operator*(const Rational& r, const AlgebraicNumber& a) {
    return a * r;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (field_->degree() == 1 || is_rational()) {
        if (coeffs_[0] == 0) throw FieldError("division by zero");
        AlgebraicNumber out = field_->element(Rational(1) / coeffs_[0]);
        return out;
    }
    return from_coeffs(field_, field_->invert(coeffs_));
}

AlgebraicNumber AlgebraicNumber::pow(long e) const {
    if (e == 0) return field_->one();
    AlgebraicNumber base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    AlgebraicNumber out = field_->one();
    while (k > 0) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
    require_same_field(*this, o);
    return coeffs_ == o.coeffs_;
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_field(a, b);
    if (a.coeffs_ == b.coeffs_) return 0;
    std::vector<Rational> diff = a.coeffs_;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= b.coeffs_[i];
    return a.field_->sign_of(diff);
}

int AlgebraicNumber::struct_compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    for (std::size_t i = 0; i < std::min(a.coeffs_.size(), b.coeffs_.size()); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    return 0;
}

std::pair<Integer, AlgebraicNumber> AlgebraicNumber::floor_frac() const {
    if (is_rational()) {
        Integer k = rational_floor(coeffs_[0]);
        return {k, *this - Rational(k)};
    }
    for (int round = 0; round < 64; ++round) {
        auto [vlo, vhi] = field_->interval_value(coeffs_);
        Integer flo = rational_floor(vlo);
        Integer fhi = rational_floor(vhi);
        if (flo == fhi) return {flo, *this - Rational(flo)};
        auto [lo, hi] = field_->enclosure();
        Rational width = (hi - lo) / 4;
        if (width == 0) break;
        field_->refine_enclosure(width);
    }
    throw FieldError("floor did not converge; irrational value expected but enclosure collapsed");
}

std::string AlgebraicNumber::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << rational_to_string(abs_c);
        } else {
            if (abs_c != 1) out << rational_to_string(abs_c) << "*";
            out << "t";
            if (i >= 2) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::string AlgebraicNumber::coeff_str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ", ";
        out << rational_to_string(coeffs_[i]);
    }
    out << "]";
    return out.str();
}

double AlgebraicNumber::approx() const {
    field_->refine_enclosure(Rational(1, 1000000000));
    auto [vlo, vhi] = field_->interval_value(coeffs_);
    return (vlo.get_d() + vhi.get_d()) / 2;
}

int q_linear_rank(const std::vector<AlgebraicNumber>& values) {
    if (values.empty()) return 0;
    for (std::size_t i = 1; i < values.size(); ++i) require_same_field(values[0], values[i]);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(values.size());
    for (const auto& v : values) rows.push_back(v.coeffs());
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[row][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace ietlab
