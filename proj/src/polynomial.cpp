#include "ietlab/polynomial.hpp"

#include <algorithm>

#include "ietlab/error.hpp"

namespace ietlab::poly {

Poly normalized(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const Poly& p) {
    return static_cast<int>(p.size()) - 1;
}

bool is_zero(const Poly& p) {
    return p.empty();
}

Rational eval(const Poly& p, const Rational& x) {
    Rational v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    return normalized(std::move(d));
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return normalized(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return normalized(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return normalized(std::move(out));
}

Poly scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& v : out) v *= c;
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (is_zero(b)) throw FieldError("polynomial division by zero");
    Poly r = a;
    Poly q;
    int db = degree(b);
    if (degree(r) >= db) q.assign(static_cast<std::size_t>(degree(r) - db) + 1, Rational(0));
    while (degree(r) >= db) {
        int k = degree(r) - db;
        Rational c = r.back() / b.back();
        q[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + k)] -= c * b[static_cast<std::size_t>(i)];
        r = normalized(std::move(r));
    }
    return {normalized(std::move(q)), std::move(r)};
}

Poly gcd(Poly a, Poly b) {
    a = normalized(std::move(a));
    b = normalized(std::move(b));
    while (!is_zero(b)) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

namespace {

int sign_of(const Rational& q) {
    return sgn(q);
}

long sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    long variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_of(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace

long count_roots(const Poly& p, const Rational& lo, const Rational& hi) {
    if (is_zero(p)) throw FieldError("Sturm count of the zero polynomial");
    std::vector<Poly> chain;
    chain.push_back(normalized(p));
    Poly d = derivative(p);
    if (!is_zero(d)) chain.push_back(d);
    while (chain.size() >= 2 && degree(chain.back()) > 0) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (is_zero(r)) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

namespace {

// Divisors of |n| (both signs ignored; caller adds signs). Empty optional
// when n resists factoring at desk scale.
std::optional<std::vector<Integer>> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer cofactor = n;
    for (Integer p = 2; p * p <= cofactor && p < 1000000; p == 2 ? p = 3 : p += 2) {
        unsigned e = 0;
        while (mpz_divisible_p(cofactor.get_mpz_t(), p.get_mpz_t())) {
            cofactor /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    }
    if (cofactor > 1) {
        if (mpz_probab_prime_p(cofactor.get_mpz_t(), 32) > 0) {
            factors.emplace_back(cofactor, 1);
        } else {
            return std::nullopt;  // composite with no small factor: give up honestly
        }
    }
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = out.size();
        Integer pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Substitute x = y/D and clear denominators: returns the monic integer
// polynomial q(y) = D^d p(y/D) where D = lcm of coefficient denominators.
std::vector<Integer> monic_integer_model(const Poly& p) {
    Integer den(1);
    for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    int d = degree(p);
    std::vector<Integer> q(p.size());
    Integer power(1);  // D^(d-i)
    for (int i = d; i >= 0; --i) {
        Rational scaled = p[static_cast<std::size_t>(i)] * Rational(power);
        q[static_cast<std::size_t>(i)] = scaled.get_num();  // denominator is 1 by construction
        power *= den;
    }
    return q;
}

Integer ieval(const std::vector<Integer>& q, const Integer& x) {
    Integer v(0);
    for (auto it = q.rbegin(); it != q.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace

Irreducibility irreducible_over_q(const Poly& monic) {
    int d = degree(monic);
    if (d <= 0) return Irreducibility::reducible;
    if (d == 1) return Irreducibility::irreducible;
    if (d > 4) return Irreducibility::unknown;

    std::vector<Integer> q = monic_integer_model(monic);
    if (q[0] == 0) return Irreducibility::reducible;  // root at 0

    // Rational roots of p <-> integer roots of the monic model, and those
    // divide the constant term.
    auto divs = divisors(q[0]);
    if (!divs) return Irreducibility::unknown;
    for (const auto& u : *divs) {
        if (ieval(q, u) == 0 || ieval(q, -u) == 0) return Irreducibility::reducible;
    }
    if (d <= 3) return Irreducibility::irreducible;

    // Degree 4: the only remaining factorization shape is two monic integer
    // quadratics (y^2 + a y + b)(y^2 + c y + e).
    const Integer& q0 = q[0];
    const Integer& q1 = q[1];
    const Integer& q2 = q[2];
    const Integer& q3 = q[3];
    for (const auto& babs : *divs) {
        for (int bs = 0; bs < 2; ++bs) {
            Integer b = bs ? -babs : babs;
            if (!mpz_divisible_p(q0.get_mpz_t(), b.get_mpz_t())) continue;
            Integer e = q0 / b;
            // a + c = q3, a*e + c*b = q1, b + e + a*c = q2.
            if (b != e) {
                Integer num = q1 - q3 * b;
                Integer den = e - b;
                if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
                Integer a = num / den;
                Integer c = q3 - a;
                if (b + e + a * c == q2) return Irreducibility::reducible;
            } else {
                if (q1 != q3 * b) continue;
                // a + c = q3 and a*c = q2 - 2b: integer solutions iff the
                // discriminant is a perfect square.
                Integer disc = q3 * q3 - 4 * (q2 - 2 * b);
                if (disc < 0) continue;
                Integer root;
                mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
                if (root * root == disc && mpz_even_p(Integer(q3 + root).get_mpz_t()))
                    return Irreducibility::reducible;
            }
        }
    }
    return Irreducibility::irreducible;
}

}  // namespace ietlab::poly
