#include "ietlab/rational.hpp"

#include <cctype>

#include "ietlab/error.hpp"

namespace ietlab {

Integer rational_floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool negative = e < 0;
    unsigned long k = negative ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (negative && q == 0) throw FieldError("0 cannot be raised to a negative power");
    Rational base = negative ? Rational(q.get_den(), q.get_num()) : q;
    base.canonicalize();
    Rational out(1);
    while (k > 0) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

Rational rational_from_string(const std::string& text) {
    // Strict validation first; mpq_class's own parser is too permissive.
    auto fail = [&]() { throw ParseError("malformed rational literal '" + text + "'", 1, 1); };
    std::size_t i = 0;
    auto scan_int = [&]() {
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0) fail();
    };
    scan_int();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        scan_int();
        if (i != text.size()) fail();
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) fail();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 1, 1);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace ietlab
