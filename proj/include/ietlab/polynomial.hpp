#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ietlab/rational.hpp"

namespace ietlab::poly {

// Dense univariate polynomials over Q, coefficient order c0 + c1*x + ...
// The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.
using Poly = std::vector<Rational>;

Poly normalized(Poly p);
int degree(const Poly& p);  // -1 for the zero polynomial
bool is_zero(const Poly& p);

Rational eval(const Poly& p, const Rational& x);
Poly derivative(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

/// Euclidean division, b nonzero: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd over Q.
Poly gcd(Poly a, Poly b);

/// Number of distinct real roots of a square-free p in (lo, hi].
/// Standard Sturm-sequence count.
long count_roots(const Poly& p, const Rational& lo, const Rational& hi);

enum class Irreducibility { irreducible, reducible, unknown };

/// Complete irreducibility test over Q for degree <= 4 whenever the involved
/// integer constants can be factored at desk scale; degree >= 5 or
/// out-of-reach factorizations report `unknown`.
Irreducibility irreducible_over_q(const Poly& monic);

}  // namespace ietlab::poly
