#pragma once

#include <gmpxx.h>

#include <string>

namespace ietlab {

// All exact scalar arithmetic is carried by GMP rationals. Every value the
// library computes with is either a Rational or a vector of Rationals
// (coordinates in a number-field basis); no floating point enters any result.
using Rational = mpq_class;
using Integer = mpz_class;

/// Largest integer <= q.
Integer rational_floor(const Rational& q);

/// q^e for e of either sign (throws FieldError on 0^negative).
Rational rational_pow(const Rational& q, long e);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rational rational_from_string(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string rational_to_string(const Rational& q);

}  // namespace ietlab
