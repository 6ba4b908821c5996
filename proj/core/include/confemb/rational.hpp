#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace confemb {

/// Exact rational scalar. Every quantity in the library (forms, Casimir
/// values, levels, central charges) is carried as one of these.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// n / d in lowest terms. mpq_class(n, d) does not reduce, and comparisons
/// on unreduced values are wrong, so every two-argument construction goes
/// through here. Throws std::invalid_argument when d = 0.
Rational ratio(const mpz_class& n, const mpz_class& d);

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// True for 1, 2, 3, ... (the integrable levels).
bool is_positive_integer(const Rational& value);

}  // namespace confemb
