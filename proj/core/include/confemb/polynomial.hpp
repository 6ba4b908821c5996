#pragma once

#include <string>
#include <utility>
#include <vector>

#include "confemb/rational.hpp"

namespace confemb {

/// Univariate polynomial over Q, coefficients stored from the constant term
/// upwards. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RationalVector coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// a*x + b
  static Polynomial linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const RationalVector& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the variable `var`, highest power first.
  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  RationalVector coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Scales a nonzero polynomial to integer coefficients with content 1 and a
/// positive leading coefficient.
std::vector<mpz_class> primitive_integer_coefficients(const Polynomial& p);

struct RationalRootSplit {
  /// Distinct rational roots, ascending.
  std::vector<Rational> roots;
  /// Monic cofactor left after dividing out every rational root with its
  /// multiplicity; it has no rational roots.
  Polynomial residual;
};

/// Rational roots via the rational root theorem applied to the primitive
/// integer form. Throws std::domain_error for the zero polynomial.
RationalRootSplit split_rational_roots(const Polynomial& p);

/// Positive divisors of |n| in ascending order (n != 0).
std::vector<mpz_class> positive_divisors(const mpz_class& n);

}  // namespace confemb
