#include "confemb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace confemb {

Polynomial::Polynomial(RationalVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(RationalVector{c}); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial(RationalVector{b, a}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational lead = leading();
  RationalVector c = coeffs_;
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  RationalVector c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  RationalVector c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (d == 0 || !unit) out << confemb::to_string(mag);
    if (d >= 1) {
      if (!unit) out << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalVector rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  RationalVector quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    const Rational q = rem[static_cast<std::size_t>(d)] / lead;
    quot[static_cast<std::size_t>(d - db)] = q;
    if (sgn(q) == 0) continue;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(d - db + i)] -= q * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<mpz_class> primitive_integer_coefficients(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("primitive part of the zero polynomial");
  mpz_class denom_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.get_num() * (denom_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return ints;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  if (n == 0) throw std::domain_error("divisors of zero");
  mpz_class m = abs(n);
  // Factor by trial division, then expand the divisor lattice.
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = divs.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RationalRootSplit split_rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  RationalRootSplit out;
  Polynomial rest = p.monic();

  // Zero roots first, so the constant term is nonzero for the divisor scan.
  bool zero_root = false;
  while (rest.degree() >= 1 && sgn(rest.coefficient(0)) == 0) {
    rest = divmod(rest, Polynomial::linear(1, 0)).first;
    zero_root = true;
  }
  if (zero_root) out.roots.push_back(0);

  if (rest.degree() >= 1) {
    const auto ints = primitive_integer_coefficients(rest);
    const auto ps = positive_divisors(ints.front());
    const auto qs = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& num : ps)
      for (const auto& den : qs) {
        const Rational r = ratio(num, den);
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
      if (rest.degree() < 1) break;
      bool found = false;
      while (rest.degree() >= 1 && sgn(rest(c)) == 0) {
        rest = divmod(rest, Polynomial::linear(1, -c)).first;
        found = true;
      }
      if (found) out.roots.push_back(c);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = rest.monic();
  return out;
}

}  // namespace confemb
