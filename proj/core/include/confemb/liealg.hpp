#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "confemb/matrix.hpp"
#include "confemb/rational.hpp"

namespace confemb {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of a simple Lie algebra, Bourbaki labelling.
struct SimpleLieType {
  Family family = Family::A;
  int rank = 1;

  /// Validates rank bounds (A>=1, B>=2, C>=2, D>=3, E 6..8, F4, G2).
  static SimpleLieType make(Family family, int rank);

  /// Accepts Cartan labels ("E8", "d4") and classical names ("sl3",
  /// "so8", "sp4", "so(9)", "sp(6)"). The result is canonical.
  static SimpleLieType parse(std::string_view text);

  /// D3 is returned as A3 and C2 as B2; everything else is unchanged.
  SimpleLieType canonical() const;

  std::string name() const;
  int dimension() const;

  auto operator<=>(const SimpleLieType&) const = default;
};

/// Root in simple-root coordinates.
using Root = std::vector<int>;

/// Weight in fundamental-weight coordinates of a specific root system.
struct Weight {
  RationalVector coords;

  Weight() = default;
  explicit Weight(RationalVector c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank);
  static Weight fundamental(std::size_t rank, std::size_t i);
  static Weight from_ints(const std::vector<int>& values);

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  bool dominant_integral() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(const Rational& s, const Weight& w);
  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }
};

/// Raised when a level sits at k + h^vee = 0.
class CriticalLevelError : public std::domain_error {
 public:
  CriticalLevelError(const std::string& what, std::string algebra)
      : std::domain_error(what), algebra_(std::move(algebra)) {}
  const std::string& algebra() const { return algebra_; }

 private:
  std::string algebra_;
};

/// Root system of a simple Lie algebra with the invariant form normalized so
/// that long roots have squared length 2.
///
/// Roots are generated by string closure from the simple roots and stored
/// sorted by (height, coordinates). All accessors are const; instances are
/// immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(SimpleLieType type);

  const SimpleLieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int dimension() const { return static_cast<int>(roots_.size()) + rank(); }

  /// a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// (alpha_i, alpha_j).
  const RationalMatrix& gram() const { return gram_; }
  /// (omega_i, omega_j).
  const RationalMatrix& weight_gram() const { return weight_gram_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::vector<Root> simple_roots() const;
  bool is_root(const Root& r) const { return root_set_.contains(r); }

  const Root& theta() const { return theta_; }
  Weight theta_weight() const { return to_weight(theta_); }
  /// Extended-diagram labels: entry 0 is the affine node (always 1), entry i
  /// the coefficient of alpha_i in theta.
  std::vector<int> marks() const;
  Weight rho() const { return Weight(RationalVector(static_cast<std::size_t>(rank()), Rational(1))); }

  Weight to_weight(const Root& r) const;
  Rational root_form(const Root& a, const Root& b) const;
  /// (lambda, alpha) for a weight and a root.
  Rational pairing(const Weight& w, const Root& r) const;
  Rational norm(const Root& r) const { return root_form(r, r); }
  const Rational& simple_norm(std::size_t i) const { return gram_(i, i); }
  int height(const Root& r) const;

  /// Gram matrix of {-theta, alpha_1, ..., alpha_r}.
  RationalMatrix extended_gram() const;
  /// Cartan matrix of the extended diagram, node 0 = -theta.
  std::vector<std::vector<int>> extended_cartan() const;

 private:
  SimpleLieType type_;
  std::vector<std::vector<int>> cartan_;
  RationalMatrix gram_;
  RationalMatrix weight_gram_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::set<Root> root_set_;
  Root theta_;
};

/// Builds and validates a root system; D3 yields the A3 system.
/// Throws std::invalid_argument for invalid ranks.
RootSystem build_root_system(SimpleLieType type);

/// Shared immutable instance; repeated requests for the same type return the
/// same object. Thread-safe.
std::shared_ptr<const RootSystem> shared_root_system(SimpleLieType type);

/// Symmetric Gram matrix of the simple roots of `type` (long roots norm 2).
RationalMatrix simple_root_gram(SimpleLieType type);

Rational form(const RootSystem& rs, const Weight& a, const Weight& b);

/// h^vee = (rho, theta) + 1.
int dual_coxeter(const RootSystem& rs);

/// (lambda, lambda + 2 rho). Requires a dominant integral weight.
Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula. Requires a dominant integral weight.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

/// k dim g / (k + h^vee); throws CriticalLevelError at k = -h^vee.
Rational central_charge(const RootSystem& rs, const Rational& k);

/// Abelian summand of dimension d (h^vee = 0): the value is d for k != 0.
Rational central_charge_abelian(int dim, const Rational& k);

/// Orbit of a weight under the Weyl group, sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

}  // namespace confemb
