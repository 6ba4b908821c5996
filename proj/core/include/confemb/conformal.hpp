#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "confemb/embeddings.hpp"
#include "confemb/polynomial.hpp"

namespace confemb {

/// Contributions to the AP sum of one component of p at a fixed level:
/// Cas_j(mu_j) / (2 (n_j k + h_j)) per ideal and |c|^2 / (2k) for the center.
struct ApTerms {
  std::vector<Rational> ideal_terms;
  Rational center_term = 0;
  Rational total() const;
};

/// Throws CriticalLevelError naming the ideal when n_j k + h_j = 0, and
/// std::domain_error when k = 0 meets a nonzero center weight.
ApTerms ap_terms(const ReductiveSubalgebra& k, const Branching& b, std::size_t component, const Rational& level);
Rational ap_value(const ReductiveSubalgebra& k, const Branching& b, std::size_t component, const Rational& level);

struct ApCheck {
  bool conformal = false;
  /// ap_value - 1 per component.
  std::vector<Rational> residuals;
};

ApCheck ap_check(const ReductiveSubalgebra& k, const Branching& b, const Rational& level);

/// Levels where a denominator of the criterion vanishes: -h_j/n_j for every
/// ideal, -h^vee(g), and 0 when k has a center. Ascending, distinct.
std::vector<Rational> excluded_levels(const ReductiveSubalgebra& k);

/// Numerator of (AP sum - 1) for one component after clearing the
/// denominators of its nonzero terms.
Polynomial ap_polynomial(const ReductiveSubalgebra& k, const Branching& b, std::size_t component);

struct ConformalVerdict {
  std::string embedding;
  /// Rational common solutions, excluded levels removed. Ascending.
  std::vector<Rational> levels;
  std::vector<Rational> excluded_levels;
  /// Common rational solutions dropped because they are excluded.
  std::vector<Rational> suppressed_levels;
  std::vector<Polynomial> component_polynomials;
  /// Monic gcd of the component polynomials.
  Polynomial common_factor;
  /// Part of common_factor with no rational roots (constant 1 when none).
  Polynomial irrational_factor;

  /// Levels that are not positive integers.
  std::vector<Rational> non_integrable_levels() const;
};

/// Throws std::domain_error("trivial embedding") for an empty branching.
ConformalVerdict conformal_levels(const ReductiveSubalgebra& k, const Branching& b);

/// sum_j c(k_j, n_j k) + dim k_0.
Rational central_charge(const ReductiveSubalgebra& k, const Rational& level);

/// c(k) = c(g) at `level`; throws on critical denominators.
bool central_charge_match(const ReductiveSubalgebra& k, const Rational& level);

/// Rational levels with c(k) = c(g), excluding critical levels and 0.
std::vector<Rational> central_charge_levels(const ReductiveSubalgebra& k);

/// One term of a chain. For every term after the first, `replaced_ideal`
/// indexes the ideal of the previous term that was split and `new_ideals`
/// lists the ideals of this term that replace it.
struct ChainLink {
  ReductiveSubalgebra subalgebra;
  std::size_t replaced_ideal = 0;
  std::vector<std::size_t> new_ideals;
  int new_center_dims = 0;
};

/// Tower g = links[0] > links[1] > ... > links.back() = k, each term a
/// maximal equal-rank subalgebra of one ideal of the previous term.
struct Chain {
  std::vector<ChainLink> links;

  std::size_t depth() const { return links.empty() ? 0 : links.size() - 1; }
  const ReductiveSubalgebra& bottom() const { return links.back().subalgebra; }
  /// "A2+u1+u1 < A3+u1 < D4".
  std::string to_string() const;
};

Chain trivial_chain(std::shared_ptr<const RootSystem> g);

/// Appends one step built from a child of the current bottom term.
Chain extend_chain(const Chain& chain, const IdealChild& child);

/// Parses "A2+u1+u1 < A3+u1 < D4". Each term is matched against the
/// children of the previous one; a token may carry an index ("A1[2]").
/// Throws std::invalid_argument for malformed or ambiguous input.
Chain parse_chain(const std::string& spec);

/// Resolves "D4/sl3+u1+u1" to a chain from the ambient algebra (before the
/// slash) down to a subalgebra matching the term, searching breadth-first up
/// to `max_depth` steps. Subalgebras with equal type keys are treated as one
/// candidate; distinct matching keys raise std::invalid_argument listing them.
Chain resolve_subalgebra(const std::string& spec, int max_depth = 6);

struct ChainStepReport {
  std::size_t step = 0;
  std::string replaced;
  std::string replacing;
  Rational replaced_charge = 0;
  Rational replacing_charge = 0;
  bool equal = false;
};

struct ChainCheck {
  bool conformal = false;
  std::vector<ChainStepReport> steps;
};

/// Central-charge equality between the replaced ideal and its replacement at
/// every step. Throws CriticalLevelError naming the step on a critical level.
ChainCheck chain_conformal_check(const Chain& chain, const Rational& level);

/// Rational solutions of one step's central-charge equation (critical levels
/// and 0 removed). `step` is 1-based.
std::vector<Rational> chain_step_levels(const Chain& chain, std::size_t step);

/// Levels common to every step.
std::vector<Rational> chain_levels(const Chain& chain);

struct ChainLevel {
  Chain chain;
  Rational level;
};

/// Depth-first enumeration of chains of depth 1..max_depth and their
/// conformal levels. Positive integer levels are skipped unless
/// include_integrable is set. Deduplicated by the sequence of term type keys
/// and sorted by (depth, level, chain string).
std::vector<ChainLevel> enumerate_conformal_chains(std::shared_ptr<const RootSystem> g, int max_depth,
                                                   bool include_integrable = false);

}  // namespace confemb
