#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "confemb/embeddings.hpp"

namespace confemb {

/// A symmetric pair (r, k) given by its eigenspace data: k and the k-module
/// V with r = k + V. The involution itself is never represented.
struct SymmetricPair {
  std::string name;
  std::string family;
  /// Simple summands of k.
  std::vector<SimpleLieType> simple;
  /// Dimension of the center of k.
  int abelian_dim = 0;
  /// V as a k-module; ideal weights follow `simple`, center weights have
  /// `abelian_dim` entries.
  std::vector<BranchingComponent> isotropy;
  std::int64_t dim_r = 0;
  /// Lambda^2 V minus k as a k-module, when known.
  std::optional<std::vector<BranchingComponent>> so_complement;
};

std::int64_t k_dimension(const SymmetricPair& pair);
std::int64_t isotropy_dimension(const SymmetricPair& pair);

/// Dynkin index of V as a module for simple summand j.
Rational isotropy_index(const SymmetricPair& pair, std::size_t j);

/// sum_j dim k_j / (1 + g_j) + dim k_0 - dim V / 2 with g_j = h_j / n_j.
/// Zero for a genuine symmetric pair. Throws std::invalid_argument when
/// dim_r disagrees with dim k + dim V or a weight is malformed.
Rational sst_identity_check(const SymmetricPair& pair);

/// k inside so(V): one declared ideal per simple summand with index
/// isotropy_index. Rejects pairs whose k is abelian, has a center, or fills
/// so(V), and dim V < 5.
ReductiveSubalgebra so_v_embedding(const SymmetricPair& pair);

/// AP criterion at level 1 for k in so(V) with the given complement.
bool sst_level_one_ap(const SymmetricPair& pair, const std::vector<BranchingComponent>& so_complement);

/// Altered copies used to show the identity is sharp: "drop" removes the
/// first component (only when there are several), "double" doubles the first
/// multiplicity, "shift" adds the last fundamental weight to the first
/// nonzero ideal weight (adding omega_1 can turn V into the isotropy module
/// of another genuine pair).
/// dim_r is kept consistent so the residual, not validation, reacts.
std::vector<std::pair<std::string, SymmetricPair>> mutations(const SymmetricPair& pair);

struct LevelBoundReport {
  int m = 0;
  std::size_t weights_checked = 0;
  /// Largest k solving (lambda, lambda + 2 rho) = 4 (k + m - 2).
  Rational max_level = 0;
  std::vector<Rational> positive_integer_levels;
  /// max (rho, alpha) over roots, expected m - 3.
  Rational max_rho_pairing = 0;
  /// max |lambda|^2, expected 8.
  Rational max_norm = 0;
  bool ok = false;
};

/// Exhaustive check over lambda in {0} + roots + sums of two roots of so(m).
LevelBoundReport level_bound_check(int m);

}  // namespace confemb
