#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confemb/liealg.hpp"

namespace confemb {

/// A simple ideal k_j of a reductive subalgebra.
struct Ideal {
  SimpleLieType type;
  /// Simple roots of the ideal in ambient simple-root coordinates, listed in
  /// the Bourbaki order of `type`. Empty for declared (non-regular) ideals.
  std::vector<Root> simple_roots;
  /// Dynkin index n_j: the ambient form restricted to k_j is n_j times the
  /// normalized form of k_j. Levels transform as k_j = n_j k.
  Rational index = 1;
  std::shared_ptr<const RootSystem> system;

  int dual_coxeter() const { return confemb::dual_coxeter(*system); }
  int dimension() const { return system->dimension(); }
  /// "A3", or "A1[2]" when the index differs from 1.
  std::string label() const;
};

Ideal make_declared_ideal(SimpleLieType type, const Rational& index);

/// Reductive subalgebra k = k_0 + k_1 + ... + k_t of a simple algebra g.
///
/// The center k_0 has dimension `center_dim`. Center weights are written in
/// the basis eta_1..eta_d of k_0^* dual to an orthogonal basis z_1..z_d of
/// k_0; `center_form[i]` is (eta_i, eta_i) for the ambient form, so a center
/// weight c has squared length sum_i c_i^2 center_form[i].
struct ReductiveSubalgebra {
  std::shared_ptr<const RootSystem> ambient;
  std::vector<Ideal> ideals;
  int center_dim = 0;
  /// z_i as vectors of h^* in ambient simple-root coordinates, pairwise
  /// orthogonal and orthogonal to every ideal root. Empty when declared.
  std::vector<RationalVector> center_basis;
  RationalVector center_form;
  std::string name;

  /// Every ideal carries ambient simple roots and the center basis is explicit.
  bool regular() const;
  int rank() const;
  bool equal_rank() const { return rank() == ambient->rank(); }
  int dimension() const;
  /// k = g.
  bool is_whole() const;

  /// Ideals sorted by label, then "u1" once per center dimension, joined by '+'.
  std::string type_key() const;
  /// Like type_key but without indices and with 'x' separators, e.g. "A1xA5".
  std::string display_name() const;

  /// Roots of k in ambient coordinates (regular subalgebras only).
  std::vector<Root> roots() const;

  /// The whole algebra as a one-ideal subalgebra of itself.
  static ReductiveSubalgebra whole(std::shared_ptr<const RootSystem> g);
};

/// Regular subalgebra spanned by the root subsystem with simple system
/// `simple_roots` (ambient coordinates), plus a center.
///
/// The center basis starts with `center_seed` (each vector must be orthogonal
/// to the roots and to the earlier seeds); when `fill_center` is set it is
/// completed to an orthogonal basis of the orthocomplement of the roots, so
/// the result is equal-rank. Ideals are identified by Cartan matrix
/// isomorphism and sorted canonically. Throws std::invalid_argument if a
/// vector is not an ambient root or the roots do not form a simple system.
ReductiveSubalgebra regular_subalgebra(std::shared_ptr<const RootSystem> g, const std::vector<Root>& simple_roots,
                                       const std::vector<RationalVector>& center_seed = {}, bool fill_center = true);

/// Equal-rank subalgebra obtained by deleting `deleted` nodes from the
/// extended Dynkin diagram (node 0 is -theta).
ReductiveSubalgebra equal_rank_subalgebra(std::shared_ptr<const RootSystem> g, std::vector<int> deleted);

struct MaximalSubalgebra {
  ReductiveSubalgebra subalgebra;
  /// Deleted extended-diagram nodes: {i} for prime marks, {0, i} for Levi.
  std::vector<int> deleted_nodes;
  /// Number of listed candidates equivalent to this one under automorphisms
  /// of the extended diagram.
  int orbit_size = 1;
};

/// Maximal equal-rank reductive subalgebras up to extended-diagram symmetry,
/// ordered by the deleted non-affine node.
std::vector<MaximalSubalgebra> borel_de_siebenthal(std::shared_ptr<const RootSystem> g);
std::vector<MaximalSubalgebra> borel_de_siebenthal(SimpleLieType type);

/// Automorphisms of a Cartan-type matrix as node permutations (perm[i] is the
/// image of node i), the identity first.
std::vector<std::vector<int>> diagram_automorphisms(const std::vector<std::vector<int>>& cartan);

/// A maximal equal-rank subalgebra of one ideal, spliced into k.
struct IdealChild {
  ReductiveSubalgebra subalgebra;
  std::size_t replaced_ideal = 0;
  /// Positions in subalgebra.ideals of the ideals that replace it.
  std::vector<std::size_t> new_ideals;
  int new_center_dims = 0;
  std::vector<int> deleted_nodes;
  int orbit_size = 1;
};

/// Children of k obtained by replacing ideal j with each of its
/// Borel-de Siebenthal subalgebras. Requires a regular k.
std::vector<IdealChild> maximal_subalgebras_of_ideal(const ReductiveSubalgebra& k, std::size_t j);

struct BranchingComponent {
  /// One weight per ideal, in that ideal's fundamental-weight coordinates.
  std::vector<Weight> ideal_weights;
  RationalVector center_weight;
  int multiplicity = 1;

  friend bool operator==(const BranchingComponent&, const BranchingComponent&) = default;
};

enum class BranchingSource { computed, declared };

struct Branching {
  std::vector<BranchingComponent> components;
  BranchingSource source = BranchingSource::computed;
};

struct BranchingReport {
  bool ok = true;
  std::int64_t expected_dimension = 0;  // dim g - dim k
  std::int64_t actual_dimension = 0;    // sum of mult * prod dims
  std::vector<std::string> problems;
};

/// Thrown by declare_branching when the dimension count does not close.
class BranchingError : public std::invalid_argument {
 public:
  BranchingError(const std::string& what, BranchingReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const BranchingReport& report() const { return report_; }

 private:
  BranchingReport report_;
};

/// Decomposition of the orthocomplement p for a regular equal-rank k.
/// Components are sorted by (ideal weights, center weight).
Branching orthocomplement_branching(const ReductiveSubalgebra& k);

/// Highest-weight roots of p (ambient coordinates), in root order.
std::vector<Root> highest_weight_roots(const ReductiveSubalgebra& k);

/// Wraps caller-supplied components after validation.
Branching declare_branching(const ReductiveSubalgebra& k, std::vector<BranchingComponent> components);

BranchingReport validate_branching(const ReductiveSubalgebra& k, const Branching& b);

/// Dimension of one component: multiplicity times the product of Weyl dimensions.
std::int64_t component_dimension(const ReductiveSubalgebra& k, const BranchingComponent& c);

/// (highest weight, multiplicity) pairs.
using Representation = std::vector<std::pair<Weight, std::int64_t>>;

/// I = sum mult dim(V) Cas(V) / (2 dim k_j). Equals 1 on the vector
/// representation of so(n) and h^vee on the adjoint representation.
/// Throws std::invalid_argument for a zero-dimensional representation.
Rational dynkin_index_of_rep(SimpleLieType type, const Representation& rep);

/// p restricted to ideal j: each component contributes its j-th weight with
/// multiplicity mult times the dimensions of the other factors.
Representation restrict_to_ideal(const ReductiveSubalgebra& k, const Branching& b, std::size_t j);

/// Squared length of a center weight under the center form.
Rational center_norm(const ReductiveSubalgebra& k, const RationalVector& center_weight);

/// Rescales a nonzero rational vector to coprime integers (first nonzero
/// entry positive).
RationalVector primitive_vector(const RationalVector& v);

}  // namespace confemb
