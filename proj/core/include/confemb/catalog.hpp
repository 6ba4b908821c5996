#pragma once

#include <string>
#include <vector>

#include "confemb/critical.hpp"
#include "confemb/symmetric.hpp"

namespace confemb {

/// Converts a weight given in orthonormal epsilon coordinates to fundamental
/// weight coordinates. Supported: A_r (r+1 entries), B_r, C_r, D_r (r
/// entries); D3 is returned in A3 labelling.
Weight epsilon_weight(Family family, int rank, const std::vector<Rational>& eps);

/// A subalgebra with an explicitly recorded branching.
struct DeclaredEmbedding {
  std::string id;
  std::string description;
  ReductiveSubalgebra subalgebra;
  Branching branching;
  std::vector<std::string> notes;
};

/// sl(3) + u1 + u1 in so(8) with the center written in the basis (eta_1, eta)
/// of the standard matrix realization.
DeclaredEmbedding d4_example();

std::vector<DeclaredEmbedding> builtin_embeddings();

/// Maximal semisimple non-simple embeddings at the critical level, the two
/// multi-ideal special cases and a few controls, instantiated at small n.
std::vector<CriticalEntry> builtin_critical_catalog();

/// Classical symmetric pairs on a grid of ranks up to 8.
std::vector<SymmetricPair> builtin_symmetric_catalog();

}  // namespace confemb
