#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confemb/embeddings.hpp"

namespace confemb {

/// The level k with n_j k + h_j = 0 for every simple ideal, when the ratios
/// h_j / n_j agree; the center does not constrain it.
std::optional<Rational> critical_level(const ReductiveSubalgebra& k);

/// lambda_ij = (mu_ij, mu_ij + 2 rho_j)_j: rows are components of p, columns
/// are simple ideals.
RationalMatrix sugawara_matrix(const ReductiveSubalgebra& k, const Branching& b);

/// Null space of lambda in reduced echelon normalization (free variables in
/// ascending order, first nonzero entry 1).
std::vector<RationalVector> kernel_vectors(const RationalMatrix& lambda);

enum class KernelVerdict { nontrivial, trivial };

/// A catalog embedding whose ideals may all sit at their critical levels.
struct CriticalEntry {
  std::string id;
  std::string description;
  ReductiveSubalgebra subalgebra;
  Branching branching;
  /// Level stated for the case, checked against critical_level.
  std::optional<Rational> stated_level;
  /// Lambda as printed in the literature when it is known to differ from the
  /// Casimir values; reported alongside the derived matrix.
  std::optional<RationalMatrix> printed_lambda;
  std::vector<std::string> notes;
};

struct CriticalCase {
  std::string id;
  std::string description;
  std::optional<Rational> level;
  RationalMatrix lambda;
  std::vector<RationalVector> kernel;
  KernelVerdict verdict = KernelVerdict::trivial;
  std::optional<RationalMatrix> printed_lambda;
  /// Set when a printed matrix exists and differs from lambda.
  bool printed_differs = false;
  std::vector<std::string> notes;
};

/// Analyzes one entry. Entries without a critical level are returned with
/// an empty level and no matrix.
CriticalCase analyze_critical(const CriticalEntry& entry);

std::vector<CriticalCase> critical_scan(const std::vector<CriticalEntry>& catalog);

const char* to_string(KernelVerdict v);

}  // namespace confemb
