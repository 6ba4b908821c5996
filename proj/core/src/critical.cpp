#include "confemb/critical.hpp"

namespace confemb {

std::optional<Rational> critical_level(const ReductiveSubalgebra& k) {
  if (k.ideals.empty()) return std::nullopt;
  const Rational first = Rational(-k.ideals.front().dual_coxeter()) / k.ideals.front().index;
  for (const auto& I : k.ideals)
    if (Rational(-I.dual_coxeter()) / I.index != first) return std::nullopt;
  return first;
}

RationalMatrix sugawara_matrix(const ReductiveSubalgebra& k, const Branching& b) {
  RationalMatrix lambda(b.components.size(), k.ideals.size());
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    const auto& c = b.components[i];
    if (c.ideal_weights.size() != k.ideals.size()) throw std::invalid_argument("component/ideal count mismatch");
    for (std::size_t j = 0; j < k.ideals.size(); ++j)
      lambda(i, j) = casimir_eigenvalue(*k.ideals[j].system, c.ideal_weights[j]);
  }
  return lambda;
}

std::vector<RationalVector> kernel_vectors(const RationalMatrix& lambda) { return null_space(lambda); }

CriticalCase analyze_critical(const CriticalEntry& entry) {
  CriticalCase out;
  out.id = entry.id;
  out.description = entry.description;
  out.notes = entry.notes;
  out.printed_lambda = entry.printed_lambda;
  out.level = critical_level(entry.subalgebra);
  if (!out.level) return out;
  out.lambda = sugawara_matrix(entry.subalgebra, entry.branching);
  out.kernel = kernel_vectors(out.lambda);
  out.verdict = out.kernel.empty() ? KernelVerdict::trivial : KernelVerdict::nontrivial;
  if (entry.printed_lambda) out.printed_differs = !(*entry.printed_lambda == out.lambda);
  return out;
}

std::vector<CriticalCase> critical_scan(const std::vector<CriticalEntry>& catalog) {
  std::vector<CriticalCase> out;
  out.reserve(catalog.size());
  for (const auto& e : catalog) out.push_back(analyze_critical(e));
  return out;
}

const char* to_string(KernelVerdict v) { return v == KernelVerdict::nontrivial ? "nontrivial-kernel" : "trivial-kernel"; }

}  // namespace confemb
